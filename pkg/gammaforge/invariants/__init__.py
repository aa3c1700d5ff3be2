from .ideals import (ideals, generated_ideal, is_prime, prime_ideals,
                     radical, radical_proportion, compute_ideal_count,
                     IdealCount)
from .congruences import (restricted_growth_strings, congruences, is_simple,
                          congruence_density, radical_decomposition,
                          compute_congruence_count, CongruenceCount)
from .spectrum import (Spectrum, spectrum, SpectrumLaws,
                       check_closed_set_laws, induced_map)
from .structural_entropy import (entropy_from_orbits, compute_entropy,
                                 StructuralEntropy, ENTROPY_MODES)
from .signature import (TypeLabel, InvariantSignature, classify_type,
                        signature, compute_signature_battery,
                        SignatureBattery, is_additively_idempotent,
                        is_additive_group, has_ternary_identity)

entropy = compute_entropy
