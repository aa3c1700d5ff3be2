from .exceptions import (StructureError, ContractViolation,
                         InvariantViolation, CapExceeded,
                         StepBudgetExhausted, EmptyDatasetError,
                         DataFormatError)
from .structure import (AxiomConfig, AdditiveTable, TernaryTensor,
                        GammaSemiring, Violation, ValidityReport)
from .subsets import IdealSet, Congruence, is_ideal, is_congruence
from .axioms import validate_additive, verify_structure
from .constructions import (cyclic_group_table, chain_semilattice_table,
                            trivial_structure, boolean_structure,
                            zero_multiplication, direct_product,
                            duplicate_gamma, quotient_by_congruence,
                            bourne_congruence, bourne_quotient, substructure)
from .homomorphism import (HomMap, is_homomorphism, kernel,
                           kernel_congruence, image, image_and_first_iso,
                           FirstIsomorphism)
