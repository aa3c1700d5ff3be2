from .canonical_form import (CanonicalForm, canonical_form, serialize,
                             decode, element_invariants,
                             BATCH_SIZE, HEADER)
from .automorphisms import (PermGroup, is_isomorphism, isomorphism_witness,
                            automorphism_group, additive_automorphisms,
                            orbits_of, orbit_partition)
