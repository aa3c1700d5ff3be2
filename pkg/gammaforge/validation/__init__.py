from .brute_force import (brute_isomorphism, brute_automorphism_count,
                          all_homomorphisms, naive_monoid_count)
from .cross_checks import (oracle_equivalence, canonical_soundness,
                           automorphism_check, first_isomorphism_sweep,
                           monoid_count_check, class_count_check)
