from .dataset import (SignatureDataset, build_dataset, equivalence_report,
                      common_mode,
                      SIGNATURE_VECTOR)
from .correlation import correlation_report, entropy_simplicity_table
from .regression import (RegressionResult, regression_fit,
                         solve_normal_equations, design_matrix)
from .pca import (PcaProjection, pca_projection, jacobi_eigh,
                  normalize_signatures, gnuplot_script)
from .stability import stability_check
from .growth import growth_table, storage_cost
from .subvarieties import subvariety_flags, subvariety_tally
from .published import (CLAIMED_AUT_ORDERS, CLAIMED_RUNTIMES,
                        CLAIMED_REGRESSION_R, CLAIMED_KAPPA_RHO,
                        CLAIMED_AUT_DOUBLING)
