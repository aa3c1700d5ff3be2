from .monoids import enumerate_additive_monoids
from .search import (SearchConfig, SearchStats, free_cells,
                     generate_ternary_tables)
from .classes import ClassRecord, work_items, enumerate_classes
from .naive import naive_enumerate, naive_candidate_count
from .sampling import SamplingReport, sample_random
