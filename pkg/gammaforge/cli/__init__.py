from .serialization import (dumps, loads, read_structures, write_structures,
                            structure_to_dict)
from .cache import ResultCache, cache_key, default_cache_dir
from .manifest import RunManifest, file_digest
from .commands import main, build_parser
