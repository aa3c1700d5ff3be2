# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
Exhaustive scan of tensor families, used as an oracle for the pruned
search. Shares nothing with gammaforge.enumeration.search but the types.
"""

# Std imports
from itertools import product

# Third pary imports
import numpy as np

# Local imports
from ..core.axioms import verify_structure
from ..core.exceptions import CapExceeded, StructureError
from ..core.structure import AdditiveTable, GammaSemiring

MAX_FREE_CELLS = 16
MAX_CANDIDATES = 2 ** 20


def _orbit_cells(n, symmetric):
    # One representative (sorted for symmetric mode) per group of cells
    # that must carry the same value; cells with a 0 are excluded
    groups = {}
    for idx in np.ndindex(n, n, n):
        if 0 in idx:
            continue
        key = tuple(sorted(idx)) if symmetric else idx
        groups.setdefault(key, []).append(idx)
    return [groups[k] for k in sorted(groups)]


def naive_candidate_count(n, g, mode):
    """Number of tensor families scanned by naive_enumerate."""
    return n ** (g * len(_orbit_cells(n, mode.symmetric)))


def naive_enumerate(add, cfg):
    """
    All valid tensor families over an additive table by scanning every
    assignment of the free cells and filtering with verify_structure.

    Parameters
    ----------
    add: AdditiveTable | array-like
    cfg: SearchConfig

    Returns
    -------
    structures: list of GammaSemiring

    Raises
    ------
    StructureError
        When the order of add is not cfg.n
    CapExceeded
        With more than 16 free cells or more than 2**20 candidates
    """

    table = AdditiveTable(add)
    if table.n != cfg.n:
        raise StructureError(f"Additive table of order {table.n} for a scan "
                             f"of order {cfg.n}")
    n, g, mode = table.n, cfg.g, cfg.axiom_mode
    groups = _orbit_cells(n, mode.symmetric)
    n_free = g * len(groups)
    if n_free > MAX_FREE_CELLS or n ** n_free > MAX_CANDIDATES:
        raise CapExceeded(f"Naive scan over {n_free} free cells "
                          f"({n ** n_free} candidates) exceeds the cap of "
                          f"{MAX_FREE_CELLS} cells and {MAX_CANDIDATES} "
                          f"candidates")

    out = []
    for values in product(range(n), repeat=n_free):
        ops = np.zeros((g, n, n, n), dtype=np.int64)
        k = 0
        for gi in range(g):
            for cells in groups:
                for cell in cells:
                    ops[(gi,) + cell] = values[k]
                k += 1
        s = GammaSemiring(table, ops, mode)
        if verify_structure(s).valid:
            out.append(s)

    return out
