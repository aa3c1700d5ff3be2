# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
Brute-force oracles. Nothing here uses canonical forms, invariant refinement
or the pruned search; every answer comes from scanning the full candidate
space.
"""

# Std imports
from itertools import product

# Third pary imports
import numpy as np

# Local imports
from ..core.axioms import validate_additive
from ..core.exceptions import CapExceeded, StructureError
from ..core.homomorphism import HomMap, is_homomorphism
from ..utils.tools import zero_fixing_permutations

MAX_HOM_CANDIDATES = 10 ** 5
MAX_MONOID_ORDER = 4


def _preserves(s1, s2, phi):
    if not np.array_equal(phi[s1.sum_table], s2.sum_table[np.ix_(phi, phi)]):
        return False
    return all(np.array_equal(phi[op1], op2[np.ix_(phi, phi, phi)])
               for op1, op2 in zip(s1.ops, s2.ops))


def brute_isomorphism(s1, s2):
    """
    First 0-fixing bijection (in lexicographic order) that is an
    isomorphism s1 -> s2.

    Parameters
    ----------
    s1, s2: GammaSemiring

    Returns
    -------
    perm: tuple | None
        Image tuple, None when no bijection works
    """

    if s1.n != s2.n or s1.g != s2.g or s1.mode != s2.mode:
        return None
    for perm in zero_fixing_permutations(s1.n):
        if _preserves(s1, s2, np.array(perm, dtype=np.int64)):
            return tuple(perm)
    return None


def brute_automorphism_count(s):
    """Number of 0-fixing permutations that are automorphisms of s."""
    return sum(_preserves(s, s, np.array(perm, dtype=np.int64))
               for perm in zero_fixing_permutations(s.n))


def all_homomorphisms(source, target):
    """
    Every Gamma-homomorphism source -> target, found by testing each map
    with 0 -> 0.

    Parameters
    ----------
    source, target: GammaSemiring
        Same g and axiom mode

    Returns
    -------
    homs: list of HomMap
        In lexicographic order of the image tuples

    Raises
    ------
    StructureError
        When g or the mode differ
    CapExceeded
        With more than 10**5 candidate maps
    """

    if source.g != target.g or source.mode != target.mode:
        raise StructureError("Homomorphisms need equal g and axiom mode")
    n_candidates = target.n ** (source.n - 1)
    if n_candidates > MAX_HOM_CANDIDATES:
        raise CapExceeded(f"{n_candidates} candidate maps exceed the cap of "
                          f"{MAX_HOM_CANDIDATES}")

    homs = []
    for rest in product(range(target.n), repeat=source.n - 1):
        h = HomMap(source, target, (0,) + rest)
        if is_homomorphism(h).valid:
            homs.append(h)
    return homs


def naive_monoid_count(n):
    """
    Isomorphism classes of commutative monoids with identity 0 on
    {0, ..., n-1}, counted by scanning every symmetric table and
    deduplicating by the permutations fixing 0.

    Parameters
    ----------
    n: int
        1 <= n <= 4

    Returns
    -------
    count: int
    """

    if n < 1:
        raise ValueError(f"Order must be positive, got {n}")
    if n > MAX_MONOID_ORDER:
        raise CapExceeded(f"Naive monoid count is capped at n = "
                          f"{MAX_MONOID_ORDER}, got {n}")

    cells = [(a, b) for a in range(1, n) for b in range(a, n)]
    perms = [np.array(p, dtype=np.int64) for p in zero_fixing_permutations(n)]
    seen = set()
    for values in product(range(n), repeat=len(cells)):
        table = np.zeros((n, n), dtype=np.int64)
        table[0, :] = np.arange(n)
        table[:, 0] = np.arange(n)
        for (a, b), v in zip(cells, values):
            table[a, b] = table[b, a] = v
        if not validate_additive(table).valid:
            continue
        keys = []
        for perm in perms:
            inv = np.argsort(perm)
            keys.append(perm[table[np.ix_(inv, inv)]].tobytes())
        seen.add(min(keys))
    return len(seen)
