# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import logging

# Third pary imports
import numpy as np

# Local imports
from ..core.exceptions import CapExceeded
from ..core.structure import AdditiveTable
from ..utils.tools import zero_fixing_permutations

logger = logging.getLogger(__name__)

MAX_MONOID_ORDER = 6


def _associativity_ok(padded, n):
    # padded has an extra index n meaning "not assigned yet"; only
    # instances whose every cell is assigned are compared
    e = np.arange(n)
    left = padded[padded[:n, :n][:, :, None], e[None, None, :]]
    right = padded[e[:, None, None], padded[:n, :n][None, :, :]]
    known = (left != n) & (right != n)
    return bool(np.all(left[known] == right[known]))


def _minimal_relabeling(table, perms, invs):
    # Relabel by every 0-fixing permutation at once, keep the smallest
    n = table.shape[0]
    relabeled = perms[np.arange(len(perms))[:, None, None],
                      table[invs[:, :, None], invs[:, None, :]]]
    flat = relabeled.reshape(len(perms), n * n)
    best = np.lexsort(flat.T[::-1])[0]
    return relabeled[best]


def enumerate_additive_monoids(n):
    """
    Commutative monoids on {0, ..., n-1} with identity 0, one per
    isomorphism class.

    Parameters
    ----------
    n: int
        Order, 1 <= n <= 6

    Returns
    -------
    tables: list of AdditiveTable
        Every table is the lexicographically smallest relabeling of its
        class; the list is sorted by table bytes

    Raises
    ------
    CapExceeded
        When n > 6
    """

    if n < 1:
        raise ValueError(f"Order must be positive, got {n}")
    if n > MAX_MONOID_ORDER:
        raise CapExceeded(f"Additive monoids are enumerated for n <= "
                          f"{MAX_MONOID_ORDER} only, got n = {n}")

    padded = np.full((n + 1, n + 1), n, dtype=np.int64)
    padded[0, :n] = np.arange(n)
    padded[:n, 0] = np.arange(n)
    cells = [(a, b) for a in range(1, n) for b in range(a, n)]

    found = []

    def extend(depth):
        if depth == len(cells):
            found.append(padded[:n, :n].copy())
            return
        a, b = cells[depth]
        for value in range(n):
            padded[a, b] = padded[b, a] = value
            if _associativity_ok(padded, n):
                extend(depth + 1)
        padded[a, b] = padded[b, a] = n

    extend(0)
    logger.debug("%d labeled monoids of order %d", len(found), n)

    perms = np.array(list(zero_fixing_permutations(n)), dtype=np.int64)
    invs = np.argsort(perms, axis=1)
    classes = {}
    for table in found:
        canon = _minimal_relabeling(table, perms, invs)
        classes.setdefault(canon.astype(np.uint8).tobytes(), canon)

    return [AdditiveTable(classes[key]) for key in sorted(classes)]
