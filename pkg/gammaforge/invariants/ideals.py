# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import numpy as np

# Local imports
from ..core.subsets import IdealSet, is_ideal
from ..utils.method import Method


def ideals(s):
    """
    All ideals of a structure.

    Scans the 2**(n-1) subsets containing 0.

    Parameters
    ----------
    s: GammaSemiring
        Valid structure

    Returns
    -------
    ideals: list of IdealSet
        Sorted by bitmask; {0} comes first and T last
    """

    return [IdealSet(mask, s.n) for mask in range(1, 1 << s.n, 2)
            if is_ideal(s, mask)]


def generated_ideal(s, subset):
    """
    Smallest ideal containing a subset, by iterated closure: add 0, close
    under + and absorb through every ternary slot.

    Parameters
    ----------
    s: GammaSemiring
    subset: IdealSet | iterable of int

    Returns
    -------
    ideal: IdealSet
    """

    elements = subset.elements if isinstance(subset, IdealSet) else subset
    inside = np.zeros(s.n, dtype=bool)
    inside[0] = True
    inside[list(elements)] = True

    while True:
        m = np.flatnonzero(inside)
        grown = inside.copy()
        grown[s.sum_table[np.ix_(m, m)].ravel()] = True
        grown[s.ops[:, m, :, :].ravel()] = True
        grown[s.ops[:, :, m, :].ravel()] = True
        grown[s.ops[:, :, :, m].ravel()] = True
        if np.array_equal(grown, inside):
            break
        inside = grown

    return IdealSet.from_elements(np.flatnonzero(inside), s.n)


def is_prime(s, ideal):
    """
    Prime predicate: proper, and a product landing in the ideal forces one
    of its arguments into it, for every gamma.
    """

    if not ideal.is_proper:
        return False
    outside = np.flatnonzero(~ideal.indicator())
    inside = ideal.indicator()
    products = s.ops[:, outside][:, :, outside][:, :, :, outside]
    return not inside[products].any()


def prime_ideals(s):
    """
    Prime ideals of a structure.

    Parameters
    ----------
    s: GammaSemiring

    Returns
    -------
    primes: list of IdealSet
        Sorted by bitmask
    """

    return [ideal for ideal in ideals(s) if is_prime(s, ideal)]


def radical(s):
    """
    Intersection of all prime ideals, all of T when there is none.

    Returns
    -------
    rad: IdealSet
    """

    mask = (1 << s.n) - 1
    for p in prime_ideals(s):
        mask &= p.members
    return IdealSet(mask, s.n)


def radical_proportion(s):
    """rho = |Rad| / n."""
    return len(radical(s)) / s.n


def compute_ideal_count(s):
    """
    Number of ideals |Id(T)|.

    Parameters
    ----------
    s: GammaSemiring

    Returns
    -------
    num_ideals: int
    """
    return len(ideals(s))


class IdealCount(Method):

    algorithm = 'IDEAL_COUNT'
    version = '1.0.0'
    dtype = [('num_ideals', 'int64')]

    def __init__(self, **kwargs):
        """
        Number of ideals of a structure.
        """

        super().__init__(compute_ideal_count, **kwargs)
