# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
Subsets and partitions of a structure: ideals and congruences, with their
membership predicates. The scans over all of them live in
gammaforge.invariants.
"""

# Std imports
from dataclasses import dataclass

# Third pary imports
import numpy as np

# Local imports
from ..utils.tools import elements_of_mask, mask_from_elements
from .exceptions import StructureError


@dataclass(frozen=True, order=True)
class IdealSet:
    """
    Subset of [0, n) stored as a bitmask (bit x set iff x is a member).
    """

    members: int
    n: int

    @classmethod
    def from_elements(cls, elements, n):
        return cls(mask_from_elements(elements), n)

    @classmethod
    def full(cls, n):
        return cls((1 << n) - 1, n)

    @property
    def elements(self):
        return elements_of_mask(self.members, self.n)

    def indicator(self):
        return np.array([bool(self.members >> x & 1) for x in range(self.n)])

    @property
    def is_proper(self):
        return self.members != (1 << self.n) - 1

    def issubset(self, other):
        return self.members & ~other.members == 0

    def __contains__(self, x):
        return bool(self.members >> int(x) & 1)

    def __len__(self):
        return bin(self.members).count('1')

    def __iter__(self):
        return iter(self.elements)


def is_ideal(s, subset):
    """
    Ideal predicate: contains 0, closed under + and absorbing in every
    ternary slot for every gamma.

    Parameters
    ----------
    s: GammaSemiring
    subset: IdealSet | int
        Candidate subset or its bitmask

    Returns
    -------
    is_ideal: bool
    """

    mask = subset.members if isinstance(subset, IdealSet) else int(subset)
    inside = np.array([bool(mask >> x & 1) for x in range(s.n)])
    if not inside[0]:
        return False
    m = np.flatnonzero(inside)
    if not inside[s.sum_table[np.ix_(m, m)]].all():
        return False
    ops = s.ops
    return bool(inside[ops[:, m, :, :]].all()
                and inside[ops[:, :, m, :]].all()
                and inside[ops[:, :, :, m]].all())


@dataclass(frozen=True)
class Congruence:
    """
    Partition of [0, n) given by class_of[x]. Classes are numbered in order
    of first appearance, so the class of 0 is class 0.
    """

    class_of: tuple

    def __post_init__(self):
        if not self.class_of or self.class_of[0] != 0:
            raise StructureError("The class of 0 must be class 0")
        seen = 0
        for c in self.class_of:
            if c > seen:
                raise StructureError(f"Classes must be numbered in order of "
                                     f"first appearance: {self.class_of}")
            if c == seen:
                seen += 1

    @classmethod
    def from_labels(cls, labels):
        """Renumber arbitrary class labels by first appearance."""
        renum = {}
        out = []
        for lab in labels:
            if lab not in renum:
                renum[lab] = len(renum)
            out.append(renum[lab])
        return cls(tuple(out))

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def total(cls, n):
        return cls((0,) * n)

    @property
    def n(self):
        return len(self.class_of)

    @property
    def n_classes(self):
        return max(self.class_of) + 1

    @property
    def classes(self):
        out = [[] for _ in range(self.n_classes)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return out

    def representatives(self):
        """First (smallest) element of every class."""
        return [members[0] for members in self.classes]

    def zero_class(self):
        return IdealSet.from_elements(self.classes[0], self.n)


def is_congruence(s, theta):
    """
    Compatibility of a partition with + and every ternary product.

    Parameters
    ----------
    s: GammaSemiring
    theta: Congruence

    Returns
    -------
    is_congruence: bool
    """

    if theta.n != s.n:
        raise StructureError(f"Partition of {theta.n} elements for a "
                             f"structure of order {s.n}")
    cls = np.array(theta.class_of)
    rep = np.array(theta.representatives())[cls]

    # Replacing any single argument by the representative of its class must
    # not change the class of the result
    summed = cls[s.sum_table]
    if not (np.array_equal(summed, summed[rep, :])
            and np.array_equal(summed, summed[:, rep])):
        return False

    for op in s.ops:
        prod = cls[op]
        if not (np.array_equal(prod, prod[rep, :, :])
                and np.array_equal(prod, prod[:, rep, :])
                and np.array_equal(prod, prod[:, :, rep])):
            return False

    return True
