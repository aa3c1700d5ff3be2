# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import numpy as np

# Local imports
from .exceptions import ContractViolation, StructureError
from .structure import GammaSemiring
from .subsets import Congruence, IdealSet, is_congruence, is_ideal


# ----- Named examples -----
def cyclic_group_table(n):
    """Additive table of Z_n."""
    e = np.arange(n)
    return (e[:, None] + e[None, :]) % n


def chain_semilattice_table(n):
    """Additive table of the chain 0 < 1 < ... < n-1 under max."""
    e = np.arange(n)
    return np.maximum(e[:, None], e[None, :])


def trivial_structure(g=1, mode=None):
    """The 1-element structure with g parameters."""
    return GammaSemiring([[0]], np.zeros((g, 1, 1, 1), dtype=np.int64), mode)


def boolean_structure(g=1, mode=None):
    """
    The 2-element Boolean structure: a + b = max(a, b) and
    {a, b, c} = min(a, b, c) for every gamma.
    """

    e = np.arange(2)
    cube = np.minimum(np.minimum(e[:, None, None], e[None, :, None]),
                      e[None, None, :])
    return GammaSemiring(chain_semilattice_table(2), [cube] * g, mode)


def zero_multiplication(add, g=1, mode=None):
    """Structure over the given additive table with every product 0."""
    n = np.asarray(add).shape[0]
    return GammaSemiring(add, np.zeros((g, n, n, n), dtype=np.int64), mode)


# ----- Constructions -----
def _check_compatible(s1, s2):
    if s1.g != s2.g:
        raise StructureError(f"Parameter counts differ: {s1.g} != {s2.g}")
    if s1.mode != s2.mode:
        raise StructureError(f"Axiom modes differ: {s1.mode.name} != "
                             f"{s2.mode.name}")


def direct_product(s1, s2):
    """
    Componentwise product. The pair (x, y) gets index x * n2 + y, so (0, 0)
    is 0.

    Parameters
    ----------
    s1, s2: GammaSemiring
        Factors with the same g and axiom mode

    Returns
    -------
    product: GammaSemiring
        Structure of order n1 * n2
    """

    _check_compatible(s1, s2)
    n1, n2 = s1.n, s2.n
    idx = np.arange(n1 * n2)
    xs, ys = idx // n2, idx % n2

    add = (s1.sum_table[np.ix_(xs, xs)] * n2
           + s2.sum_table[np.ix_(ys, ys)])
    ops = (s1.ops[:, xs][:, :, xs][:, :, :, xs] * n2
           + s2.ops[:, ys][:, :, ys][:, :, :, ys])

    return GammaSemiring(add, ops, s1.mode)


def duplicate_gamma(s):
    """
    Parameter duplication Gamma x {1, 2}: every tensor appears twice, as
    (gamma, 1), (gamma, 2).

    Parameters
    ----------
    s: GammaSemiring

    Returns
    -------
    duplicated: GammaSemiring
        Structure with 2g identical-in-pairs tensors
    """

    return GammaSemiring(s.add, np.repeat(s.ops, 2, axis=0), s.mode)


def quotient_by_congruence(s, theta):
    """
    Quotient structure on the classes of a congruence. Class 0 (the class
    of 0) becomes element 0.

    Parameters
    ----------
    s: GammaSemiring
    theta: Congruence
        Partition compatible with all operations

    Returns
    -------
    quotient: GammaSemiring

    Raises
    ------
    ContractViolation
        When theta is not compatible with the operations
    """

    if not is_congruence(s, theta):
        raise ContractViolation(f"Partition {theta.class_of} is not a "
                                f"congruence")
    cls = np.array(theta.class_of)
    reps = np.array(theta.representatives())

    add = cls[s.sum_table[np.ix_(reps, reps)]]
    ops = cls[s.ops[:, reps][:, :, reps][:, :, :, reps]]

    return GammaSemiring(add, ops, s.mode)


def bourne_congruence(s, ideal):
    """
    Bourne congruence of an ideal: a ~ b iff a + i = b + j for some i, j in
    the ideal.

    Parameters
    ----------
    s: GammaSemiring
    ideal: IdealSet

    Returns
    -------
    theta: Congruence
    """

    if not is_ideal(s, ideal):
        raise ContractViolation(f"{ideal.elements} is not an ideal")
    members = np.array(ideal.elements)
    # reach[a, x] is True when x = a + i for some i in the ideal
    reach = np.zeros((s.n, s.n), dtype=bool)
    for a in range(s.n):
        reach[a, s.sum_table[a, members]] = True
    related = (reach.astype(np.int64) @ reach.T.astype(np.int64)) > 0

    labels = [int(np.argmax(related[a])) for a in range(s.n)]
    return Congruence.from_labels(labels)


def bourne_quotient(s, ideal):
    """Quotient of s by the Bourne congruence of an ideal."""
    return quotient_by_congruence(s, bourne_congruence(s, ideal))


def substructure(s, subset):
    """
    Restriction of s to a subset closed under + and every product, with
    the members re-indexed in increasing order (0 stays 0).

    Parameters
    ----------
    s: GammaSemiring
    subset: IdealSet | sequence of int

    Returns
    -------
    sub: GammaSemiring
    """

    elements = (subset.elements if isinstance(subset, IdealSet)
                else sorted(int(x) for x in subset))
    if not elements or elements[0] != 0:
        raise ContractViolation("A sub-structure must contain 0")
    members = np.array(elements)
    index = np.full(s.n, -1)
    index[members] = np.arange(len(members))

    add = index[s.sum_table[np.ix_(members, members)]]
    ops = index[s.ops[:, members][:, :, members][:, :, :, members]]
    if (add < 0).any() or (ops < 0).any():
        raise ContractViolation(f"{elements} is not closed under the "
                                f"operations")

    return GammaSemiring(add, ops, s.mode)
