# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
from itertools import permutations

# Third pary imports
import numpy as np

# Local imports
from .structure import AdditiveTable, ValidityReport, Violation

SLOT_NAMES = ('distributive_left', 'distributive_middle', 'distributive_right')


def _witness(idx):
    return tuple(int(i) for i in idx)


def validate_additive(table):
    """
    Check that an additive table is a commutative monoid with identity 0.

    Parameters
    ----------
    table: AdditiveTable | array-like
        n x n table, entry (a, b) = a + b

    Returns
    -------
    report: ValidityReport
        One violation per violated law ('identity', 'commutative',
        'associative') carrying the lexicographically smallest witness

    Raises
    ------
    StructureError
        When the table is not square or has entries outside [0, n)
    """

    add = AdditiveTable(table).table
    n = add.shape[0]
    elems = np.arange(n)
    report = ValidityReport()

    bad = np.flatnonzero((add[0, :] != elems) | (add[:, 0] != elems))
    if bad.size:
        report.violations.append(Violation('identity', (int(bad[0]),)))

    bad = np.argwhere(add != add.T)
    if bad.size:
        report.violations.append(Violation('commutative', _witness(bad[0])))

    # (a + b) + c against a + (b + c)
    left = add[add[:, :, None], elems[None, None, :]]
    right = add[elems[:, None, None], add[None, :, :]]
    bad = np.argwhere(left != right)
    if bad.size:
        report.violations.append(Violation('associative', _witness(bad[0])))

    return report


def _distributivity_violations(add, op):
    # {a+b, c, d} against {a, c, d} + {b, c, d}, witnesses (a, b, c, d)
    lhs = op[add]
    rhs = add[op[:, None, :, :], op[None, :, :, :]]
    return np.argwhere(lhs != rhs)


def _slot_views(op):
    # Views that move slot k into the first position, keeping the order of
    # the two remaining slots
    return (op,
            op.transpose(1, 0, 2),
            op.transpose(2, 0, 1))


def associativity_violations(ops):
    """
    Witnesses (gamma, delta, a, b, c, d, e) of the coupled associativity law.

    Parameters
    ----------
    ops: numpy.ndarray
        Tensors of shape (g, n, n, n)

    Returns
    -------
    witnesses: list of tuple
    """

    g, n = ops.shape[0], ops.shape[1]
    e = np.arange(n)
    a_ = e[:, None, None, None, None]
    d_ = e[None, None, None, :, None]
    e_ = e[None, None, None, None, :]
    witnesses = []
    for gi in range(g):
        inner = ops[gi]
        for di in range(g):
            outer = ops[di]
            x = outer[inner[:, :, :, None, None], d_, e_]
            y = outer[a_, inner[None, :, :, :, None], e_]
            z = outer[a_, e[None, :, None, None, None],
                      inner[None, None, :, :, :]]
            for idx in np.argwhere((x != y) | (y != z)):
                witnesses.append((gi, di) + _witness(idx))

    return witnesses


def verify_structure(s):
    """
    Check every axiom of a ternary Gamma-semiring.

    Parameters
    ----------
    s: GammaSemiring
        Structure to check. Closure is enforced at construction.

    Returns
    -------
    report: ValidityReport
        All violations. Names: the additive laws of validate_additive,
        'absorbing' (gamma, a, b), 'distributive_left|middle|right'
        (gamma, a, b, c, d) for {a+b, c, d} = {a, c, d} + {b, c, d} with the
        sum in the named slot, 'symmetric' (gamma, a, b, c) and
        'associative_ternary' (gamma, delta, a, b, c, d, e)
    """

    add = s.sum_table
    ops = s.ops
    report = validate_additive(add)

    for gi in range(s.g):
        op = ops[gi]

        bad = set()
        for view in _slot_views(op):
            for a, b in np.argwhere(view[0] != 0):
                bad.add((gi, int(a), int(b)))
        report.violations.extend(Violation('absorbing', w)
                                 for w in sorted(bad))

        for name, view in zip(SLOT_NAMES, _slot_views(op)):
            report.violations.extend(
                Violation(name, (gi,) + _witness(idx))
                for idx in _distributivity_violations(add, view))

        if s.mode.symmetric:
            diff = np.zeros(op.shape, dtype=bool)
            for p in permutations(range(3)):
                diff |= op != op.transpose(p)
            report.violations.extend(Violation('symmetric',
                                               (gi,) + _witness(idx))
                                     for idx in np.argwhere(diff))

    if s.mode.associative:
        report.violations.extend(Violation('associative_ternary', w)
                                 for w in associativity_violations(ops))

    return report
