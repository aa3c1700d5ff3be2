# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import logging

# Third pary imports

# Local imports
from ..core.constructions import bourne_quotient, substructure
from ..core.exceptions import CapExceeded
from ..core.subsets import Congruence, is_congruence
from ..utils.method import Method
from .ideals import radical

logger = logging.getLogger(__name__)

MAX_CONGRUENCE_ORDER = 8


def restricted_growth_strings(n):
    """
    Every set partition of range(n) as a restricted growth string
    (first-appearance class numbering), in lexicographic order.
    """

    if n == 0:
        return
    labels = [0] * n

    def extend(i, top):
        if i == n:
            yield tuple(labels)
            return
        for c in range(top + 2):
            labels[i] = c
            yield from extend(i + 1, max(top, c))

    yield from extend(1, 0)


def congruences(s):
    """
    All congruences of a structure by a scan over the Bell(n) partitions.

    Parameters
    ----------
    s: GammaSemiring
        Valid structure with n <= 8

    Returns
    -------
    congruences: list of Congruence
        In restricted growth string order, so the total partition is first
        and the identity partition last

    Raises
    ------
    CapExceeded
        When n > 8
    """

    if s.n > MAX_CONGRUENCE_ORDER:
        raise CapExceeded(f"Congruence scan is capped at n <= "
                          f"{MAX_CONGRUENCE_ORDER}, got n = {s.n}")

    return [theta for theta in map(Congruence, restricted_growth_strings(s.n))
            if is_congruence(s, theta)]


def is_simple(s):
    """True iff the only congruences are the identity and the total one."""
    return s.n == 1 or len(congruences(s)) == 2


def congruence_density(s):
    """kappa = |Con| / n."""
    return len(congruences(s)) / s.n


def radical_decomposition(s):
    """
    Compare |Con(T)| with |Con(T/Rad)| * |Con(Rad)|, where T/Rad is the
    Bourne quotient and Rad is taken as a structure in its own right.

    Parameters
    ----------
    s: GammaSemiring

    Returns
    -------
    result: dict
        num_congruences, num_congruences_quotient,
        num_congruences_radical, status ('holds', 'fails' or
        'radical-trivial' when Rad is {0} or T)
    """

    rad = radical(s)
    num_con = len(congruences(s))
    if len(rad) in (1, s.n):
        return {'num_congruences': num_con,
                'num_congruences_quotient': None,
                'num_congruences_radical': None,
                'status': 'radical-trivial'}

    num_quot = len(congruences(bourne_quotient(s, rad)))
    num_rad = len(congruences(substructure(s, rad)))
    status = 'holds' if num_con == num_quot * num_rad else 'fails'
    logger.debug("Radical %s: %d vs %d * %d", rad.elements, num_con,
                 num_quot, num_rad)

    return {'num_congruences': num_con,
            'num_congruences_quotient': num_quot,
            'num_congruences_radical': num_rad,
            'status': status}


def compute_congruence_count(s):
    """
    Number of congruences |Con(T)|.

    Parameters
    ----------
    s: GammaSemiring

    Returns
    -------
    num_congruences: int
    """
    return len(congruences(s))


class CongruenceCount(Method):

    algorithm = 'CONGRUENCE_COUNT'
    version = '1.0.0'
    dtype = [('num_congruences', 'int64')]

    def __init__(self, **kwargs):
        """
        Number of congruences of a structure (n <= 8).
        """

        super().__init__(compute_congruence_count, **kwargs)
