# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Optional

# Third pary imports
import numpy as np

# Local imports
from ..canonical.automorphisms import automorphism_group
from ..core.exceptions import CapExceeded
from ..utils.method import Method
from .congruences import congruences
from .ideals import ideals, radical
from .structural_entropy import ENTROPY_MODES, compute_entropy


class TypeLabel(str, Enum):
    BOOLEAN = 'BOOLEAN'
    TROPICAL = 'TROPICAL'
    MODULAR = 'MODULAR'
    TRUNCATED = 'TRUNCATED'
    HYBRID = 'HYBRID'


@dataclass(frozen=True)
class InvariantSignature:
    """
    Sigma(T) = (n, g, |Id|, |Con|, |Aut|, H).

    num_congruences is None when the congruence scan was refused by its
    cap.
    """

    n: int
    g: int
    num_ideals: int
    num_congruences: Optional[int]
    aut_order: int
    entropy: float

    def as_tuple(self):
        return (self.n, self.g, self.num_ideals, self.num_congruences,
                self.aut_order, self.entropy)

    def vector(self):
        return np.array(self.as_tuple(), dtype=np.float64)

    def to_dict(self):
        return asdict(self)


def is_additively_idempotent(add):
    return bool(np.all(np.diag(add) == np.arange(add.shape[0])))


def is_additively_selective(add):
    e = np.arange(add.shape[0])
    return bool(np.all((add == e[:, None]) | (add == e[None, :])))


def is_additive_group(add):
    return bool(np.all((add == 0).any(axis=1)))


def additively_absorbing_elements(add):
    """Elements t != 0 with a + t = t for every a."""
    return [int(t) for t in range(1, add.shape[0])
            if np.all(add[:, t] == t)]


def has_ternary_identity(s):
    """Some e with {e, e, x}_gamma = x for every x and gamma."""
    e = np.arange(s.n)
    return any(np.all(s.ops[:, u, u, :] == e) for u in range(s.n))


def classify_type(s):
    """
    Heuristic type label, first match wins: BOOLEAN (additively idempotent
    and every {a, a, a} = a), TROPICAL (additively selective), MODULAR
    ((T, +) a group), TRUNCATED (a nonzero additively absorbing element),
    HYBRID.

    Parameters
    ----------
    s: GammaSemiring

    Returns
    -------
    label: TypeLabel
    """

    add = s.sum_table
    e = np.arange(s.n)
    cubes_idempotent = all(np.all(op[e, e, e] == e) for op in s.ops)

    if is_additively_idempotent(add) and cubes_idempotent:
        return TypeLabel.BOOLEAN
    if is_additively_selective(add):
        return TypeLabel.TROPICAL
    if is_additive_group(add):
        return TypeLabel.MODULAR
    if additively_absorbing_elements(add):
        return TypeLabel.TRUNCATED
    return TypeLabel.HYBRID


def signature(s, entropy_mode='full-aut', allow_partial=False):
    """
    Invariant signature of a structure.

    Parameters
    ----------
    s: GammaSemiring
    entropy_mode: str
        'full-aut' or 'additive-aut'. Default='full-aut'
    allow_partial: bool
        Leave num_congruences as None instead of raising when the
        congruence cap refuses the scan. Default=False

    Returns
    -------
    sig: InvariantSignature

    Raises
    ------
    CapExceeded
        From the congruence scan unless allow_partial
    """

    try:
        num_con = len(congruences(s))
    except CapExceeded:
        if not allow_partial:
            raise
        num_con = None

    return InvariantSignature(n=s.n, g=s.g,
                              num_ideals=len(ideals(s)),
                              num_congruences=num_con,
                              aut_order=automorphism_group(s).order,
                              entropy=compute_entropy(
                                  s, ENTROPY_MODES[entropy_mode]))


def compute_signature_battery(s, entropy_mode='full-aut'):
    """
    Full invariant battery of a structure.

    Parameters
    ----------
    s: GammaSemiring
    entropy_mode: str
        'full-aut' or 'additive-aut'. Default='full-aut'

    Returns
    -------
    results: tuple
        - n, g: orders
        - num_ideals: |Id|
        - num_congruences: |Con|, -1 when refused by the cap
        - aut_order: |Aut|
        - entropy_nats: H
        - type_label: classify_type label
        - rho: |Rad| / n
        - kappa: |Con| / n, nan when refused by the cap
    """

    sig = signature(s, entropy_mode, allow_partial=True)
    rho = len(radical(s)) / s.n
    if sig.num_congruences is None:
        num_con, kappa = -1, np.nan
    else:
        num_con, kappa = sig.num_congruences, sig.num_congruences / s.n

    return (sig.n, sig.g, sig.num_ideals, num_con, sig.aut_order,
            sig.entropy, classify_type(s).value, rho, kappa)


class SignatureBattery(Method):

    algorithm = 'SIGNATURE_BATTERY'
    version = '1.0.0'
    dtype = [('n', 'int64'),
             ('g', 'int64'),
             ('num_ideals', 'int64'),
             ('num_congruences', 'int64'),
             ('aut_order', 'int64'),
             ('entropy_nats', 'float64'),
             ('type_label', 'U9'),
             ('rho', 'float64'),
             ('kappa', 'float64')]

    def __init__(self, **kwargs):
        """
        Invariant signature, type label, radical proportion and congruence
        density

        Parameters
        ----------
        entropy_mode: str
            'full-aut' or 'additive-aut'. Default='full-aut'
        """

        super().__init__(compute_signature_battery, **kwargs)
