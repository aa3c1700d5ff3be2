# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
Prime spectrum of a structure with its closed sets V(I) = {P : I <= P},
and the contravariant map of spectra induced by a homomorphism.
"""

# Std imports
from dataclasses import dataclass, field
from itertools import combinations

# Third pary imports
import numpy as np

# Local imports
from ..core.exceptions import ContractViolation, InvariantViolation
from ..core.homomorphism import is_homomorphism
from ..core.subsets import IdealSet
from .ideals import generated_ideal, ideals, is_prime, prime_ideals


@dataclass
class Spectrum:
    """
    Attributes
    ----------
    n: int
        Order of the structure
    primes: list of IdealSet
        Prime ideals sorted by bitmask
    closed_sets: list of tuple
        Distinct V(I) over all ideals I, as sorted tuples of indices into
        primes, the list itself sorted
    """

    n: int
    primes: list
    closed_sets: list = field(default_factory=list)

    def closed_set(self, ideal):
        """V(I) as a sorted tuple of prime indices."""
        return tuple(i for i, p in enumerate(self.primes)
                     if ideal.issubset(p))

    def to_dict(self):
        return {'primes': [p.members for p in self.primes],
                'closed_sets': [list(c) for c in self.closed_sets]}


def spectrum(s):
    """
    Prime spectrum of a structure.

    Parameters
    ----------
    s: GammaSemiring

    Returns
    -------
    spec: Spectrum
    """

    spec = Spectrum(s.n, prime_ideals(s))
    spec.closed_sets = sorted({spec.closed_set(i) for i in ideals(s)})
    return spec


@dataclass
class SpectrumLaws:
    """
    Closure laws of the closed-set family.

    intersection_failures lists ideal pairs (as bitmasks) with
    V(I) & V(J) != V(<I u J>); union_failures lists pairs whose union
    V(I) | V(J) is not in the family.
    """

    intersection_failures: list = field(default_factory=list)
    union_failures: list = field(default_factory=list)

    @property
    def intersection_holds(self):
        return not self.intersection_failures

    @property
    def union_closed(self):
        return not self.union_failures


def check_closed_set_laws(s, spec=None):
    """
    Check V(I) & V(J) = V(<I u J>) for every pair of ideals and report
    whether the family is closed under union.

    Parameters
    ----------
    s: GammaSemiring
    spec: Spectrum | None
        Precomputed spectrum of s

    Returns
    -------
    laws: SpectrumLaws
    """

    spec = spec if spec is not None else spectrum(s)
    family = set(spec.closed_sets)
    laws = SpectrumLaws()
    for i, j in combinations(ideals(s), 2):
        vi, vj = set(spec.closed_set(i)), set(spec.closed_set(j))
        joined = generated_ideal(s, IdealSet(i.members | j.members, s.n))
        if vi & vj != set(spec.closed_set(joined)):
            laws.intersection_failures.append((i.members, j.members))
        if tuple(sorted(vi | vj)) not in family:
            laws.union_failures.append((i.members, j.members))

    return laws


def induced_map(h, strict=True):
    """
    Map of spectra induced by a homomorphism h: T1 -> T2, sending a prime Q
    of T2 to its preimage in T1.

    Parameters
    ----------
    h: HomMap
    strict: bool
        Raise when a preimage is not prime. When False such primes map to
        None. Default=True

    Returns
    -------
    mapping: dict
        IdealSet of T2 -> IdealSet of T1 (or None)

    Raises
    ------
    ContractViolation
        When h is not a homomorphism
    InvariantViolation
        When strict and some preimage is not prime; the witness is
        (Q bitmask, preimage bitmask)
    """

    report = is_homomorphism(h)
    if not report.valid:
        raise ContractViolation(f"Not a Gamma-homomorphism: "
                                f"{report.summary(3)}")

    mapping = {}
    for q in prime_ideals(h.target):
        pre = IdealSet.from_elements(
            np.flatnonzero(q.indicator()[h.map]), h.source.n)
        if not is_prime(h.source, pre):
            if strict:
                raise InvariantViolation(
                    f"Preimage {pre.elements} of prime {q.elements} is not "
                    f"prime", witness=(q.members, pre.members))
            pre = None
        mapping[q] = pre

    return mapping
