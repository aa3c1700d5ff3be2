# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
from typing import NamedTuple

# Third pary imports
import numpy as np

# Local imports
from .constructions import (bourne_quotient, quotient_by_congruence,
                            substructure)
from .exceptions import ContractViolation, InvariantViolation, StructureError
from .structure import GammaSemiring, ValidityReport, Violation
from .subsets import Congruence, IdealSet, is_ideal


class HomMap:
    """
    Map between the element sets of two structures, map[x] is the image of
    x. The additive identity must be sent to the additive identity.

    Parameters
    ----------
    source, target: GammaSemiring
    mapping: sequence of int
        source.n images in [0, target.n)

    Raises
    ------
    StructureError
        When the mapping has the wrong length, leaves the target or does not
        send 0 to 0
    """

    def __init__(self, source, target, mapping):
        mapping = np.array(mapping, dtype=np.int64)
        if mapping.shape != (source.n,):
            raise StructureError(f"Expected {source.n} images, got "
                                 f"{mapping.shape}")
        if mapping.min() < 0 or mapping.max() >= target.n:
            raise StructureError(f"Images outside [0, {target.n})")
        if mapping[0] != 0:
            raise StructureError(f"The additive identity must map to 0, "
                                 f"got {int(mapping[0])}")
        mapping.setflags(write=False)
        self.source = source
        self.target = target
        self.map = mapping

    @classmethod
    def identity(cls, s):
        return cls(s, s, np.arange(s.n))

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, np.zeros(source.n, dtype=np.int64))

    def __call__(self, x):
        return int(self.map[x])

    def compose(self, first):
        """The map self o first (apply first, then self)."""
        if first.target is not self.source and first.target != self.source:
            raise StructureError("Maps are not composable")
        return HomMap(first.source, self.target, self.map[first.map])

    def is_surjective(self):
        return len(np.unique(self.map)) == self.target.n

    def __repr__(self):
        return f"HomMap({self.map.tolist()})"


def is_homomorphism(h):
    """
    Check that a map preserves + and every ternary product (same gamma on
    both sides).

    Parameters
    ----------
    h: HomMap

    Returns
    -------
    report: ValidityReport
        Violations 'additive' (a, b) and 'ternary' (gamma, a, b, c)
    """

    src, tgt, f = h.source, h.target, h.map
    if src.g != tgt.g:
        raise StructureError(f"Parameter counts differ: {src.g} != {tgt.g}")
    if src.mode != tgt.mode:
        raise StructureError(f"Axiom modes differ: {src.mode.name} != "
                             f"{tgt.mode.name}")

    report = ValidityReport()
    lhs = f[src.sum_table]
    rhs = tgt.sum_table[np.ix_(f, f)]
    report.violations.extend(Violation('additive', (int(a), int(b)))
                             for a, b in np.argwhere(lhs != rhs))

    for gi in range(src.g):
        lhs = f[src.ops[gi]]
        rhs = tgt.ops[gi][np.ix_(f, f, f)]
        report.violations.extend(
            Violation('ternary', (gi,) + tuple(int(i) for i in idx))
            for idx in np.argwhere(lhs != rhs))

    return report


def _require_hom(h):
    report = is_homomorphism(h)
    if not report.valid:
        raise ContractViolation(f"Not a Gamma-homomorphism: "
                                f"{report.summary(3)}")


def kernel(h):
    """
    Kernel {a : h(a) = 0} of a homomorphism.

    Parameters
    ----------
    h: HomMap

    Returns
    -------
    ker: IdealSet

    Raises
    ------
    ContractViolation
        When h is not a homomorphism
    InvariantViolation
        When the kernel fails the ideal predicate
    """

    _require_hom(h)
    ker = IdealSet.from_elements(np.flatnonzero(h.map == 0), h.source.n)
    if not is_ideal(h.source, ker):
        raise InvariantViolation(f"Kernel {ker.elements} is not an ideal",
                                 witness=ker.elements)
    return ker


def kernel_congruence(h):
    """The congruence a ~ b iff h(a) = h(b)."""
    _require_hom(h)
    return Congruence.from_labels(h.map.tolist())


def image(h):
    """
    Image of a homomorphism as a sub-structure of the target, together
    with the inclusion (index in image -> element of target).
    """

    _require_hom(h)
    members = sorted(set(h.map.tolist()))
    return substructure(h.target, members), np.array(members)


class FirstIsomorphism(NamedTuple):
    image: GammaSemiring
    witness: tuple
    quotient: GammaSemiring
    bourne_consistent: bool


def image_and_first_iso(h):
    """
    First isomorphism theorem for a homomorphism h: T1 -> T2.

    The quotient T1/ker h is built from the kernel congruence
    (a ~ b iff h(a) = h(b)), not from the Bourne congruence of the kernel
    ideal: the Bourne quotient need not be isomorphic to Im(h). It is built
    as well; bourne_consistent tells whether it gives the same structure.

    Parameters
    ----------
    h: HomMap

    Returns
    -------
    result: FirstIsomorphism
        image: Im(h) re-indexed with 0 first
        witness: isomorphism quotient -> image as an image tuple
        quotient: T1/ker h
        bourne_consistent: True when the Bourne quotient by ker h is
        isomorphic to the image

    Raises
    ------
    InvariantViolation
        When no isomorphism between quotient and image exists
    """

    from ..canonical.automorphisms import isomorphism_witness

    img, _ = image(h)
    theta = kernel_congruence(h)
    quotient = quotient_by_congruence(h.source, theta)

    witness = None
    if quotient.n == img.n:
        witness = isomorphism_witness(quotient, img)
    if witness is None:
        raise InvariantViolation("Image is not isomorphic to the quotient "
                                 "by the kernel congruence",
                                 witness=h.map.tolist())

    bourne = bourne_quotient(h.source, kernel(h))
    bourne_consistent = (bourne.n == img.n
                         and isomorphism_witness(bourne, img) is not None)

    return FirstIsomorphism(img, witness, quotient, bourne_consistent)
