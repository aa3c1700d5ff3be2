# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
Data model of finite ternary Gamma-semirings.

Elements are the integers 0..n-1 and 0 is always the additive identity.
A structure is an additive Cayley table plus g ternary tensors, one per
parameter gamma. All arrays are read-only after construction.
"""

# Std imports
from dataclasses import dataclass, field

# Third pary imports
import numpy as np

# Local imports
from .exceptions import StructureError


@dataclass(frozen=True)
class AxiomConfig:
    """
    Which optional axioms a structure (or a search) is held to.

    Attributes
    ----------
    symmetric: bool
        Ternary products invariant under all permutations of arguments.
        Default=True
    associative: bool
        Coupled associativity
        {{a,b,c}_g,d,e}_h = {a,{b,c,d}_g,e}_h = {a,b,{c,d,e}_g}_h.
        Default=False
    """

    symmetric: bool = True
    associative: bool = False

    @property
    def name(self):
        parts = ['symmetric' if self.symmetric else 'plain']
        if self.associative:
            parts.append('associative')
        return '+'.join(parts)

    def to_dict(self):
        return {'symmetric': self.symmetric,
                'associative': self.associative}

    @classmethod
    def from_dict(cls, d):
        return cls(symmetric=bool(d['symmetric']),
                   associative=bool(d['associative']))


def _as_label_array(values, shape_len, name):
    try:
        arr = np.array(values, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise StructureError(f"{name} is not an integer table: {exc}")

    if arr.ndim != shape_len or arr.size == 0:
        raise StructureError(f"{name} must be a non-empty {shape_len}D "
                             f"table, got shape {arr.shape}")
    n = arr.shape[-1]
    if any(s != n for s in arr.shape[-shape_len:]):
        raise StructureError(f"{name} must have all sides equal, got "
                             f"shape {arr.shape}")
    if arr.min() < 0 or arr.max() >= n:
        raise StructureError(f"{name} has entries outside [0, {n})")

    arr.setflags(write=False)
    return arr


class AdditiveTable:
    """
    Cayley table of the addition, entry (a, b) = a + b.

    Construction only checks dimensions and the label range; the monoid
    laws are checked by validate_additive.
    """

    def __init__(self, table):
        if isinstance(table, AdditiveTable):
            table = table.table
        self._table = _as_label_array(table, 2, 'Additive table')

    @property
    def n(self):
        return self._table.shape[0]

    @property
    def table(self):
        return self._table

    def tolist(self):
        return self._table.tolist()

    def __getitem__(self, idx):
        return self._table[idx]

    def __eq__(self, other):
        if not isinstance(other, AdditiveTable):
            return NotImplemented
        return np.array_equal(self._table, other._table)

    def __hash__(self):
        return hash(self._table.tobytes())

    def __repr__(self):
        return f"AdditiveTable(n={self.n}, {self.tolist()})"


class TernaryTensor:
    """
    Table of one ternary product, entry (a, b, c) = {a, b, c}_gamma.
    """

    def __init__(self, cube):
        if isinstance(cube, TernaryTensor):
            cube = cube.cube
        self._cube = _as_label_array(cube, 3, 'Ternary tensor')

    @property
    def n(self):
        return self._cube.shape[0]

    @property
    def cube(self):
        return self._cube

    def tolist(self):
        return self._cube.tolist()

    def __getitem__(self, idx):
        return self._cube[idx]

    def __eq__(self, other):
        if not isinstance(other, TernaryTensor):
            return NotImplemented
        return np.array_equal(self._cube, other._cube)

    def __hash__(self):
        return hash(self._cube.tobytes())


class GammaSemiring:
    """
    Finite ternary Gamma-semiring: additive table, g ternary tensors and the
    axiom mode it is held to.

    Parameters
    ----------
    add: AdditiveTable | array-like
        n x n additive table
    tensors: sequence of TernaryTensor | array-like
        g tensors of shape n x n x n, or one array of shape (g, n, n, n)
    mode: AxiomConfig
        Axiom mode. Default=AxiomConfig()

    Notes
    -----
    The constructor checks shapes and label ranges (closure). Use
    gammaforge.core.verify_structure for the axioms.
    """

    def __init__(self, add, tensors, mode=None):
        self._add = AdditiveTable(add)
        if isinstance(tensors, np.ndarray) and tensors.ndim == 4:
            tensors = list(tensors)
        tensors = tuple(TernaryTensor(t) for t in tensors)
        if len(tensors) == 0:
            raise StructureError("At least one ternary tensor is required")
        for gi, t in enumerate(tensors):
            if t.n != self._add.n:
                raise StructureError(f"Tensor {gi} has order {t.n}, additive "
                                     f"table has order {self._add.n}")
        self._tensors = tensors
        self._mode = mode if mode is not None else AxiomConfig()

        ops = np.stack([t.cube for t in tensors])
        ops.setflags(write=False)
        self._ops = ops

    @property
    def n(self):
        return self._add.n

    @property
    def g(self):
        return len(self._tensors)

    @property
    def mode(self):
        return self._mode

    @property
    def add(self):
        return self._add

    @property
    def tensors(self):
        return self._tensors

    @property
    def sum_table(self):
        return self._add.table

    @property
    def ops(self):
        return self._ops

    @property
    def key(self):
        """Raw bytes identifying the labeled structure."""
        flags = bytes([int(self._mode.symmetric), int(self._mode.associative)])
        return (bytes([self.n, self.g]) + flags
                + self.sum_table.astype(np.uint8).tobytes()
                + self._ops.astype(np.uint8).tobytes())

    def relabel(self, perm):
        """
        Structure transported along a bijection.

        Parameters
        ----------
        perm: sequence of int
            perm[x] is the new label of element x, perm[0] must be 0

        Returns
        -------
        structure: GammaSemiring
            Structure with add'(perm a, perm b) = perm(a + b) and likewise
            for every tensor
        """

        perm = np.asarray(perm, dtype=np.int64)
        if (perm.shape != (self.n,) or perm[0] != 0
                or not np.array_equal(np.sort(perm), np.arange(self.n))):
            raise StructureError(f"Not a 0-fixing permutation of "
                                 f"range({self.n}): {perm.tolist()}")

        inv = np.argsort(perm)
        add = perm[self.sum_table[np.ix_(inv, inv)]]
        ops = perm[self._ops[:, inv][:, :, inv][:, :, :, inv]]

        return GammaSemiring(add, ops, self._mode)

    def with_mode(self, mode):
        return GammaSemiring(self._add, self._tensors, mode)

    def __eq__(self, other):
        if not isinstance(other, GammaSemiring):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return (f"GammaSemiring(n={self.n}, g={self.g}, "
                f"mode={self._mode.name})")


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple

    def __str__(self):
        return f"{self.axiom} at {self.witness}"


@dataclass
class ValidityReport:
    """
    Outcome of an axiom check. valid is True iff there are no violations.
    """

    violations: list = field(default_factory=list)

    @property
    def valid(self):
        return len(self.violations) == 0

    def __bool__(self):
        return self.valid

    def axioms(self):
        """Names of the violated axioms, sorted."""
        return sorted({v.axiom for v in self.violations})

    def witnesses(self, axiom):
        return [v.witness for v in self.violations if v.axiom == axiom]

    def extend(self, other):
        self.violations.extend(other.violations)
        return self

    def summary(self, limit=10):
        if self.valid:
            return 'valid'
        lines = [str(v) for v in self.violations[:limit]]
        if len(self.violations) > limit:
            lines.append(f"... {len(self.violations) - limit} more")
        return '\n'.join(lines)
