# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
Canonical labeling of finite ternary Gamma-semirings.

The canonical form is the lexicographically smallest serialization of the
structure over all 0-fixing relabelings. The default path serializes the
relabelings in numpy batches of BATCH_SIZE and keeps the smallest row; the
exhaustive path walks them one at a time.
"""

# Std imports
import hashlib
from dataclasses import dataclass, field
from itertools import islice, permutations

# Third pary imports
import numpy as np

# Local imports
from ..core.axioms import verify_structure
from ..core.exceptions import ContractViolation, StructureError
from ..core.structure import AxiomConfig, GammaSemiring
from ..utils.tools import zero_fixing_permutations

HEADER = b'TGS1'
BATCH_SIZE = 5040


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """
    Canonical serialization of a structure.

    Attributes
    ----------
    bytes: bytes
        'TGS1', n, g, mode flags, additive table rows, then the tensors in
        gamma order, each flattened row-major, one byte per entry
    labeling: tuple
        A relabeling of the source structure that produces these bytes
    gamma_order: tuple
        Order of the source tensors in the serialization
    """

    bytes: bytes
    labeling: tuple = field(default=(), compare=False, repr=False)
    gamma_order: tuple = field(default=(), compare=False, repr=False)

    @property
    def hash(self):
        return hashlib.sha256(self.bytes).hexdigest()[:16]

    @property
    def n(self):
        return self.bytes[4]

    @property
    def g(self):
        return self.bytes[5]

    def to_structure(self):
        """Decode the serialized structure (in canonical labeling)."""
        return decode(self.bytes)


def _flags(mode, permute_gamma):
    return (int(mode.symmetric) | int(mode.associative) << 1
            | int(permute_gamma) << 2)


def serialize(s, permute_gamma=False):
    """Serialization of s in its current labeling."""
    return (HEADER + bytes([s.n, s.g, _flags(s.mode, permute_gamma)])
            + s.sum_table.astype(np.uint8).tobytes()
            + s.ops.astype(np.uint8).tobytes())


def decode(data):
    """
    Inverse of serialize.

    Raises
    ------
    StructureError
        When the header or the length is wrong
    """

    if data[:4] != HEADER:
        raise StructureError(f"Unknown canonical form header {data[:4]!r}")
    n, g, flags = data[4], data[5], data[6]
    body = np.frombuffer(data[7:], dtype=np.uint8).astype(np.int64)
    if body.size != n * n + g * n ** 3:
        raise StructureError("Canonical form has the wrong length")
    add = body[:n * n].reshape(n, n)
    ops = body[n * n:].reshape(g, n, n, n)
    mode = AxiomConfig(symmetric=bool(flags & 1),
                       associative=bool(flags & 2))
    return GammaSemiring(add, ops, mode)


def _cyclic_type(add, a):
    # (index, period) of the sequence a, 2a, 3a, ...
    seen = {}
    x, k = a, 1
    while x not in seen:
        seen[x] = k
        x = add[x, a]
        k += 1
    return seen[x], k - seen[x]


def element_invariants(s, permute_gamma=False):
    """
    Label-free invariant tuple of every element. Any isomorphism maps an
    element to an element with the same tuple; 0 is the only element whose
    tuple starts with 0.

    Parameters
    ----------
    s: GammaSemiring
    permute_gamma: bool
        When True the per-gamma part is sorted, so that it does not depend
        on the order of the tensors. Default=False

    Returns
    -------
    invariants: list of tuple
    """

    add = s.sum_table
    invs = []
    for a in range(s.n):
        additive = (int(a != 0),
                    int(add[a, a] == a),
                    *_cyclic_type(add, a),
                    int(np.sum(add[a] == a)),
                    int(np.sum(add[a] == 0)),
                    int(np.sum(add == a)))
        ternary = []
        for op in s.ops:
            ternary.append((int(op[a, a, a] == a),
                            int(op[a, a, a] == 0),
                            int(np.sum(op[a] == 0) + np.sum(op[:, a] == 0)
                                + np.sum(op[:, :, a] == 0)),
                            int(np.sum(op == a))))
        if permute_gamma:
            ternary.sort()
        invs.append(additive + tuple(ternary))

    return invs


def _relabeled_bytes(add, ops, perm):
    inv = np.argsort(perm)
    new_add = perm[add[np.ix_(inv, inv)]]
    new_ops = perm[ops[:, inv][:, :, inv][:, :, :, inv]]
    return new_add.astype(np.uint8).tobytes(), new_ops.astype(np.uint8)


def _relabeled_rows(add, ops, perms, gamma_orders):
    # One serialization body per (perm, gamma order), perm-major
    k = len(perms)
    inv = np.argsort(perms, axis=1)
    old_add = add[inv[:, :, None], inv[:, None, :]].reshape(k, -1)
    blocks = [np.take_along_axis(perms, old_add, axis=1)]
    i = inv[:, :, None, None]
    j = inv[:, None, :, None]
    m = inv[:, None, None, :]
    tensors = [np.take_along_axis(perms, op[i, j, m].reshape(k, -1), axis=1)
               for op in ops]
    rows = [np.hstack(blocks + [tensors[gi] for gi in gorder])
            for gorder in gamma_orders]
    return np.stack(rows, axis=1).reshape(k * len(gamma_orders), -1) \
        .astype(np.uint8)


def _lexmin_index(rows):
    cand = np.arange(len(rows))
    for col in range(rows.shape[1]):
        column = rows[cand, col]
        cand = cand[column == column.min()]
        if len(cand) == 1:
            break
    return int(cand[0])


def _scan_each(s, head, gamma_orders):
    best = None
    for perm in zero_fixing_permutations(s.n):
        perm = np.array(perm, dtype=np.int64)
        add_bytes, ops = _relabeled_bytes(s.sum_table, s.ops, perm)
        for gorder in gamma_orders:
            data = head + add_bytes + ops[list(gorder)].tobytes()
            if best is None or data < best[0]:
                best = (data, tuple(int(p) for p in perm), tuple(gorder))
    return best


def _scan_batched(s, head, gamma_orders):
    best = None
    perms_iter = zero_fixing_permutations(s.n)
    while True:
        chunk = list(islice(perms_iter, BATCH_SIZE))
        if not chunk:
            return best
        perms = np.array(chunk, dtype=np.int64)
        rows = _relabeled_rows(s.sum_table, s.ops, perms, gamma_orders)
        idx = _lexmin_index(rows)
        data = head + rows[idx].tobytes()
        if best is None or data < best[0]:
            p, gi = divmod(idx, len(gamma_orders))
            best = (data, tuple(int(x) for x in perms[p]),
                    tuple(gamma_orders[gi]))


def canonical_form(s, exhaustive=False, permute_gamma=False, check=True):
    """
    Canonical form of a structure: the smallest serialization over all
    0-fixing relabelings (and tensor orders when permute_gamma is set).

    Parameters
    ----------
    s: GammaSemiring
        Valid structure
    exhaustive: bool
        Serialize the relabelings one at a time instead of in numpy
        batches. Gives the same form. Default=False
    permute_gamma: bool
        Also minimize over reorderings of the tensors. Default=False
    check: bool
        Run verify_structure first. Default=True

    Returns
    -------
    form: CanonicalForm

    Raises
    ------
    ContractViolation
        When s fails verify_structure
    """

    if check:
        report = verify_structure(s)
        if not report.valid:
            raise ContractViolation(f"Cannot canonicalize an invalid "
                                    f"structure: {report.summary(3)}")

    gamma_orders = (list(permutations(range(s.g))) if permute_gamma
                    else [tuple(range(s.g))])
    head = HEADER + bytes([s.n, s.g, _flags(s.mode, permute_gamma)])
    if exhaustive:
        best = _scan_each(s, head, gamma_orders)
    else:
        best = _scan_batched(s, head, gamma_orders)

    return CanonicalForm(best[0], best[1], best[2])
