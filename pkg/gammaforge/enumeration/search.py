# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
Constraint-driven generation of the ternary tensors over a fixed additive
table.

Free cells are visited gamma-outermost, then (a, b, c) in lexicographic
order. Cells with a 0 argument are pre-filled with 0 and, in symmetric
mode, only cells with a <= b <= c are free; their value is copied to every
permutation. After every tentative assignment all distributivity (and,
when configured, associativity) instances whose cells are assigned are
checked.
"""

# Std imports
import logging
import time
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Optional

# Third pary imports
import numpy as np

# Local imports
from ..core.axioms import validate_additive, verify_structure
from ..core.exceptions import (CapExceeded, ContractViolation,
                               InvariantViolation, StepBudgetExhausted,
                               StructureError)
from ..core.structure import AdditiveTable, AxiomConfig, GammaSemiring
from ..utils.tools import try_jit_decorate

logger = logging.getLogger(__name__)

MAX_ORDER = 4
MAX_GAMMA = 2


@dataclass(frozen=True)
class SearchConfig:
    """
    Parameters of an enumeration run.

    Attributes
    ----------
    n: int
        Order
    g: int
        Number of parameters
    axiom_mode: AxiomConfig
        Default=AxiomConfig()
    worker_count: int
        Processes used by enumerate_classes. Default=1
    step_budget: int | None
        Cap on extension steps, None for no cap. Default=None
    force: bool
        Lift the n <= 4, g <= 2 caps. Default=False
    permute_gamma: bool
        Identify structures that differ by a reordering of the tensors.
        Default=False
    """

    n: int
    g: int
    axiom_mode: AxiomConfig = field(default_factory=AxiomConfig)
    worker_count: int = 1
    step_budget: Optional[int] = None
    force: bool = False
    permute_gamma: bool = False

    def __post_init__(self):
        if self.n < 1 or self.g < 1:
            raise StructureError(f"Order and parameter count must be "
                                 f"positive, got n={self.n}, g={self.g}")
        if self.worker_count < 1:
            raise StructureError(f"worker_count must be positive, got "
                                 f"{self.worker_count}")

    def check_caps(self):
        """
        Raises
        ------
        CapExceeded
            When n > 4 or g > 2 and force is not set
        """

        if self.force:
            return
        if self.n > MAX_ORDER or self.g > MAX_GAMMA:
            raise CapExceeded(f"Enumeration is capped at n <= {MAX_ORDER} "
                              f"and g <= {MAX_GAMMA} (got n={self.n}, "
                              f"g={self.g}); use force to override")

    def to_dict(self):
        """Fields that determine the result (not worker_count)."""
        return {'n': self.n,
                'g': self.g,
                'axiom_mode': self.axiom_mode.to_dict(),
                'step_budget': self.step_budget,
                'permute_gamma': self.permute_gamma}


@dataclass
class SearchStats:
    """
    Counters of a search.

    extension_steps counts every tentative cell assignment, pruned the
    rejected ones, candidate_count the size of the unpruned space.
    """

    extension_steps: int = 0
    pruned: int = 0
    valid_found: int = 0
    wall_time: float = 0.0
    candidate_count: int = 0
    prune_witnesses: list = field(default_factory=list, repr=False)

    def merge(self, other):
        self.extension_steps += other.extension_steps
        self.pruned += other.pruned
        self.valid_found += other.valid_found
        self.candidate_count += other.candidate_count
        self.prune_witnesses.extend(other.prune_witnesses)
        return self

    @property
    def pruning_ratio(self):
        if self.extension_steps == 0:
            return float('nan')
        return self.candidate_count / self.extension_steps

    def to_json_dict(self):
        return {'extension_steps': self.extension_steps,
                'pruned': self.pruned,
                'valid_found': self.valid_found,
                'wall_time_s': round(self.wall_time, 6),
                'candidate_count': self.candidate_count}


def free_cells(n, g, mode):
    """
    Free cells of the search with the cells they fill.

    Returns
    -------
    cells: list of tuple
        (gamma, (a, b, c), targets), where targets lists every (a', b', c')
        receiving the value
    """

    cells = []
    for gi in range(g):
        for a, b, c in product(range(1, n), repeat=3):
            if mode.symmetric:
                if not a <= b <= c:
                    continue
                targets = sorted(set(permutations((a, b, c))))
            else:
                targets = [(a, b, c)]
            cells.append((gi, (a, b, c), targets))
    return cells


@try_jit_decorate({'nopython': True, 'cache': True})
def _distributive_witness(add, op, unknown):
    # First instance (slot, a, b, c, d) with all cells assigned and
    # {a+b, ., .} != {a, ., .} + {b, ., .} in the given slot
    n = add.shape[0]
    for a in range(n):
        for b in range(n):
            s = add[a, b]
            for c in range(n):
                for d in range(n):
                    lhs = op[s, c, d]
                    x = op[a, c, d]
                    y = op[b, c, d]
                    if lhs != unknown and x != unknown and y != unknown:
                        if lhs != add[x, y]:
                            return 0, a, b, c, d
                    lhs = op[c, s, d]
                    x = op[c, a, d]
                    y = op[c, b, d]
                    if lhs != unknown and x != unknown and y != unknown:
                        if lhs != add[x, y]:
                            return 1, a, b, c, d
                    lhs = op[c, d, s]
                    x = op[c, d, a]
                    y = op[c, d, b]
                    if lhs != unknown and x != unknown and y != unknown:
                        if lhs != add[x, y]:
                            return 2, a, b, c, d
    return -1, -1, -1, -1, -1


@try_jit_decorate({'nopython': True, 'cache': True})
def _associative_witness(ops, unknown):
    # ops carries the extra "unknown" index in every slot, which maps to
    # unknown; returns (gamma, delta, a, b, c, d, e) or -1s
    g = ops.shape[0]
    n = unknown
    for gi in range(g):
        for di in range(g):
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        for d in range(n):
                            for e in range(n):
                                x = ops[di, ops[gi, a, b, c], d, e]
                                y = ops[di, a, ops[gi, b, c, d], e]
                                z = ops[di, a, b, ops[gi, c, d, e]]
                                if ((x != unknown and y != unknown and x != y)
                                        or (y != unknown and z != unknown
                                            and y != z)
                                        or (x != unknown and z != unknown
                                            and x != z)):
                                    return gi, di, a, b, c, d, e
    return -1, -1, -1, -1, -1, -1, -1


SLOT_NAMES = ('distributive_left', 'distributive_middle', 'distributive_right')


def _padded_tensors(n, g):
    # Index n stands for "not assigned yet" in every slot and in the values
    ops = np.full((g, n + 1, n + 1, n + 1), n, dtype=np.int64)
    zero_cells = np.zeros((n, n, n), dtype=bool)
    zero_cells[0, :, :] = zero_cells[:, 0, :] = zero_cells[:, :, 0] = True
    for gi in range(g):
        ops[gi, :n, :n, :n][zero_cells] = 0
    return ops


def generate_ternary_tables(add, cfg, prefix=(), keep_witnesses=False):
    """
    All labeled valid tensor families over a fixed additive table.

    Parameters
    ----------
    add: AdditiveTable | array-like
        Valid additive table of order cfg.n
    cfg: SearchConfig
    prefix: tuple
        Values forced on the first len(prefix) free cells (work item
        split). Default=()
    keep_witnesses: bool
        Record (cell, value, violation name, witness) for every prune in
        stats.prune_witnesses. Default=False

    Returns
    -------
    structures: list of GammaSemiring
        In lexicographic order of the free cell values
    stats: SearchStats

    Raises
    ------
    ContractViolation
        When add is not a valid additive table
    StepBudgetExhausted
        When cfg.step_budget extension steps are spent; carries the stats
        and the structures found so far
    InvariantViolation
        When a completed family fails the final verify_structure
    """

    table = AdditiveTable(add)
    report = validate_additive(table)
    if not report.valid:
        raise ContractViolation(f"Additive table is not a commutative "
                                f"monoid: {report.summary(3)}")
    n, g, mode = table.n, cfg.g, cfg.axiom_mode
    if n != cfg.n:
        raise StructureError(f"Additive table of order {n} for a search "
                             f"of order {cfg.n}")

    add_arr = np.ascontiguousarray(table.table)
    ops = _padded_tensors(n, g)
    cells = free_cells(n, g, mode)
    stats = SearchStats(candidate_count=n ** (len(cells) - len(prefix)))
    found = []
    start = time.perf_counter()

    def violation(gi):
        w = _distributive_witness(add_arr, ops[gi], n)
        if w[0] >= 0:
            return SLOT_NAMES[w[0]], (gi,) + tuple(int(x) for x in w[1:])
        if mode.associative:
            w = _associative_witness(ops, n)
            if w[0] >= 0:
                return 'associative_ternary', tuple(int(x) for x in w)
        return None

    def complete():
        s = GammaSemiring(add_arr, ops[:, :n, :n, :n].copy(), mode)
        check = verify_structure(s)
        if not check.valid:
            raise InvariantViolation(f"Search produced an invalid "
                                     f"structure: {check.summary(3)}",
                                     witness=check.violations[0].witness)
        found.append(s)
        stats.valid_found += 1

    def extend(depth):
        if depth == len(cells):
            complete()
            return
        gi, cell, targets = cells[depth]
        values = [prefix[depth]] if depth < len(prefix) else range(n)
        for value in values:
            if (cfg.step_budget is not None
                    and stats.extension_steps >= cfg.step_budget):
                stats.wall_time = time.perf_counter() - start
                raise StepBudgetExhausted(
                    f"Step budget of {cfg.step_budget} exhausted after "
                    f"{stats.valid_found} structures", stats, list(found))
            stats.extension_steps += 1
            for t in targets:
                ops[(gi,) + t] = value
            bad = violation(gi)
            if bad is None:
                extend(depth + 1)
            else:
                stats.pruned += 1
                if keep_witnesses:
                    stats.prune_witnesses.append((gi, cell, value) + bad)
        for t in targets:
            ops[(gi,) + t] = n

    if not cells:
        # n = 1: the all-zero family is the single forced extension
        stats.extension_steps = 1
    extend(0)
    stats.wall_time = time.perf_counter() - start
    logger.debug("n=%d g=%d prefix=%s: %d steps, %d pruned, %d found", n, g,
                 prefix, stats.extension_steps, stats.pruned,
                 stats.valid_found)

    return found, stats
