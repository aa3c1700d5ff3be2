# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import logging
import warnings
from dataclasses import dataclass, field
from typing import Optional

# Third pary imports
import numpy as np
from scipy.stats import norm

# Local imports
from ..core.axioms import verify_structure
from ..core.structure import AdditiveTable, GammaSemiring
from ..invariants.ideals import ideals
from .monoids import enumerate_additive_monoids
from .search import free_cells

logger = logging.getLogger(__name__)


@dataclass
class SamplingReport:
    """
    Outcome of a Monte-Carlo sampling run.

    mean_ideals and ci95 are None when nothing was accepted (flagged).
    """

    n: int
    g: int
    seed: int
    trials: int
    accepted: int = 0
    mean_ideals: Optional[float] = None
    ci95: Optional[tuple] = None
    flagged: bool = False
    pairs: list = field(default_factory=list)

    @property
    def acceptance_rate(self):
        return self.accepted / self.trials if self.trials else 0.0

    def to_dict(self):
        return {'n': self.n,
                'g': self.g,
                'seed': self.seed,
                'trials': self.trials,
                'accepted': self.accepted,
                'acceptance_rate': self.acceptance_rate,
                'mean_ideals': self.mean_ideals,
                'ci95': list(self.ci95) if self.ci95 is not None else None,
                'flagged': self.flagged,
                'pairs': [list(p) for p in self.pairs]}


def sample_random(cfg, seed, trials, add=None):
    """
    Draw uniformly random tensor families, filling only the free cells,
    and record how many are valid and their mean ideal count.

    Parameters
    ----------
    cfg: SearchConfig
    seed: int
        Seed of numpy.random.default_rng
    trials: int
        Number of draws
    add: AdditiveTable | array-like | None
        Fixed additive table. When None every draw first picks one of the
        additive monoid classes uniformly. Default=None

    Returns
    -------
    report: SamplingReport
        Includes the 95 % normal-approximation interval of the mean ideal
        count and the (n * g, mean ideal count) pair
    """

    cfg.check_caps()
    n, g, mode = cfg.n, cfg.g, cfg.axiom_mode
    report = SamplingReport(n, g, seed, trials)
    if trials == 0:
        return report

    rng = np.random.default_rng(seed)
    tables = ([AdditiveTable(add)] if add is not None
              else enumerate_additive_monoids(n))
    cells = free_cells(n, g, mode)

    counts = []
    for _ in range(trials):
        table = tables[rng.integers(len(tables))]
        values = rng.integers(0, n, size=len(cells))
        ops = np.zeros((g, n, n, n), dtype=np.int64)
        for (gi, _, targets), v in zip(cells, values):
            for t in targets:
                ops[(gi,) + t] = v
        s = GammaSemiring(table, ops, mode)
        if verify_structure(s).valid:
            counts.append(len(ideals(s)))

    report.accepted = len(counts)
    if not counts:
        warnings.warn(f"No sample accepted in {trials} trials",
                      RuntimeWarning)
        report.flagged = True
        return report

    counts = np.array(counts, dtype=np.float64)
    mean = float(counts.mean())
    sem = 0.0
    if len(counts) > 1:
        sem = float(counts.std(ddof=1) / np.sqrt(len(counts)))
    z = norm.ppf(0.975)
    report.mean_ideals = mean
    report.ci95 = (mean - z * sem, mean + z * sem)
    report.pairs = [(n * g, mean)]
    logger.info("Sampling n=%d g=%d: %d/%d accepted", n, g, report.accepted,
                trials)

    return report
