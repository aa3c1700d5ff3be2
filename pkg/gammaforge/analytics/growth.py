# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import logging

# Third pary imports
import numpy as np
import pandas as pd

# Local imports
from ..core.exceptions import CapExceeded, StepBudgetExhausted
from ..core.structure import AxiomConfig
from ..enumeration.classes import enumerate_classes
from ..enumeration.search import SearchConfig

logger = logging.getLogger(__name__)

GROWTH_COLUMNS = {'n': np.int64,
                  'g': np.int64,
                  'classes': 'Int64',
                  'labeled': 'Int64',
                  'extension_steps': 'Int64',
                  'candidate_count': 'Int64',
                  'ratio': np.float64,
                  'classes_permute_gamma': 'Int64',
                  'flagged': bool}


def storage_cost(n, g):
    """
    Bits needed for the tensors: n**3 * g * log2(n).

    Parameters
    ----------
    n, g: int
        Order and number of parameters (both >= 1)

    Returns
    -------
    bits: float
    """

    if n < 1 or g < 1:
        raise ValueError(f"n and g must be positive, got {n}, {g}")
    return float(n ** 3 * g * np.log2(n))


def _count(cfg):
    try:
        records, stats = enumerate_classes(cfg, return_stats=True)
    except (CapExceeded, StepBudgetExhausted) as exc:
        logger.info("n=%d g=%d not counted: %s", cfg.n, cfg.g, exc)
        return None
    return records, stats


def growth_table(max_n, max_g, axiom_mode=None, worker_count=1,
                 force=False, step_budget=None, permute_gamma_column=True):
    """
    Class counts N(n, g) for 1 <= n <= max_n, 1 <= g <= max_g.

    Parameters
    ----------
    max_n, max_g: int
    axiom_mode: AxiomConfig | None
        Default=AxiomConfig()
    worker_count: int
        Default=1
    force: bool
        Lift the enumeration caps. Default=False
    step_budget: int | None
        Per work item. Default=None
    permute_gamma_column: bool
        Also count classes when tensor reorderings are identified.
        Default=True

    Returns
    -------
    table: pandas.DataFrame
        n, g, classes, labeled, extension_steps, candidate_count,
        ratio = N(n, g+1) / N(n, g), classes_permute_gamma and flagged
        (cell refused by a cap or the step budget, counts missing)
    """

    axiom_mode = axiom_mode if axiom_mode is not None else AxiomConfig()
    rows = []
    for n in range(1, max_n + 1):
        for g in range(1, max_g + 1):
            cfg = SearchConfig(n, g, axiom_mode, worker_count=worker_count,
                               step_budget=step_budget, force=force)
            row = {'n': n, 'g': g, 'classes': None, 'labeled': None,
                   'extension_steps': None, 'candidate_count': None,
                   'classes_permute_gamma': None, 'flagged': True}
            counted = _count(cfg)
            if counted is not None:
                records, stats = counted
                row.update(classes=len(records), labeled=stats.valid_found,
                           extension_steps=stats.extension_steps,
                           candidate_count=stats.candidate_count,
                           flagged=False)
                if permute_gamma_column:
                    perm_cfg = SearchConfig(n, g, axiom_mode,
                                            worker_count=worker_count,
                                            step_budget=step_budget,
                                            force=force, permute_gamma=True)
                    perm = _count(perm_cfg)
                    if perm is not None:
                        row['classes_permute_gamma'] = len(perm[0])
            rows.append(row)

    table = pd.DataFrame(rows, columns=list(GROWTH_COLUMNS))
    table = table.astype(GROWTH_COLUMNS)
    counts = {(r.n, r.g): r.classes for r in table.itertuples()}
    table['ratio'] = [
        (float(counts[(r.n, r.g + 1)]) / float(r.classes)
         if (r.n, r.g + 1) in counts and not pd.isna(counts[(r.n, r.g + 1)])
         and not pd.isna(r.classes) else np.nan)
        for r in table.itertuples()]

    return table
