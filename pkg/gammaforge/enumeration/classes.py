# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import functools
import logging
import time
from typing import NamedTuple

# Third pary imports

# Local imports
from ..canonical.canonical_form import CanonicalForm, canonical_form
from ..core.exceptions import StepBudgetExhausted
from ..core.structure import GammaSemiring
from ..utils.tools import parallel_map
from .monoids import enumerate_additive_monoids
from .search import SearchStats, free_cells, generate_ternary_tables

logger = logging.getLogger(__name__)


class ClassRecord(NamedTuple):
    form: CanonicalForm
    representative: GammaSemiring
    class_size: int


def work_items(cfg, monoids):
    """
    Independent work items: (monoid index, prefix) with one item per value
    of the first free cell. The split does not depend on worker_count.
    """

    has_free = len(free_cells(cfg.n, cfg.g, cfg.axiom_mode)) > 0
    items = []
    for mi in range(len(monoids)):
        if has_free:
            items.extend((mi, (v,)) for v in range(cfg.n))
        else:
            items.append((mi, ()))
    return items


def _run_work_item(cfg, tables, item):
    mi, prefix = item
    exhausted = False
    try:
        found, stats = generate_ternary_tables(tables[mi], cfg, prefix)
    except StepBudgetExhausted as exc:
        found, stats, exhausted = exc.partial, exc.stats, True

    forms = [canonical_form(s, permute_gamma=cfg.permute_gamma,
                            check=False).bytes for s in found]
    return forms, stats, exhausted


def enumerate_classes(cfg, return_stats=False):
    """
    Isomorphism classes of all structures of order cfg.n with cfg.g
    parameters, over every additive monoid class.

    Parameters
    ----------
    cfg: SearchConfig
    return_stats: bool
        Also return the merged SearchStats. Default=False

    Returns
    -------
    records: list of ClassRecord
        Sorted by canonical form bytes; the representative is the structure
        in its canonical labeling and class_size counts the labeled
        families found for the form
    stats: SearchStats
        Only when return_stats is True

    Raises
    ------
    CapExceeded
        When cfg is outside the enumeration caps
    StepBudgetExhausted
        When a work item runs out of steps (cfg.step_budget applies per
        work item); partial holds the records merged so far
    """

    cfg.check_caps()
    start = time.perf_counter()
    monoids = enumerate_additive_monoids(cfg.n)
    tables = [m.tolist() for m in monoids]
    items = work_items(cfg, monoids)
    logger.info("Enumerating n=%d g=%d (%s): %d monoid classes, %d work "
                "items on %d workers", cfg.n, cfg.g, cfg.axiom_mode.name,
                len(monoids), len(items), cfg.worker_count)

    run = functools.partial(_run_work_item, cfg, tables)
    results = parallel_map(run, items, cfg.worker_count)

    counts = {}
    stats = SearchStats()
    exhausted = False
    for forms, item_stats, item_exhausted in results:
        stats.merge(item_stats)
        exhausted = exhausted or item_exhausted
        for data in forms:
            counts[data] = counts.get(data, 0) + 1

    records = []
    for data in sorted(counts):
        form = CanonicalForm(data)
        records.append(ClassRecord(form, form.to_structure(), counts[data]))
    stats.wall_time = time.perf_counter() - start

    if exhausted:
        raise StepBudgetExhausted(f"Step budget of {cfg.step_budget} "
                                  f"exhausted in at least one work item",
                                  stats, records)

    logger.info("Found %d classes from %d labeled structures in %.3f s",
                len(records), stats.valid_found, stats.wall_time)

    if return_stats:
        return records, stats
    return records
