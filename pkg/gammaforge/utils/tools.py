# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import hashlib
import json
import logging
import multiprocessing as mp
import warnings
from itertools import permutations

# Third pary imports

# Local imports

logger = logging.getLogger(__name__)


def try_jit_decorate(jit_kwargs):
    try:
        from numba import jit
        return jit(**jit_kwargs)
    except ImportError:
        return lambda x: x


def parallel_map(func, items, n_cores=None):
    """
    Map a picklable function over items, optionally with a process pool.

    Parameters
    ----------
    func: callable
        Module level function (must be picklable)
    items: list
        Work items
    n_cores: None | int
        Number of cores to use in multiprocessing. When None or 1,
        multiprocessing is not used. Default=None

    Returns
    -------
    results: list
        Results in the order of items, independent of scheduling
    """

    items = list(items)
    if n_cores is None or n_cores < 2 or mp.cpu_count() < 2 or len(items) < 2:
        return [func(item) for item in items]

    if n_cores > mp.cpu_count():
        n_cores = mp.cpu_count()
        warnings.warn(f"Maximum number of CPUs is {mp.cpu_count()}",
                      RuntimeWarning)

    logger.debug("Mapping %d items over %d processes", len(items), n_cores)
    with mp.Pool(n_cores) as pool:
        results = pool.map(func, items)

    return results


def zero_fixing_permutations(n):
    """
    All permutations of range(n) that fix 0, in lexicographic order.

    Parameters
    ----------
    n: int
        Number of elements

    Returns
    -------
    perms: generator of tuple
        Permutations as image tuples, perm[x] is the image of x
    """

    for tail in permutations(range(1, n)):
        yield (0,) + tail


def mask_from_elements(elements):
    mask = 0
    for x in elements:
        mask |= 1 << int(x)
    return mask


def elements_of_mask(mask, n):
    return [x for x in range(n) if mask >> x & 1]


def stable_digest(obj, length=16):
    """
    Hex digest of a JSON-serializable object with sorted keys.

    Parameters
    ----------
    obj: dict | list
        JSON-serializable payload
    length: int
        Number of hex characters kept. Default=16

    Returns
    -------
    digest: str
        Truncated sha256 hex digest
    """

    payload = json.dumps(obj, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(payload.encode('utf-8')).hexdigest()[:length]
