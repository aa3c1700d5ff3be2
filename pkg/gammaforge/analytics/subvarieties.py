# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import numpy as np
import pandas as pd

# Local imports
from ..invariants.signature import (has_ternary_identity, is_additive_group,
                                    is_additively_idempotent)

SUBVARIETIES = ('additively_idempotent', 'additive_group', 'ternary_identity',
                'zero_multiplication')


def subvariety_flags(s):
    """Membership of one structure in the tallied subvarieties."""
    return {'additively_idempotent': is_additively_idempotent(s.sum_table),
            'additive_group': is_additive_group(s.sum_table),
            'ternary_identity': bool(has_ternary_identity(s)),
            'zero_multiplication': bool(np.all(s.ops == 0))}


def subvariety_tally(structures):
    """
    Number of classes in each subvariety.

    Parameters
    ----------
    structures: dict
        canon_hash -> structure

    Returns
    -------
    tally: pandas.DataFrame
        One row per subvariety with columns subvariety, classes, share
    """

    flags = [subvariety_flags(structures[h]) for h in sorted(structures)]
    total = len(flags)
    counts = [sum(f[name] for f in flags) for name in SUBVARIETIES]
    return pd.DataFrame({'subvariety': list(SUBVARIETIES),
                         'classes': counts,
                         'share': [c / total if total else np.nan
                                   for c in counts]})
