# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import numpy as np

# Local imports
from ..core.constructions import duplicate_gamma
from ..core.exceptions import InvariantViolation
from ..invariants.signature import classify_type, signature
from .published import CLAIMED_AUT_DOUBLING

SCHEMA_VERSION = 1


def _items(corpus):
    # (hash, structure) pairs from ClassRecords or a hash -> structure dict
    if isinstance(corpus, dict):
        return sorted(corpus.items())
    return [(rec.form.hash, rec.representative) for rec in corpus]


def stability_check(corpus, entropy_mode='full-aut'):
    """
    Signature of every class before and after parameter duplication.

    Parameters
    ----------
    corpus: list of ClassRecord | dict
        Records of enumerate_classes or canon_hash -> structure
    entropy_mode: str
        Default='full-aut'

    Returns
    -------
    report: dict
        rows with the signature delta (only the g coordinate may move),
        type labels before and after, the automorphism orders before and
        after next to the claimed doubling, and the share of unchanged
        type labels

    Raises
    ------
    InvariantViolation
        When duplication changes anything but g
    """

    rows = []
    for canon_hash, s in _items(corpus):
        before = signature(s, entropy_mode, allow_partial=True)
        dup = duplicate_gamma(s)
        after = signature(dup, entropy_mode, allow_partial=True)

        kept = (before.n, before.num_ideals, before.num_congruences,
                before.aut_order, before.entropy)
        moved = (after.n, after.num_ideals, after.num_congruences,
                 after.aut_order, after.entropy)
        if kept != moved or after.g != 2 * before.g:
            raise InvariantViolation(f"Duplication changed the signature of "
                                     f"{canon_hash}: {before} -> {after}",
                                     witness=canon_hash)

        label, label_dup = classify_type(s).value, classify_type(dup).value
        rows.append({'canon_hash': canon_hash,
                     'delta': [0, after.g - before.g, 0, 0, 0, 0.0],
                     'type_label': label,
                     'type_label_duplicated': label_dup,
                     'label_stable': label == label_dup,
                     'aut_order': before.aut_order,
                     'aut_order_duplicated': after.aut_order})

    stable = [r['label_stable'] for r in rows]
    return {'schema_version': SCHEMA_VERSION,
            'classes': len(rows),
            'label_stability': float(np.mean(stable)) if rows else None,
            'claimed_aut_doubling': CLAIMED_AUT_DOUBLING,
            'aut_doubled': sum(r['aut_order_duplicated'] == 2 * r['aut_order']
                               for r in rows),
            'rows': rows}
