# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import warnings

# Third pary imports
import numpy as np
import pandas as pd
from scipy.stats import pearsonr

# Local imports
from ..core.exceptions import EmptyDatasetError
from ..invariants.congruences import radical_decomposition
from .published import CLAIMED_KAPPA_RHO

SCHEMA_VERSION = 1
DECOMPOSITION_STATUSES = ('holds', 'fails', 'radical-trivial')


def _optional_int(value):
    return None if pd.isna(value) else int(value)


def entropy_simplicity_table(ds):
    """
    Per class: simple (|Con| <= 2), zero entropy, and whether the two agree.
    simple is None when the congruence count is missing.

    Returns
    -------
    table: pandas.DataFrame
        canon_hash, simple, zero_entropy, agree
    """

    frame = ds.frame
    simple = [None if pd.isna(c) else bool(c <= 2)
              for c in frame['num_congruences']]
    zero_entropy = (frame['entropy_nats'] == 0.0).tolist()
    agree = [None if s is None else s == z
             for s, z in zip(simple, zero_entropy)]
    return pd.DataFrame({'canon_hash': frame['canon_hash'].tolist(),
                         'simple': simple,
                         'zero_entropy': zero_entropy,
                         'agree': agree})


def correlation_report(ds):
    """
    Residuals of kappa against 1 + rho, their Pearson correlation, the
    radical-congruence checks and the entropy-simplicity table.

    Parameters
    ----------
    ds: SignatureDataset
        When ds.structures is filled, the product decomposition
        |Con(T)| = |Con(T/Rad)| * |Con(Rad)| is tallied as well

    Returns
    -------
    report: dict
        JSON-ready, with schema_version

    Raises
    ------
    EmptyDatasetError
        When ds has no rows
    """

    frame = ds.frame
    if len(frame) == 0:
        raise EmptyDatasetError("Correlation report needs at least one row")

    rows = []
    for rec in frame.itertuples(index=False):
        kappa = None if pd.isna(rec.kappa) else float(rec.kappa)
        rad_size = int(round(rec.rho * rec.n))
        nontrivial = 1 < rad_size < rec.n
        row = {'canon_hash': rec.canon_hash,
               'rho': float(rec.rho),
               'kappa': kappa,
               'residual': (None if kappa is None
                            else kappa - (1.0 + rec.rho)),
               'nontrivial_radical': nontrivial,
               'kappa_above_one': None if kappa is None else kappa > 1.0}
        if rec.canon_hash in ds.structures:
            dec = radical_decomposition(ds.structures[rec.canon_hash])
            row['decomposition'] = dec['status']
        rows.append(row)

    residuals = np.array([r['residual'] for r in rows
                          if r['residual'] is not None])
    report = {'schema_version': SCHEMA_VERSION,
              'claimed': CLAIMED_KAPPA_RHO,
              'rows': rows,
              'mean_abs_residual': (float(np.abs(residuals).mean())
                                    if residuals.size else None)}

    valid = frame.dropna(subset=['kappa'])
    pearson = None
    if (len(valid) >= 3 and valid['rho'].nunique() > 1
            and valid['kappa'].nunique() > 1):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            r, p = pearsonr(valid['rho'], valid['kappa'])
        pearson = {'r': float(r), 'p_value': float(p)}
    report['pearson_rho_kappa'] = pearson

    nontrivial = [r for r in rows if r['nontrivial_radical']
                  and r['kappa_above_one'] is not None]
    report['nontrivial_radical_kappa_above_one'] = {
        'holds': sum(r['kappa_above_one'] for r in nontrivial),
        'fails': sum(not r['kappa_above_one'] for r in nontrivial)}

    if ds.structures:
        statuses = [r.get('decomposition') for r in rows]
        report['decomposition_tally'] = {s: statuses.count(s)
                                         for s in DECOMPOSITION_STATUSES}

    table = entropy_simplicity_table(ds)
    agree = [a for a in table['agree'] if a is not None]
    report['entropy_simplicity'] = {
        'agree': sum(agree),
        'disagree': len(agree) - sum(agree),
        'unknown': int(table['agree'].isna().sum())}

    return report
