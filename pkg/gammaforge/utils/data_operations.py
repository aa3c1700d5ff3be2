# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.


# Std imports

# Third pary imports
import numpy as np
import pandas as pd

# Local imports

# Column order of the signature CSV is part of the file format
SIGNATURE_COLUMNS = {'canon_hash': object,
                     'n': np.int64,
                     'g': np.int64,
                     'num_ideals': np.int64,
                     'num_congruences': 'Int64',
                     'aut_order': np.int64,
                     'entropy_nats': np.float64,
                     'type_label': object,
                     'rho': np.float64,
                     'kappa': np.float64}


def create_output_df(fields={}):
    """
    Function to create a custom pandas dataframe depending on the algorithm
    needs. Signature fields (canon_hash ... kappa) are preset.

    Parameters
    ----------
    fields: dict
        Dictionary with keys as field names and values as data types

    Returns
    -------
    output_df: pandas dataframe
        Pandas dataframe with specified fields and field dtypes
    """

    dtype_dict = dict(SIGNATURE_COLUMNS)

    dtype_dict.update(fields)

    out_df = pd.DataFrame(columns=dtype_dict.keys())
    out_df = out_df.astype(dtype=dtype_dict)

    return out_df


def structured_to_df(results, fields=None):
    """
    Convert the structured array returned by Method.run_corpus into a
    dataframe.

    Parameters
    ----------
    results: numpy.ndarray
        Structured array
    fields: list | None
        Fields to keep, all when None

    Returns
    -------
    df: pandas dataframe
    """

    df = pd.DataFrame.from_records(results)
    if fields is not None:
        df = df.loc[:, list(fields)]
    for col in df.columns:
        if df[col].dtype.kind == 'U':
            df[col] = df[col].astype(object)

    return df
