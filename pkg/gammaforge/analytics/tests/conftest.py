# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import pytest

import numpy as np
import pandas as pd

# Local imports
from gammaforge.analytics import SignatureDataset, build_dataset
from gammaforge.enumeration import SearchConfig, enumerate_classes


@pytest.fixture(scope="module")
def create_small_corpus():
    """
    Creates the class records of order 1 and 2 with one parameter
    """

    return (enumerate_classes(SearchConfig(1, 1))
            + enumerate_classes(SearchConfig(2, 1)))


@pytest.fixture(scope="module")
def create_small_dataset(create_small_corpus):
    return build_dataset(create_small_corpus, provenance={'max_n': 2})


@pytest.fixture(scope="module")
def create_order3_dataset():
    """
    Creates the signature dataset of order 2 and 3 with one parameter
    """

    corpus = (enumerate_classes(SearchConfig(2, 1))
              + enumerate_classes(SearchConfig(3, 1)))
    return build_dataset(corpus)


@pytest.fixture(scope="module")
def create_plane_dataset():
    """
    Creates a synthetic dataset whose ideal count is an exact plane in
    (n, g, H)
    """

    rng = np.random.default_rng(7)
    n = rng.integers(1, 5, 12)
    g = rng.integers(1, 3, 12)
    h = rng.uniform(0, 1.5, 12)
    frame = pd.DataFrame({'canon_hash': [f"{i:016x}" for i in range(12)],
                          'n': n,
                          'g': g,
                          'num_ideals': 2.0 * n + 3.0 * g + 0.5 * h + 1.0,
                          'num_congruences': pd.array([None] * 12,
                                                      dtype='Int64'),
                          'aut_order': 1,
                          'entropy_nats': h,
                          'type_label': 'HYBRID',
                          'rho': 1.0,
                          'kappa': np.nan})
    return SignatureDataset(frame)
