# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.


# Std imports
import warnings

# Third pary imports
import numpy as np
import pytest

# Local imports
from gammaforge.utils.data_operations import (SIGNATURE_COLUMNS,
                                              create_output_df,
                                              structured_to_df)
from gammaforge.invariants import IdealCount
from gammaforge.utils.method import Method
from gammaforge.utils.tools import (parallel_map,
                                    zero_fixing_permutations,
                                    mask_from_elements,
                                    elements_of_mask,
                                    stable_digest)


def _order(structure, offset=0):
    return structure.n + offset


class OrderMethod(Method):

    algorithm = 'ORDER'
    version = '1.0.0'
    dtype = [('order', 'int64')]

    def __init__(self, **kwargs):
        super().__init__(_order, **kwargs)


# ----- Data operations -----
def test_create_output_df():
    res_df = create_output_df(fields={'field_1': np.int32,
                                      'field_2': np.float64})
    expected_columns = list(SIGNATURE_COLUMNS) + ['field_1', 'field_2']
    assert expected_columns == list(res_df.columns)
    assert len(res_df) == 0


def test_structured_to_df():
    arr = np.array([(1, 'MODULAR'), (2, 'BOOLEAN')],
                   dtype=[('n', 'int64'), ('type_label', 'U9')])
    df = structured_to_df(arr, fields=['type_label'])
    assert list(df.columns) == ['type_label']
    assert df['type_label'].dtype == object
    assert df['type_label'].tolist() == ['MODULAR', 'BOOLEAN']


# ----- Tools -----
def test_zero_fixing_permutations():
    perms = list(zero_fixing_permutations(4))
    assert len(perms) == 6
    assert perms[0] == (0, 1, 2, 3)
    assert perms == sorted(perms)
    assert all(p[0] == 0 for p in perms)
    assert list(zero_fixing_permutations(1)) == [(0,)]


def test_masks():
    assert mask_from_elements([0, 2]) == 5
    assert elements_of_mask(5, 3) == [0, 2]
    assert elements_of_mask(mask_from_elements([]), 4) == []


def test_stable_digest():
    a = stable_digest({'n': 2, 'g': 1})
    b = stable_digest({'g': 1, 'n': 2})
    assert a == b
    assert len(a) == 16
    assert stable_digest({'n': 3, 'g': 1}) != a
    assert len(stable_digest([1, 2], length=8)) == 8


def test_parallel_map():
    items = [[0], [0, 2], [1, 3], []]
    serial = parallel_map(mask_from_elements, items)
    pooled = parallel_map(mask_from_elements, items, n_cores=2)
    assert serial == pooled == [1, 5, 10, 0]


# ----- Method -----
def test_method_run_corpus(create_testing_corpus):
    compute_instance = OrderMethod(offset=1)
    res = compute_instance.run_corpus(create_testing_corpus)
    assert res['order'].tolist() == [2, 3, 4]
    assert res['item_idx'].tolist() == [0, 1, 2]

    counts = IdealCount().run_corpus(create_testing_corpus, n_cores=2)
    assert counts['num_ideals'].tolist() == [1, 2, 2]


def test_method_params():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        compute_instance = OrderMethod(offset=2, bogus=1)
    assert any(issubclass(w.category, RuntimeWarning) for w in caught)
    assert compute_instance.params == {'offset': 2}

    compute_instance.params = {'offset': 0}
    assert compute_instance.params == {'offset': 0}


def test_method_rejects_non_structure():
    with pytest.raises(TypeError):
        OrderMethod().compute([[0]])
