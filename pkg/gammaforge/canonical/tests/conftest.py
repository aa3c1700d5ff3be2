# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import pytest

import numpy as np

# Local imports
from gammaforge.core import (GammaSemiring, cyclic_group_table,
                             zero_multiplication)
from gammaforge.enumeration import SearchConfig, enumerate_classes


def _z3_cube(t):
    e = np.arange(3)
    return (t * e[:, None, None] * e[None, :, None] * e[None, None, :]) % 3


@pytest.fixture(scope="module")
def create_z3_family():
    """
    Creates Z3 with {a, b, c} = t * abc mod 3 for t = 0, 1, 2
    """

    return [GammaSemiring(cyclic_group_table(3), [_z3_cube(t)])
            for t in range(3)]


@pytest.fixture(scope="module")
def create_z3_pair():
    """
    Creates Z3 with two parameters (t = 1, 2) in both orders
    """

    add = cyclic_group_table(3)
    return (GammaSemiring(add, [_z3_cube(1), _z3_cube(2)]),
            GammaSemiring(add, [_z3_cube(2), _z3_cube(1)]))


@pytest.fixture(scope="module")
def create_klein():
    """
    Creates the Klein four-group with zero products
    """

    e = np.arange(4)
    return zero_multiplication(np.bitwise_xor.outer(e, e))


@pytest.fixture(scope="module")
def create_order3_classes():
    """
    Creates the class representatives of order 1 to 3 with one parameter
    """

    return [rec.representative for n in (1, 2, 3)
            for rec in enumerate_classes(SearchConfig(n, 1))]
