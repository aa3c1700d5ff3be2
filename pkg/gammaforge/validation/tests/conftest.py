# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import pytest

import numpy as np

# Local imports
from gammaforge.core import GammaSemiring, cyclic_group_table
from gammaforge.enumeration import SearchConfig, enumerate_classes


@pytest.fixture(scope="module")
def create_corpus():
    """
    Creates the class records of order 1 and 2 with one parameter
    """

    return (enumerate_classes(SearchConfig(1, 1))
            + enumerate_classes(SearchConfig(2, 1)))


@pytest.fixture(scope="module")
def create_order3_corpus():
    """
    Creates the class records of order 1 to 3 with one parameter
    """

    return [rec for n in (1, 2, 3)
            for rec in enumerate_classes(SearchConfig(n, 1))]


@pytest.fixture(scope="module")
def create_order4_corpus():
    """
    Creates the class records of order 4 with one parameter
    """

    return enumerate_classes(SearchConfig(4, 1))


@pytest.fixture(scope="module")
def create_z3_cube():
    e = np.arange(3)
    cube = (e[:, None, None] * e[None, :, None] * e[None, None, :]) % 3
    return GammaSemiring(cyclic_group_table(3), [cube])
