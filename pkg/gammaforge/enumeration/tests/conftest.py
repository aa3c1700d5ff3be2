# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import pytest

# Local imports
from gammaforge.core import cyclic_group_table
from gammaforge.enumeration import SearchConfig, enumerate_classes


@pytest.fixture(scope="module")
def create_z3_table():
    return cyclic_group_table(3)


@pytest.fixture(scope="module")
def create_classes_21():
    """
    Creates the classes of order 2 with one parameter and their stats
    """

    return enumerate_classes(SearchConfig(2, 1), return_stats=True)
