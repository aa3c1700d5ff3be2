# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import pytest

# Local imports
from gammaforge.core.constructions import (boolean_structure,
                                           cyclic_group_table,
                                           trivial_structure,
                                           zero_multiplication)


@pytest.fixture(scope="module")
def create_testing_corpus():
    """
    Creates a small corpus: trivial, Boolean and Z3 with zero products
    """

    return [trivial_structure(),
            boolean_structure(),
            zero_multiplication(cyclic_group_table(3))]
