# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import pytest

import numpy as np

# Local imports
from gammaforge.core import (boolean_structure, chain_semilattice_table,
                             cyclic_group_table, zero_multiplication,
                             GammaSemiring)


@pytest.fixture(scope="module")
def create_boolean():
    """
    Creates the 2-element Boolean structure
    """

    return boolean_structure()


@pytest.fixture(scope="module")
def create_z3():
    """
    Creates Z3 with the product {a, b, c} = abc mod 3
    """

    e = np.arange(3)
    cube = (e[:, None, None] * e[None, :, None] * e[None, None, :]) % 3
    return GammaSemiring(cyclic_group_table(3), [cube])


@pytest.fixture(scope="module")
def create_chain():
    """
    Creates the 3-element max-chain with zero products
    """

    return zero_multiplication(chain_semilattice_table(3))
