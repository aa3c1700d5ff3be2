# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import pytest

import numpy as np

# Local imports
from gammaforge.core import (GammaSemiring, boolean_structure,
                             chain_semilattice_table, cyclic_group_table,
                             direct_product, trivial_structure,
                             zero_multiplication)


@pytest.fixture(scope="module")
def create_named():
    """
    Creates the small named structures used across the invariant tests
    """

    e = np.arange(3)
    cube = (e[:, None, None] * e[None, :, None] * e[None, None, :]) % 3
    boolean = boolean_structure()
    return {'trivial': trivial_structure(),
            'boolean': boolean,
            'z3_cube': GammaSemiring(cyclic_group_table(3), [cube]),
            'z3_zero': zero_multiplication(cyclic_group_table(3)),
            'chain': zero_multiplication(chain_semilattice_table(3)),
            'truncated': zero_multiplication([[0, 1, 2],
                                               [1, 2, 2],
                                               [2, 2, 2]]),
            'hybrid': zero_multiplication([[0, 1, 2],
                                           [1, 2, 1],
                                           [2, 1, 2]]),
            'boolean_square': direct_product(boolean, boolean)}
