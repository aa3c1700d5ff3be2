# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports

# Third pary imports
import numpy as np
from scipy.special import xlogy

# Local imports
from ..canonical.automorphisms import orbit_partition
from ..utils.method import Method

# Orbit action per entropy mode
ENTROPY_MODES = {'full-aut': 'full', 'additive-aut': 'additive'}


def entropy_from_orbits(orbit_sizes):
    """
    Shannon entropy (nats) of the distribution p_i = size_i / n.

    Parameters
    ----------
    orbit_sizes: sequence of int

    Returns
    -------
    entropy: float
        0 for a single orbit and exactly ln(n) for singleton orbits
    """

    sizes = np.asarray(orbit_sizes, dtype=np.float64)
    n = sizes.sum()
    if len(sizes) <= 1:
        return 0.0
    h = np.log(n) - xlogy(sizes, sizes).sum() / n
    return float(np.clip(h, 0.0, np.log(n)))


def compute_entropy(s, action='full'):
    """
    Structural entropy of a structure from its orbit partition.

    Parameters
    ----------
    s: GammaSemiring
    action: str
        'full' for the automorphism group of the whole structure,
        'additive' for Aut(T, +). Default='full'

    Returns
    -------
    entropy: float
        Entropy in nats, within [0, ln n]
    """

    return entropy_from_orbits([len(o) for o in orbit_partition(s, action)])


class StructuralEntropy(Method):

    algorithm = 'STRUCTURAL_ENTROPY'
    version = '1.0.0'
    dtype = [('entropy_nats', 'float64')]

    def __init__(self, **kwargs):
        """
        Shannon entropy of the orbit size distribution

        Parameters
        ----------
        action: str
            'full' or 'additive'. Default='full'
        """

        super().__init__(compute_entropy, **kwargs)
