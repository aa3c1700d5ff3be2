# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
Previously published values that reports print next to the computed ones.
They are labelled "claimed" and are never used as expected values.
"""

# (n, g, type, automorphism group order)
CLAIMED_AUT_ORDERS = [(2, 1, 'Boolean', 2),
                      (3, 1, 'Modular', 3),
                      (3, 2, 'Mixed idempotent', 6),
                      (4, 1, 'Truncated', 4),
                      (4, 2, 'Tropical', 8)]

# (n, g, steps, runtime in seconds)
CLAIMED_RUNTIMES = [(2, 1, 48, 0.01),
                    (3, 1, 243, 0.12),
                    (3, 2, 486, 0.38),
                    (4, 1, 1024, 1.75),
                    (4, 2, 2048, 4.13)]

CLAIMED_REGRESSION_R = 0.96
CLAIMED_KAPPA_RHO = 'kappa ~ 1 + rho'
CLAIMED_AUT_DOUBLING = 'group order roughly doubles with an added parameter'
