# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import warnings
from dataclasses import dataclass, field

# Third pary imports
import numpy as np
from scipy.linalg import lstsq

# Local imports
from ..core.exceptions import EmptyDatasetError

PREDICTORS = ['n', 'g', 'entropy_nats']
PIVOT_TOLERANCE = 1e-12


@dataclass
class RegressionResult:
    """
    Least-squares fit target ~ alpha * n + beta * g + gamma * H (+ c).

    Attributes
    ----------
    coefficients: tuple
        (alpha, beta, gamma)
    intercept: float | None
        None for the fit without intercept
    r_squared: float
        1 - SS_res / SS_tot, 0 when SS_tot = 0
    singular: bool
        The design was singular and the minimum-norm solution is reported
    """

    target: str
    coefficients: tuple
    intercept: float
    r_squared: float
    singular: bool = False
    n_rows: int = 0
    residuals: np.ndarray = field(default=None, repr=False)

    @property
    def r(self):
        return float(np.sqrt(self.r_squared))

    def to_dict(self):
        return {'target': self.target,
                'coefficients': dict(zip(['alpha', 'beta', 'gamma'],
                                         self.coefficients)),
                'intercept': self.intercept,
                'r_squared': self.r_squared,
                'r': self.r,
                'singular': self.singular,
                'n_rows': self.n_rows}


def solve_normal_equations(X, y):
    """
    Solve X'X b = X'y by Gaussian elimination with partial pivoting.

    Returns
    -------
    b: numpy.ndarray | None
        None when a pivot falls below the tolerance (singular design)
    """

    A = X.T @ X
    rhs = X.T @ y
    p = A.shape[0]
    M = np.hstack([A, rhs[:, None]]).astype(np.float64)
    scale = max(np.abs(A).max(), 1.0)

    for k in range(p):
        piv = k + int(np.argmax(np.abs(M[k:, k])))
        if abs(M[piv, k]) < PIVOT_TOLERANCE * scale:
            return None
        M[[k, piv]] = M[[piv, k]]
        M[k + 1:] -= np.outer(M[k + 1:, k] / M[k, k], M[k])

    b = np.zeros(p)
    for k in range(p - 1, -1, -1):
        b[k] = (M[k, p] - M[k, k + 1:p] @ b[k + 1:]) / M[k, k]
    return b


def design_matrix(frame, intercept=True):
    X = frame[PREDICTORS].to_numpy(dtype=np.float64)
    if intercept:
        X = np.hstack([X, np.ones((len(X), 1))])
    return X


def regression_fit(ds, target='num_ideals', intercept=True):
    """
    Ordinary least squares of a count on (n, g, H).

    Parameters
    ----------
    ds: SignatureDataset
    target: str
        'num_ideals' or 'num_congruences' (rows without a congruence count
        are left out). Default='num_ideals'
    intercept: bool
        Fit an intercept. Default=True

    Returns
    -------
    result: RegressionResult

    Raises
    ------
    EmptyDatasetError
        When there are no usable rows
    ValueError
        When there are fewer rows than parameters
    """

    frame = ds.frame.dropna(subset=[target])
    if len(frame) == 0:
        raise EmptyDatasetError("Regression needs at least one row")
    X = design_matrix(frame, intercept)
    y = frame[target].to_numpy(dtype=np.float64)
    if len(y) < X.shape[1]:
        raise ValueError(f"Regression with {X.shape[1]} parameters needs at "
                         f"least as many rows, got {len(y)}")

    b = solve_normal_equations(X, y)
    singular = b is None
    if singular:
        warnings.warn("Singular design, reporting the minimum-norm solution",
                      RuntimeWarning)
        b = lstsq(X, y)[0]

    residuals = y - X @ b
    ss_res = float(residuals @ residuals)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r_squared = 0.0 if ss_tot == 0 else min(max(1 - ss_res / ss_tot, 0.0),
                                            1.0)

    return RegressionResult(target=target,
                            coefficients=tuple(float(c) for c in b[:3]),
                            intercept=float(b[3]) if intercept else None,
                            r_squared=r_squared,
                            singular=singular,
                            n_rows=len(y),
                            residuals=residuals)
