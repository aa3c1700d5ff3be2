# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
Principal component projection of signature vectors with a cyclic Jacobi
eigensolver.
"""

# Std imports
import logging
import warnings
from dataclasses import dataclass, field

# Third pary imports
import numpy as np
import pandas as pd
from sklearn.preprocessing import StandardScaler

# Local imports
from .dataset import SIGNATURE_VECTOR

logger = logging.getLogger(__name__)

JACOBI_TOLERANCE = 1e-10
JACOBI_MAX_SWEEPS = 50
COUNT_COLUMNS = ['num_ideals', 'num_congruences', 'aut_order']
NORMALIZATIONS = ('zscore', 'per_n')


def jacobi_eigh(C, tol=JACOBI_TOLERANCE, max_sweeps=JACOBI_MAX_SWEEPS):
    """
    Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations
    (row-major sweep over the upper triangle).

    Parameters
    ----------
    C: numpy.ndarray
        Symmetric matrix
    tol: float
        Stop when the off-diagonal Frobenius norm drops below tol.
        Default=1e-10
    max_sweeps: int
        Default=50

    Returns
    -------
    eigenvalues: numpy.ndarray
        Sorted descending (stable for ties)
    eigenvectors: numpy.ndarray
        Unit columns, first nonzero coordinate positive
    """

    A = np.array(C, dtype=np.float64)
    p = A.shape[0]
    V = np.eye(p)

    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.triu(A, 1) ** 2) * 2)
        if off < tol:
            break
        for i in range(p - 1):
            for j in range(i + 1, p):
                if A[i, j] == 0.0:
                    continue
                theta = (A[j, j] - A[i, i]) / (2 * A[i, j])
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta ** 2 + 1))
                if theta == 0.0:
                    t = 1.0
                c = 1 / np.sqrt(t ** 2 + 1)
                s = t * c
                R = np.eye(p)
                R[i, i] = R[j, j] = c
                R[i, j] = s
                R[j, i] = -s
                A = R.T @ A @ R
                V = V @ R
    else:
        logger.debug("Jacobi stopped after %d sweeps", max_sweeps)

    w = np.diag(A).copy()
    order = np.argsort(-w, kind='stable')
    w, V = w[order], V[:, order]
    for k in range(p):
        nz = np.flatnonzero(np.abs(V[:, k]) > 1e-12)
        if nz.size and V[nz[0], k] < 0:
            V[:, k] = -V[:, k]
    return w, V


def normalize_signatures(frame, normalization='zscore'):
    """
    Signature vectors as a matrix, z-scored per coordinate. In 'per_n' mode
    the count coordinates are divided by n first. Zero-variance
    coordinates map to 0.
    """

    if normalization not in NORMALIZATIONS:
        raise ValueError(f"Unknown normalization '{normalization}'")
    X = frame[SIGNATURE_VECTOR].astype(np.float64).to_numpy()
    if normalization == 'per_n':
        for col in COUNT_COLUMNS:
            k = SIGNATURE_VECTOR.index(col)
            X[:, k] = X[:, k] / X[:, 0]
    return StandardScaler().fit_transform(X)


@dataclass
class PcaProjection:
    """
    Attributes
    ----------
    mean: numpy.ndarray
        Mean of the normalized vectors (zero up to rounding)
    eigenvalues: numpy.ndarray
        All eigenvalues of the covariance, descending
    eigenvectors: numpy.ndarray
        Matching unit eigenvectors as columns
    coordinates: numpy.ndarray
        Per-row coordinates on the first two components
    flagged: bool
        Zero-variance dataset, all coordinates 0
    """

    mean: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    coordinates: np.ndarray
    normalized: np.ndarray = field(repr=False)
    covariance: np.ndarray = field(repr=False)
    hashes: list = field(default_factory=list)
    labels: list = field(default_factory=list)
    normalization: str = 'zscore'
    flagged: bool = False

    @property
    def top_eigenvalues(self):
        return self.eigenvalues[:2]

    @property
    def top_eigenvectors(self):
        return self.eigenvectors[:, :2]

    def reconstruct(self):
        """Normalized vectors rebuilt from all components."""
        scores = (self.normalized - self.mean) @ self.eigenvectors
        return scores @ self.eigenvectors.T + self.mean

    def to_frame(self):
        return pd.DataFrame({'canon_hash': self.hashes,
                             'pc1': self.coordinates[:, 0],
                             'pc2': self.coordinates[:, 1],
                             'type_label': self.labels})

    def to_dict(self):
        return {'normalization': self.normalization,
                'eigenvalues': self.eigenvalues.tolist(),
                'top_eigenvectors': self.top_eigenvectors.T.tolist(),
                'flagged': self.flagged}


def pca_projection(ds, normalization='zscore'):
    """
    Projection of the normalized signature vectors onto the first two
    principal components.

    Parameters
    ----------
    ds: SignatureDataset
        Rows without a congruence count are left out
    normalization: str
        'zscore' or 'per_n'. Default='zscore'

    Returns
    -------
    projection: PcaProjection

    Raises
    ------
    ValueError
        With fewer than 2 usable rows
    """

    frame = ds.frame.dropna(subset=['num_congruences'])
    if len(frame) < 2:
        raise ValueError(f"PCA needs at least 2 rows, got {len(frame)}")

    Z = normalize_signatures(frame, normalization)
    mean = Z.mean(axis=0)
    C = np.cov(Z, rowvar=False)
    p = C.shape[0]

    flagged = bool(np.all(np.abs(C) < JACOBI_TOLERANCE))
    if flagged:
        warnings.warn("Zero-variance dataset, PCA coordinates set to 0",
                      RuntimeWarning)
        w, V = np.zeros(p), np.eye(p)
        coords = np.zeros((len(frame), 2))
    else:
        w, V = jacobi_eigh(C)
        coords = (Z - mean) @ V[:, :2]

    return PcaProjection(mean=mean, eigenvalues=w, eigenvectors=V,
                         coordinates=coords, normalized=Z, covariance=C,
                         hashes=frame['canon_hash'].tolist(),
                         labels=frame['type_label'].tolist(),
                         normalization=normalization, flagged=flagged)


def gnuplot_script(csv_name, labels):
    """
    gnuplot script plotting pc1 against pc2 from the CSV, one point set per
    type label.
    """

    lines = ["set datafile separator ','",
             "set key outside",
             "set xlabel 'PC1'",
             "set ylabel 'PC2'"]
    plots = [f"'{csv_name}' using (strcol(4) eq '{lab}' ? $2 : 1/0):3 "
             f"skip 1 title '{lab}' with points"
             for lab in sorted(set(labels))]
    lines.append('plot ' + ', \\\n     '.join(plots))
    return '\n'.join(lines) + '\n'
