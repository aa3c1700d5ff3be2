# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import functools
import inspect
import warnings

# Third pary imports
import numpy as np

# Local imports
from .tools import parallel_map

"""
Basic template for method classes
"""


class Method:
    """
    Class for computations using underlying compute function

    Attributes
    ----------
    algorithm: str
        Algorithm name
    version: str
        Current version of the algorithm
    dtype: list
        Numpy data type of the results returned by run_corpus method

    Methods
    -------
    compute(structure)

    run_corpus(structures, n_cores=None)
    """

    algorithm = None
    version = None
    dtype = None

    def __init__(self, compute_function, **kwargs):

        self._params = kwargs
        self._compute_function = compute_function
        self._check_params()

        return

    @property
    def params(self):
        return self._params

    @params.setter
    def params(self, params):
        self._params = params
        self._check_params()

    def compute(self, structure):
        """
        Function to run underlying compute function.

        Parameters
        ----------
        structure: gammaforge.core.GammaSemiring
            Structure to analyze

        Returns
        -------
        result: float | int | tuple
            Result of the compute function
        """

        if not hasattr(structure, 'ops'):
            raise TypeError(f"Expected a GammaSemiring, got "
                            f"{type(structure).__name__}")

        return self._compute_function(structure, **self._params)

    def _check_params(self):
        func_sig = inspect.signature(self._compute_function)
        keys_to_pop = []
        if self._compute_function is not None:
            for key in self._params.keys():
                if key not in func_sig.parameters.keys():
                    warnings.warn(f"Unrecognized keyword argument {key}.\
                                    It will be ignored",
                                  RuntimeWarning)
                    keys_to_pop.append(key)
        for key in keys_to_pop:
            self._params.pop(key)

    def run_corpus(self, structures, n_cores=None):
        """
        Function computing the method for every structure of a corpus.

        Parameters
        ----------
        structures: list
            List of GammaSemiring instances
        n_cores: None | int
            Number of cores to use in multiprocessing. When None,
            multiprocessing is not used. Default=None

        Returns
        -------
        results array: numpy.ndarray
            Array with the results of processing with dtype = self.dtype
            plus an 'item_idx' field pointing back into structures
        """

        structures = list(structures)
        compute = functools.partial(_compute_with, self._compute_function,
                                    self._params)
        results = parallel_map(compute, structures, n_cores)

        rows = []
        for i, res in enumerate(results):
            if not isinstance(res, tuple):
                res = (res,)
            rows.append(res + (i,))

        return np.array(rows, self.dtype + [('item_idx', 'int32')])


def _compute_with(compute_function, params, structure):
    return compute_function(structure, **params)
