# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
Exceptions shared by all sub-packages.

Axiom violations are not exceptions, they are returned in a ValidityReport.
"""


class StructureError(ValueError):
    """Malformed tables, mismatched orders, parameter counts or modes."""


class ContractViolation(RuntimeError):
    """A precondition on algebraic validity does not hold."""


class InvariantViolation(RuntimeError):
    """A property that must hold by theorem failed."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceeded(RuntimeError):
    """A size cap refuses the request."""


class StepBudgetExhausted(RuntimeError):
    """The search ran out of extension steps."""

    def __init__(self, message, stats=None, partial=None):
        super().__init__(message)
        self.stats = stats
        self.partial = partial if partial is not None else []


class EmptyDatasetError(ValueError):
    """Analytics asked to work on an empty dataset."""


class DataFormatError(ValueError):
    """Malformed structure file or dataset CSV."""

    def __init__(self, message, line=None, column=None):
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column
