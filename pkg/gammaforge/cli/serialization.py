# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
JSON-lines structure files, one structure per line:

    {"n":2,"g":1,"mode":{"symmetric":true,"associative":false},
     "add":[[0,1],[1,1]],"tensors":[[[[0,0],[0,0]],[[0,0],[0,1]]]]}

(on one line). Field order is fixed and separators are compact, so equal
structures always serialize to equal bytes.
"""

# Std imports
import json
from pathlib import Path

# Third pary imports
import numpy as np

# Local imports
from ..core.exceptions import DataFormatError, StructureError
from ..core.structure import AxiomConfig, GammaSemiring

FIELDS = ('n', 'g', 'mode', 'add', 'tensors')


def structure_to_dict(s):
    return {'n': s.n,
            'g': s.g,
            'mode': s.mode.to_dict(),
            'add': s.sum_table.tolist(),
            'tensors': s.ops.tolist()}


def dumps(s):
    """One-line JSON text of a structure (no trailing newline)."""
    return json.dumps(structure_to_dict(s), separators=(',', ':'))


def _int_array(value, ndim, name, line):
    try:
        arr = np.array(value)
    except ValueError as exc:
        raise DataFormatError(f"'{name}' is ragged: {exc}", line=line)
    if arr.ndim != ndim or (arr.size and arr.dtype.kind not in 'iu'):
        raise DataFormatError(f"'{name}' must be a {ndim}-dimensional array "
                              f"of integers", line=line)
    return arr.astype(np.int64)


def loads(text, line=None):
    """
    Structure from one line of JSON.

    Parameters
    ----------
    text: str
    line: int | None
        Line number reported in errors

    Returns
    -------
    structure: GammaSemiring

    Raises
    ------
    DataFormatError
        On invalid JSON (with line and column), missing or extra fields,
        non-integer entries and shapes that disagree with n and g
    """

    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataFormatError(exc.msg, line=line, column=exc.colno)

    if not isinstance(obj, dict) or tuple(obj) != FIELDS:
        keys = list(obj) if isinstance(obj, dict) else type(obj).__name__
        raise DataFormatError(f"Expected fields {list(FIELDS)}, got {keys}",
                              line=line)

    n, g, mode = obj['n'], obj['g'], obj['mode']
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (n, g)):
        raise DataFormatError("'n' and 'g' must be integers", line=line)
    if (not isinstance(mode, dict)
            or sorted(mode) != ['associative', 'symmetric']
            or not all(isinstance(v, bool) for v in mode.values())):
        raise DataFormatError("'mode' must hold the booleans 'symmetric' "
                              "and 'associative'", line=line)

    add = _int_array(obj['add'], 2, 'add', line)
    ops = _int_array(obj['tensors'], 4, 'tensors', line)
    if add.shape != (n, n) or ops.shape != (g, n, n, n):
        raise DataFormatError(f"Shapes {add.shape} and {ops.shape} do not "
                              f"match n={n}, g={g}", line=line)

    try:
        return GammaSemiring(add, ops, AxiomConfig.from_dict(mode))
    except StructureError as exc:
        raise DataFormatError(str(exc), line=line)


def read_structures(path):
    """
    All structures of a JSON-lines file. Blank lines are skipped.

    Raises
    ------
    DataFormatError
        On the first malformed line
    """

    text = Path(path).read_text(encoding='utf-8')
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            out.append(loads(raw, line=lineno))
    return out


def write_structures(path, structures):
    """Write structures as JSON lines, newline-terminated."""
    text = ''.join(dumps(s) + '\n' for s in structures)
    Path(path).write_text(text, encoding='utf-8')
    return text
