# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import logging
from dataclasses import dataclass

# Third pary imports
import numpy as np

# Local imports
from ..core.exceptions import InvariantViolation, StructureError
from ..core.structure import AdditiveTable
from ..utils.tools import zero_fixing_permutations
from .canonical_form import canonical_form, element_invariants

logger = logging.getLogger(__name__)

MAX_LISTED_ELEMENTS = 10 ** 4
ACTIONS = ('full', 'additive')


@dataclass(frozen=True)
class PermGroup:
    """
    Group of 0-fixing permutations of [0, n).

    Attributes
    ----------
    n: int
        Degree
    generators: tuple of tuple
        Generating permutations (image tuples)
    order: int
        Group order
    elements: tuple | None
        All elements, sorted, when the order is at most 10**4
    """

    n: int
    generators: tuple
    order: int
    elements: tuple = None

    @classmethod
    def from_elements(cls, n, elements):
        elements = tuple(sorted(tuple(int(x) for x in p) for p in elements))
        identity = tuple(range(n))
        generators = tuple(p for p in elements if p != identity)
        listed = elements if len(elements) <= MAX_LISTED_ELEMENTS else None
        return cls(n, generators, len(elements), listed)


def is_isomorphism(s1, s2, perm):
    """
    Direct check that perm (image tuple) is an isomorphism s1 -> s2.
    """

    phi = np.asarray(perm, dtype=np.int64)
    if phi[0] != 0 or len(set(phi.tolist())) != s1.n:
        return False
    if not np.array_equal(phi[s1.sum_table], s2.sum_table[np.ix_(phi, phi)]):
        return False
    for op1, op2 in zip(s1.ops, s2.ops):
        if not np.array_equal(phi[op1], op2[np.ix_(phi, phi, phi)]):
            return False
    return True


def isomorphism_witness(s1, s2):
    """
    Find a 0-fixing isomorphism between two structures.

    Parameters
    ----------
    s1, s2: GammaSemiring
        Valid structures with the same n, g and axiom mode

    Returns
    -------
    witness: tuple | None
        Image tuple of an isomorphism s1 -> s2, None when they are not
        isomorphic

    Raises
    ------
    StructureError
        When n, g or the mode differ
    """

    if s1.n != s2.n or s1.g != s2.g:
        raise StructureError(f"Cannot compare structures of size "
                             f"({s1.n}, {s1.g}) and ({s2.n}, {s2.g})")
    if s1.mode != s2.mode:
        raise StructureError("Cannot compare structures of different axiom "
                             "modes")

    f1 = canonical_form(s1)
    f2 = canonical_form(s2)
    if f1 != f2:
        return None

    inv2 = np.argsort(f2.labeling)
    witness = tuple(int(x) for x in inv2[np.array(f1.labeling)])
    if not is_isomorphism(s1, s2, witness):
        raise InvariantViolation("Equal canonical forms without a valid "
                                 "isomorphism", witness=witness)
    return witness


def _filtration(s):
    return [p for p in zero_fixing_permutations(s.n)
            if is_isomorphism(s, s, p)]


def _partial_ok(s, phi, assigned):
    a = np.array(assigned)
    img = phi[a]
    images = phi[s.sum_table[np.ix_(a, a)]]
    expected = s.sum_table[np.ix_(img, img)]
    known = images >= 0
    if not np.array_equal(images[known], expected[known]):
        return False
    for op in s.ops:
        images = phi[op[np.ix_(a, a, a)]]
        expected = op[np.ix_(img, img, img)]
        known = images >= 0
        if not np.array_equal(images[known], expected[known]):
            return False
    return True


def _refined_search(s):
    # Backtracking over partial images, candidates restricted to elements
    # with equal invariant tuples
    invs = element_invariants(s)
    candidates = [[y for y in range(s.n) if invs[y] == invs[x]]
                  for x in range(s.n)]
    phi = np.full(s.n, -1, dtype=np.int64)
    phi[0] = 0
    used = {0}
    found = []

    def extend(x):
        if x == s.n:
            found.append(tuple(int(v) for v in phi))
            return
        for y in candidates[x]:
            if y in used:
                continue
            phi[x] = y
            used.add(y)
            if _partial_ok(s, phi, range(x + 1)):
                extend(x + 1)
            used.discard(y)
            phi[x] = -1

    extend(1)
    return found


def automorphism_group(s, method='auto'):
    """
    Group of 0-fixing automorphisms preserving + and every ternary product.

    Parameters
    ----------
    s: GammaSemiring
        Valid structure
    method: str
        'filtration' checks every 0-fixing permutation, 'search' backtracks
        over partial images refined by element invariants, 'auto' uses
        filtration for n <= 5. Default='auto'

    Returns
    -------
    group: PermGroup
        Generators are all nontrivial elements
    """

    if method == 'auto':
        method = 'filtration' if s.n <= 5 else 'search'
    if method == 'filtration':
        elements = _filtration(s)
    elif method == 'search':
        elements = _refined_search(s)
    else:
        raise ValueError(f"Unknown method '{method}'")

    return PermGroup.from_elements(s.n, elements)


def additive_automorphisms(add):
    """
    Automorphism group of the additive monoid (T, +) alone.

    Parameters
    ----------
    add: AdditiveTable | array-like

    Returns
    -------
    group: PermGroup
    """

    table = AdditiveTable(add).table
    n = table.shape[0]
    elements = []
    for p in zero_fixing_permutations(n):
        phi = np.array(p)
        if np.array_equal(phi[table], table[np.ix_(phi, phi)]):
            elements.append(p)
    return PermGroup.from_elements(n, elements)


def orbits_of(group):
    """
    Orbits of a permutation group by closure of the generator action.

    Returns
    -------
    orbits: list of tuple
        Sorted orbits, ordered by smallest element
    """

    parent = list(range(group.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in group.generators:
        for x, y in enumerate(gen):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

    orbits = {}
    for x in range(group.n):
        orbits.setdefault(find(x), []).append(x)
    return sorted(tuple(o) for o in orbits.values())


def orbit_partition(s, action='full'):
    """
    Orbit partition of the elements under a symmetry group.

    Parameters
    ----------
    s: GammaSemiring
    action: str
        'full' for Aut_Gamma(T), 'additive' for Aut(T, +). Default='full'

    Returns
    -------
    orbits: list of tuple
    """

    if action == 'full':
        group = automorphism_group(s)
    elif action == 'additive':
        group = additive_automorphisms(s.add)
    else:
        raise ValueError(f"Unknown action '{action}', expected one of "
                         f"{ACTIONS}")

    return orbits_of(group)
