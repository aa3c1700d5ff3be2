# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.


# Std imports
import sys

# Third pary imports
import numpy as np
import pytest

# Local imports
from gammaforge.canonical import (CanonicalForm, canonical_form, serialize,
                                  decode, element_invariants,
                                  HEADER, PermGroup,
                                  is_isomorphism, isomorphism_witness,
                                  automorphism_group, additive_automorphisms,
                                  orbits_of, orbit_partition)
from gammaforge.core import (GammaSemiring, StructureError,
                             ContractViolation, boolean_structure,
                             chain_semilattice_table, cyclic_group_table,
                             direct_product,
                             trivial_structure, zero_multiplication)


# ----- Canonical form -----
def test_canonical_form_layout(create_z3_family):
    form = canonical_form(create_z3_family[1])
    assert form.bytes[:4] == HEADER
    assert (form.n, form.g) == (3, 1)
    assert form.bytes[6] == 1
    assert len(form.bytes) == 7 + 9 + 27
    assert len(form.hash) == 16


def test_canonical_form_relabeling(create_z3_family, create_klein,
                                   benchmark):
    s = create_klein
    form = benchmark(canonical_form, s)
    for perm in [(0, 2, 1, 3), (0, 3, 1, 2), (0, 2, 3, 1)]:
        assert canonical_form(s.relabel(perm)) == form
        assert canonical_form(s.relabel(perm), exhaustive=True) == \
            canonical_form(s, exhaustive=True)

    s = create_z3_family[2]
    form = canonical_form(s)
    assert serialize(s.relabel(form.labeling)) == form.bytes
    assert form.to_structure() == s.relabel(form.labeling)


def test_canonical_form_is_global_minimum(create_order3_classes,
                                          create_z3_pair, benchmark):
    structures = create_order3_classes
    assert len(structures) == 31
    forms = benchmark(lambda: [canonical_form(s) for s in structures])
    for s, form in zip(structures, forms):
        reference = canonical_form(s, exhaustive=True)
        assert form.bytes == reference.bytes
        assert form.labeling == reference.labeling
        assert serialize(s.relabel(form.labeling)) == form.bytes

    b = boolean_structure()
    bb = direct_product(b, b)
    assert canonical_form(bb).bytes == \
        canonical_form(bb, exhaustive=True).bytes

    for s in create_z3_pair:
        fast = canonical_form(s, permute_gamma=True)
        reference = canonical_form(s, exhaustive=True, permute_gamma=True)
        assert fast.bytes == reference.bytes
        assert fast.gamma_order == reference.gamma_order


def test_canonical_form_batches(create_klein, monkeypatch):
    expected = canonical_form(create_klein)
    module = sys.modules[canonical_form.__module__]
    monkeypatch.setattr(module, 'BATCH_SIZE', 4)
    assert canonical_form(create_klein) == expected
    assert canonical_form(create_klein).labeling == expected.labeling


def test_canonical_form_separates(create_z3_family):
    forms = [canonical_form(s) for s in create_z3_family]
    assert len(set(forms)) == 3
    assert sorted(forms) == sorted(forms, key=lambda f: f.bytes)


def test_canonical_form_invalid():
    cube = np.zeros((2, 2, 2), dtype=np.int64)
    cube[0, 1, 1] = 1
    s = GammaSemiring(chain_semilattice_table(2), [cube])
    with pytest.raises(ContractViolation):
        canonical_form(s)


def test_permute_gamma(create_z3_pair):
    s1, s2 = create_z3_pair
    assert canonical_form(s1) != canonical_form(s2)
    f1 = canonical_form(s1, permute_gamma=True)
    f2 = canonical_form(s2, permute_gamma=True)
    assert f1 == f2
    assert f1.bytes[6] == 1 | 4
    assert sorted(f1.gamma_order) == [0, 1]


def test_decode():
    s = boolean_structure(g=2)
    data = serialize(s)
    assert decode(data) == s
    assert CanonicalForm(data).to_structure() == s
    with pytest.raises(StructureError):
        decode(b'XXXX' + data[4:])
    with pytest.raises(StructureError):
        decode(data[:-1])


def test_element_invariants(create_z3_family):
    invs = element_invariants(create_z3_family[0])
    assert invs[0][0] == 0
    assert all(inv[0] == 1 for inv in invs[1:])
    assert invs[1] == invs[2]

    chain = zero_multiplication(chain_semilattice_table(3))
    assert len(set(element_invariants(chain))) == 3


# ----- Automorphisms and isomorphisms -----
def test_automorphism_group(create_z3_family, create_klein):
    group = automorphism_group(create_z3_family[1])
    assert group.order == 2
    assert group.elements == ((0, 1, 2), (0, 2, 1))
    assert group.generators == ((0, 2, 1),)

    assert automorphism_group(boolean_structure()).order == 1
    assert automorphism_group(trivial_structure()).order == 1
    chain = zero_multiplication(chain_semilattice_table(3))
    assert automorphism_group(chain).order == 1
    assert automorphism_group(create_klein).order == 6
    assert automorphism_group(
        zero_multiplication(cyclic_group_table(4))).order == 2


def test_automorphism_methods_agree(create_klein, create_z3_pair, benchmark):
    search = benchmark(automorphism_group, create_klein, 'search')
    assert search == automorphism_group(create_klein, 'filtration')
    s1, _ = create_z3_pair
    assert (automorphism_group(s1, 'search').order
            == automorphism_group(s1, 'filtration').order)
    with pytest.raises(ValueError):
        automorphism_group(create_klein, 'bogus')


def test_additive_automorphisms(create_klein):
    assert additive_automorphisms(create_klein.add).order == 6
    assert additive_automorphisms(chain_semilattice_table(3)).order == 1


def test_orbits(create_z3_family):
    assert orbit_partition(create_z3_family[1]) == [(0,), (1, 2)]
    chain = zero_multiplication(chain_semilattice_table(3))
    assert orbit_partition(chain) == [(0,), (1,), (2,)]
    assert orbit_partition(chain, 'additive') == [(0,), (1,), (2,)]
    with pytest.raises(ValueError):
        orbit_partition(chain, 'bogus')

    group = PermGroup.from_elements(4, [(0, 2, 1, 3), (0, 1, 2, 3)])
    assert group.order == 2
    assert orbits_of(group) == [(0,), (1, 2), (3,)]


def test_isomorphism_witness(create_z3_family):
    s = create_z3_family[1]
    t = s.relabel([0, 2, 1])
    witness = isomorphism_witness(s, t)
    assert witness is not None
    assert is_isomorphism(s, t, witness)
    assert not is_isomorphism(s, t, (1, 0, 2))

    assert isomorphism_witness(create_z3_family[1],
                               create_z3_family[2]) is None
    with pytest.raises(StructureError):
        isomorphism_witness(s, boolean_structure())
