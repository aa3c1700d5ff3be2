# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import logging
from itertools import combinations_with_replacement, product

# Third pary imports
import pandas as pd

# Local imports
from ..canonical.automorphisms import automorphism_group
from ..canonical.canonical_form import canonical_form
from ..core.exceptions import InvariantViolation
from ..core.homomorphism import image_and_first_iso
from ..enumeration.classes import enumerate_classes
from ..enumeration.monoids import enumerate_additive_monoids
from ..enumeration.naive import naive_enumerate
from ..enumeration.search import SearchConfig, generate_ternary_tables
from .brute_force import (all_homomorphisms, brute_automorphism_count,
                          brute_isomorphism, naive_monoid_count)

logger = logging.getLogger(__name__)


def _corpus_items(corpus):
    if isinstance(corpus, dict):
        return sorted(corpus.items())
    return [(rec.form.hash, rec.representative) for rec in corpus]


def _form_set(structures):
    return {canonical_form(s, check=False).bytes for s in structures}


def oracle_equivalence(n, g, axiom_mode=None):
    """
    Compare the pruned search with the naive scan on every additive monoid
    class of order n.

    Parameters
    ----------
    n, g: int
    axiom_mode: AxiomConfig | None
        Default=AxiomConfig()

    Returns
    -------
    tally: pandas.DataFrame
        One row per monoid: monoid, search_valid, naive_valid,
        search_classes, naive_classes, equal (sets of canonical forms agree)
    """

    cfg = (SearchConfig(n, g) if axiom_mode is None
           else SearchConfig(n, g, axiom_mode))
    rows = []
    for mi, add in enumerate(enumerate_additive_monoids(n)):
        found, _ = generate_ternary_tables(add, cfg)
        naive = naive_enumerate(add, cfg)
        search_forms, naive_forms = _form_set(found), _form_set(naive)
        rows.append({'monoid': mi,
                     'search_valid': len(found),
                     'naive_valid': len(naive),
                     'search_classes': len(search_forms),
                     'naive_classes': len(naive_forms),
                     'equal': search_forms == naive_forms})
        if search_forms != naive_forms:
            logger.warning("Search and naive scan disagree on monoid %d "
                           "(n=%d, g=%d)", mi, n, g)
    return pd.DataFrame(rows)


def canonical_soundness(corpus, exhaustive_check=True):
    """
    For every pair of structures (including each one with itself) compare
    canonical-form equality with the brute-force isomorphism scan.

    Parameters
    ----------
    corpus: list of ClassRecord | dict
    exhaustive_check: bool
        Also compare forms built over all 0-fixing relabelings.
        Default=True

    Returns
    -------
    tally: pandas.DataFrame
        One row per pair: hash_a, hash_b, forms_equal, exhaustive_equal
        (None when not checked), brute_isomorphic, agree
    """

    items = _corpus_items(corpus)
    forms = {h: canonical_form(s) for h, s in items}
    exhaustive = ({h: canonical_form(s, exhaustive=True) for h, s in items}
                  if exhaustive_check else {})

    rows = []
    for (ha, sa), (hb, sb) in combinations_with_replacement(items, 2):
        forms_equal = forms[ha] == forms[hb]
        exh_equal = (exhaustive[ha] == exhaustive[hb] if exhaustive_check
                     else None)
        iso = brute_isomorphism(sa, sb) is not None
        agree = forms_equal == iso and exh_equal in (None, iso)
        rows.append({'hash_a': ha, 'hash_b': hb, 'forms_equal': forms_equal,
                     'exhaustive_equal': exh_equal, 'brute_isomorphic': iso,
                     'agree': agree})
    return pd.DataFrame(rows, columns=['hash_a', 'hash_b', 'forms_equal',
                                       'exhaustive_equal', 'brute_isomorphic',
                                       'agree'])


def automorphism_check(corpus):
    """
    |Aut| from automorphism_group (both code paths) against the exhaustive
    0-fixing permutation count.

    Returns
    -------
    tally: pandas.DataFrame
        canon_hash, filtration, search, brute, agree
    """

    rows = []
    for h, s in _corpus_items(corpus):
        filtration = automorphism_group(s, method='filtration').order
        search = automorphism_group(s, method='search').order
        brute = brute_automorphism_count(s)
        rows.append({'canon_hash': h, 'filtration': filtration,
                     'search': search, 'brute': brute,
                     'agree': filtration == search == brute})
    return pd.DataFrame(rows, columns=['canon_hash', 'filtration', 'search',
                                       'brute', 'agree'])


def first_isomorphism_sweep(corpus):
    """
    Every surjective homomorphism between classes of the corpus (same g and
    mode), checked against the first isomorphism theorem: the image and the
    quotient by the kernel congruence have the same canonical form.

    Returns
    -------
    tally: pandas.DataFrame
        source, target, mapping, holds, bourne_consistent
    """

    items = _corpus_items(corpus)
    rows = []
    for (hs, src), (ht, tgt) in product(items, items):
        if src.g != tgt.g or src.mode != tgt.mode or tgt.n > src.n:
            continue
        for hom in all_homomorphisms(src, tgt):
            if not hom.is_surjective():
                continue
            try:
                result = image_and_first_iso(hom)
            except InvariantViolation as exc:
                logger.warning("First isomorphism failed for %s: %s",
                               hom, exc)
                holds, bourne = False, False
            else:
                holds = (canonical_form(result.image).bytes
                         == canonical_form(result.quotient).bytes)
                bourne = result.bourne_consistent
            rows.append({'source': hs, 'target': ht,
                         'mapping': tuple(hom.map.tolist()),
                         'holds': holds, 'bourne_consistent': bourne})
    return pd.DataFrame(rows, columns=['source', 'target', 'mapping', 'holds',
                                       'bourne_consistent'])


def monoid_count_check(max_n=4):
    """
    Monoid class counts from enumerate_additive_monoids against the naive
    scan for 1 <= n <= max_n.

    Returns
    -------
    tally: pandas.DataFrame
        n, enumerated, naive, agree
    """

    rows = []
    for n in range(1, max_n + 1):
        enumerated = len(enumerate_additive_monoids(n))
        naive = naive_monoid_count(n)
        rows.append({'n': n, 'enumerated': enumerated, 'naive': naive,
                     'agree': enumerated == naive})
    return pd.DataFrame(rows)


def class_count_check(n, g, axiom_mode=None):
    """
    Class count of enumerate_classes against deduplicating the naive scan
    with brute_isomorphism alone.

    Returns
    -------
    tally: dict
        n, g, classes, brute_classes, agree
    """

    cfg = (SearchConfig(n, g) if axiom_mode is None
           else SearchConfig(n, g, axiom_mode))
    classes = len(enumerate_classes(cfg))
    representatives = []
    for add in enumerate_additive_monoids(n):
        for s in naive_enumerate(add, cfg):
            if all(brute_isomorphism(s, r) is None for r in representatives):
                representatives.append(s)
    return {'n': n, 'g': g, 'classes': classes,
            'brute_classes': len(representatives),
            'agree': classes == len(representatives)}
