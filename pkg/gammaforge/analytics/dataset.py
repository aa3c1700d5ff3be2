# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

# Std imports
import logging
from dataclasses import dataclass, field

# Third pary imports
import pandas as pd

# Local imports
from ..canonical.canonical_form import canonical_form
from ..core.exceptions import DataFormatError
from ..core.structure import AxiomConfig, GammaSemiring
from ..invariants.signature import SignatureBattery
from ..utils.data_operations import (SIGNATURE_COLUMNS, create_output_df,
                                     structured_to_df)

logger = logging.getLogger(__name__)

SIGNATURE_VECTOR = ['n', 'g', 'num_ideals', 'num_congruences', 'aut_order',
                    'entropy_nats']


@dataclass
class SignatureDataset:
    """
    One row per isomorphism class, sorted by canonical hash.

    Attributes
    ----------
    frame: pandas.DataFrame
        Columns canon_hash, n, g, num_ideals, num_congruences, aut_order,
        entropy_nats, type_label, rho, kappa
    provenance: dict
        Search configuration and corpus version; axiom_mode (a dict of
        AxiomConfig) when all classes share one
    structures: dict
        canon_hash -> representative structure, empty when read from CSV
    """

    frame: pd.DataFrame
    provenance: dict = field(default_factory=dict)
    structures: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.frame)

    @property
    def axiom_mode(self):
        """AxiomConfig of the classes, the default one when unrecorded."""
        mode = self.provenance.get('axiom_mode')
        return AxiomConfig.from_dict(mode) if mode else AxiomConfig()

    def attach(self, structures):
        """
        Add representatives for rows of the frame and record their common
        axiom mode.
        """

        wanted = set(self.frame['canon_hash'])
        for s in structures:
            h = canonical_form(s).hash
            if h in wanted:
                self.structures.setdefault(h, s)
        mode = common_mode(self.structures.values())
        if mode is not None:
            self.provenance['axiom_mode'] = mode

    def to_csv(self, path=None):
        """Write the CSV (returns the text when path is None)."""
        return self.frame.to_csv(path, index=False, lineterminator='\n')

    @classmethod
    def from_csv(cls, path, provenance=None):
        """
        Read a signature CSV.

        Raises
        ------
        DataFormatError
            When the columns or the values do not match the format
        """

        try:
            frame = pd.read_csv(path, dtype={'canon_hash': str,
                                             'type_label': str})
        except pd.errors.EmptyDataError:
            frame = create_output_df()
        except (pd.errors.ParserError, UnicodeDecodeError) as exc:
            raise DataFormatError(f"Cannot parse dataset: {exc}")

        if list(frame.columns) != list(SIGNATURE_COLUMNS):
            raise DataFormatError(f"Expected columns "
                                  f"{list(SIGNATURE_COLUMNS)}, got "
                                  f"{list(frame.columns)}")
        try:
            frame = frame.astype(SIGNATURE_COLUMNS)
        except (TypeError, ValueError) as exc:
            raise DataFormatError(f"Bad dataset values: {exc}")

        return cls(frame, provenance or {})


def common_mode(structures):
    """to_dict() of the AxiomConfig shared by all structures, else None."""
    modes = {s.mode for s in structures}
    if len(modes) != 1:
        return None
    return modes.pop().to_dict()


def build_dataset(corpus, entropy_mode='full-aut', n_cores=None,
                  provenance=None):
    """
    Signature dataset of a corpus.

    Parameters
    ----------
    corpus: list
        ClassRecord items of enumerate_classes or plain GammaSemiring
        instances (deduplicated by canonical form)
    entropy_mode: str
        'full-aut' or 'additive-aut'. Default='full-aut'
    n_cores: None | int
        Number of cores to use in multiprocessing. Default=None
    provenance: dict | None
        Stored with the dataset

    Returns
    -------
    ds: SignatureDataset
    """

    provenance = dict(provenance or {})
    provenance['entropy_mode'] = entropy_mode

    structures = {}
    for item in corpus:
        if isinstance(item, GammaSemiring):
            structures.setdefault(canonical_form(item).hash, item)
        else:
            structures.setdefault(item.form.hash, item.representative)

    mode = common_mode(structures.values())
    if mode is not None:
        provenance['axiom_mode'] = mode

    if not structures:
        return SignatureDataset(create_output_df(), provenance)

    hashes = sorted(structures)
    battery = SignatureBattery(entropy_mode=entropy_mode)
    results = battery.run_corpus([structures[h] for h in hashes], n_cores)

    df = structured_to_df(results).drop(columns='item_idx')
    df.insert(0, 'canon_hash', hashes)
    con = df['num_congruences'].astype('Int64')
    df['num_congruences'] = con.mask(con < 0)
    df = df.astype(SIGNATURE_COLUMNS)[list(SIGNATURE_COLUMNS)]
    logger.info("Signature dataset of %d classes", len(df))

    return SignatureDataset(df.reset_index(drop=True), provenance,
                            structures)


def equivalence_report(ds):
    """
    Classes that share a signature although not isomorphic.

    Returns
    -------
    report: dict
        classes, signature_classes, coarsening (difference of the two) and
        collisions (sorted hash groups with more than one member)
    """

    frame = ds.frame.copy()
    frame['entropy_nats'] = frame['entropy_nats'].round(12)
    groups = frame.groupby(SIGNATURE_VECTOR, dropna=False, sort=True)
    collisions = sorted(sorted(g['canon_hash']) for _, g in groups
                        if len(g) > 1)

    return {'classes': len(frame),
            'signature_classes': groups.ngroups,
            'coarsening': len(frame) - groups.ngroups,
            'collisions': collisions}

