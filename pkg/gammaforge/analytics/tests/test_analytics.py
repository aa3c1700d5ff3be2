# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.


# Std imports
from math import isclose, log

# Third pary imports
import numpy as np
import pandas as pd
import pytest

# Local imports
from gammaforge.analytics import (SignatureDataset, build_dataset,
                                  common_mode,
                                  equivalence_report, correlation_report,
                                  entropy_simplicity_table, regression_fit,
                                  solve_normal_equations, design_matrix,
                                  pca_projection, jacobi_eigh,
                                  normalize_signatures, gnuplot_script,
                                  stability_check, growth_table,
                                  storage_cost, subvariety_tally)
from gammaforge.canonical import canonical_form
from gammaforge.core import (AxiomConfig, DataFormatError,
                             EmptyDatasetError, boolean_structure,
                             trivial_structure)
from gammaforge.utils.data_operations import SIGNATURE_COLUMNS


# ----- Dataset -----
def test_build_dataset(create_small_dataset):
    ds = create_small_dataset
    assert len(ds) == 5
    assert list(ds.frame.columns) == list(SIGNATURE_COLUMNS)
    assert ds.frame['canon_hash'].tolist() == \
        sorted(ds.frame['canon_hash'])
    assert ds.provenance == {'max_n': 2, 'entropy_mode': 'full-aut',
                             'axiom_mode': {'symmetric': True,
                                            'associative': False}}
    assert set(ds.structures) == set(ds.frame['canon_hash'])

    order2 = ds.frame[ds.frame['n'] == 2]
    assert (order2['num_ideals'] == 2).all()
    assert (order2['num_congruences'] == 2).all()
    assert np.allclose(order2['entropy_nats'], log(2))


def test_build_dataset_from_structures(create_small_dataset):
    boolean = boolean_structure()
    ds = build_dataset([boolean, boolean.relabel([0, 1])])
    assert len(ds) == 1
    assert ds.frame['canon_hash'][0] == canonical_form(boolean).hash
    assert len(build_dataset([])) == 0


def test_dataset_axiom_mode(create_small_dataset, tmp_path):
    associative = AxiomConfig(associative=True)
    boolean = boolean_structure(mode=associative)
    ds = build_dataset([boolean])
    assert ds.provenance['axiom_mode'] == associative.to_dict()
    assert ds.axiom_mode == associative
    assert common_mode([boolean, boolean_structure()]) is None
    assert build_dataset([boolean, boolean_structure()]).axiom_mode == \
        AxiomConfig()

    path = tmp_path / 'signatures.csv'
    ds.to_csv(path)
    loaded = SignatureDataset.from_csv(path)
    assert loaded.axiom_mode == AxiomConfig()
    loaded.attach([trivial_structure(), boolean])
    assert list(loaded.structures.values()) == [boolean]
    assert loaded.axiom_mode == associative


def test_dataset_csv(create_small_dataset, tmp_path):
    path = tmp_path / 'signatures.csv'
    create_small_dataset.to_csv(path)
    loaded = SignatureDataset.from_csv(path)
    pd.testing.assert_frame_equal(loaded.frame, create_small_dataset.frame)
    assert loaded.structures == {}


def test_dataset_csv_errors(tmp_path):
    path = tmp_path / 'bad_columns.csv'
    path.write_text("canon_hash,n\nabc,2\n")
    with pytest.raises(DataFormatError):
        SignatureDataset.from_csv(path)

    path = tmp_path / 'bad_values.csv'
    path.write_text(','.join(SIGNATURE_COLUMNS) + '\n'
                    + 'abc,two,1,1,1,1,0.0,BOOLEAN,1.0,1.0\n')
    with pytest.raises(DataFormatError):
        SignatureDataset.from_csv(path)

    path = tmp_path / 'empty.csv'
    path.write_text('')
    assert len(SignatureDataset.from_csv(path)) == 0


def test_equivalence_report(create_small_dataset):
    report = equivalence_report(create_small_dataset)
    assert report['classes'] == 5
    assert report['signature_classes'] == 2
    assert report['coarsening'] == 3
    assert len(report['collisions']) == 1
    assert len(report['collisions'][0]) == 4


# ----- Correlation -----
def test_correlation_report(create_small_dataset):
    report = correlation_report(create_small_dataset)
    rows = {r['canon_hash']: r for r in report['rows']}
    boolean = rows[canonical_form(boolean_structure()).hash]
    assert boolean['rho'] == 0.5
    assert boolean['kappa'] == 1.0
    assert boolean['residual'] == -0.5
    assert not boolean['nontrivial_radical']

    assert report['pearson_rho_kappa'] is None
    assert report['decomposition_tally'] == {'holds': 0, 'fails': 0,
                                             'radical-trivial': 5}
    assert report['entropy_simplicity'] == {'agree': 1, 'disagree': 4,
                                            'unknown': 0}
    assert report['claimed'] == 'kappa ~ 1 + rho'


def test_entropy_simplicity_table(create_small_dataset):
    table = entropy_simplicity_table(create_small_dataset)
    assert table['simple'].tolist() == [True] * 5
    assert table['zero_entropy'].sum() == 1


def test_correlation_report_empty():
    with pytest.raises(EmptyDatasetError):
        correlation_report(build_dataset([]))


# ----- Regression -----
def test_regression_fit(create_plane_dataset):
    result = regression_fit(create_plane_dataset)
    assert isclose(result.r_squared, 1.0)
    assert np.allclose(result.coefficients, (2.0, 3.0, 0.5))
    assert isclose(result.intercept, 1.0)
    assert not result.singular
    assert result.n_rows == 12

    X = design_matrix(create_plane_dataset.frame)
    assert np.allclose(X.T @ result.residuals, 0.0, atol=1e-8)

    no_intercept = regression_fit(create_plane_dataset, intercept=False)
    assert no_intercept.intercept is None
    assert no_intercept.to_dict()['coefficients'].keys() == \
        {'alpha', 'beta', 'gamma'}


def test_regression_errors(create_plane_dataset, create_small_dataset):
    with pytest.raises(EmptyDatasetError):
        regression_fit(create_plane_dataset, target='num_congruences')

    # g is constant, so the intercept column duplicates it
    with pytest.warns(RuntimeWarning):
        result = regression_fit(create_small_dataset)
    assert result.singular
    assert 0.0 <= result.r_squared <= 1.0


def test_solve_normal_equations():
    X = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    y = np.array([1.0, 2.0, 3.0])
    assert np.allclose(solve_normal_equations(X, y), [1.0, 2.0])
    assert solve_normal_equations(np.ones((3, 2)), y) is None


# ----- PCA -----
def test_jacobi_eigh():
    rng = np.random.default_rng(0)
    A = rng.normal(size=(6, 6))
    C = A + A.T
    w, V = jacobi_eigh(C)
    assert np.allclose(np.sort(w), np.linalg.eigvalsh(C), atol=1e-8)
    assert np.all(np.diff(w) <= 0)
    assert np.allclose(V.T @ V, np.eye(6), atol=1e-8)


def test_pca_projection(create_order3_dataset, benchmark):
    proj = benchmark(pca_projection, create_order3_dataset)
    assert not proj.flagged
    C = proj.covariance
    for k in range(len(proj.eigenvalues)):
        v = proj.eigenvectors[:, k]
        assert np.linalg.norm(C @ v - proj.eigenvalues[k] * v) < 1e-8
    assert np.abs(proj.reconstruct() - proj.normalized).max() < 1e-8
    assert proj.coordinates.shape == (len(create_order3_dataset), 2)

    frame = proj.to_frame()
    assert list(frame.columns) == ['canon_hash', 'pc1', 'pc2', 'type_label']
    assert len(proj.to_dict()['top_eigenvectors']) == 2

    per_n = pca_projection(create_order3_dataset, normalization='per_n')
    assert per_n.normalization == 'per_n'


def test_pca_errors(create_small_dataset):
    with pytest.raises(ValueError):
        pca_projection(build_dataset([boolean_structure()]))
    with pytest.raises(ValueError):
        normalize_signatures(create_small_dataset.frame, 'bogus')

    # Every order 2 class has the same signature
    ds = SignatureDataset(create_small_dataset.frame[
        create_small_dataset.frame['n'] == 2])
    with pytest.warns(RuntimeWarning):
        proj = pca_projection(ds)
    assert proj.flagged
    assert np.all(proj.coordinates == 0)


def test_gnuplot_script():
    script = gnuplot_script('pca.csv', ['MODULAR', 'BOOLEAN', 'MODULAR'])
    assert script.count("title '") == 2
    assert "'pca.csv'" in script
    assert script.index('BOOLEAN') < script.index('MODULAR')


# ----- Stability -----
def test_stability_check(create_small_corpus):
    report = stability_check(create_small_corpus)
    assert report['classes'] == 5
    assert report['label_stability'] == 1.0
    for row in report['rows']:
        assert row['delta'] == [0, 1, 0, 0, 0, 0.0]
        assert row['aut_order_duplicated'] == row['aut_order']
    assert report['aut_doubled'] == 0


# ----- Growth -----
def test_growth_table(benchmark):
    table = benchmark(growth_table, 2, 2)
    assert table['classes'].tolist() == [1, 1, 4, 8]
    assert table['classes_permute_gamma'].tolist() == [1, 1, 4, 6]
    assert table['ratio'].tolist()[0] == 1.0
    assert table['ratio'].tolist()[2] == 2.0
    assert table['ratio'].isna().tolist() == [False, True, False, True]
    assert not table['flagged'].any()


def test_growth_table_flagged():
    table = growth_table(3, 1, step_budget=1, permute_gamma_column=False)
    assert table['flagged'].tolist() == [False, False, True]
    assert pd.isna(table['classes'][2])
    assert table['classes_permute_gamma'].isna().all()


def test_storage_cost():
    assert storage_cost(2, 1) == 8.0
    assert storage_cost(1, 3) == 0.0
    assert isclose(storage_cost(3, 2), 54 * np.log2(3))
    with pytest.raises(ValueError):
        storage_cost(0, 1)


# ----- Subvarieties -----
def test_subvariety_tally(create_small_dataset):
    tally = subvariety_tally(create_small_dataset.structures)
    assert tally['subvariety'].tolist() == ['additively_idempotent',
                                            'additive_group',
                                            'ternary_identity',
                                            'zero_multiplication']
    assert tally['classes'].tolist() == [3, 3, 3, 3]
    assert np.allclose(tally['share'], 0.6)
    assert subvariety_tally({})['share'].isna().all()
