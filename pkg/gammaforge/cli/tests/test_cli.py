# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.


# Std imports
import json

# Third pary imports
import pandas as pd
import pytest

# Local imports
from gammaforge import __version__
from gammaforge.cli import (dumps, loads, read_structures, write_structures,
                            structure_to_dict, ResultCache, cache_key,
                            default_cache_dir, RunManifest, file_digest,
                            main)
from gammaforge.analytics import growth_table
from gammaforge.core import (AxiomConfig, DataFormatError, boolean_structure,
                             trivial_structure)
from gammaforge.enumeration import SearchConfig
from gammaforge.utils.data_operations import SIGNATURE_COLUMNS

OUTPUTS = ('classes.jsonl', 'stats.json', 'manifest.json')


# ----- Structure files -----
def test_dumps():
    text = dumps(boolean_structure())
    assert text == ('{"n":2,"g":1,"mode":{"symmetric":true,'
                    '"associative":false},"add":[[0,1],[1,1]],'
                    '"tensors":[[[[0,0],[0,0]],[[0,0],[0,1]]]]}')
    assert list(structure_to_dict(trivial_structure())) == \
        ['n', 'g', 'mode', 'add', 'tensors']
    assert loads(text) == boolean_structure()


def test_loads_errors():
    with pytest.raises(DataFormatError) as exc:
        loads('{"n": 2,', line=3)
    assert exc.value.line == 3
    assert exc.value.column is not None
    assert str(exc.value).startswith('line 3, column')

    good = structure_to_dict(boolean_structure())
    bad = [dict(reversed(list(good.items()))),
           dict(good, n=True),
           dict(good, n=3),
           dict(good, mode={'symmetric': True}),
           dict(good, mode={'symmetric': 1, 'associative': False}),
           dict(good, add=[[0, 1], [1]]),
           dict(good, add=[[0.5, 1], [1, 1]]),
           dict(good, add=[[0, 1], [1, 2]])]
    for obj in bad:
        with pytest.raises(DataFormatError):
            loads(json.dumps(obj), line=1)
    with pytest.raises(DataFormatError):
        loads('[1, 2]')


def test_read_write_structures(tmp_path):
    path = tmp_path / 'structures.jsonl'
    text = write_structures(path, [trivial_structure(), boolean_structure()])
    assert text.count('\n') == 2
    assert read_structures(path) == [trivial_structure(), boolean_structure()]

    path.write_text(dumps(boolean_structure()) + '\n\n{"n": 2}\n')
    with pytest.raises(DataFormatError) as exc:
        read_structures(path)
    assert exc.value.line == 3


# ----- Cache and manifest -----
def test_result_cache(tmp_path):
    cache = ResultCache(tmp_path / 'cache')
    assert cache.keys() == []
    assert cache.spot_check(lambda p: p) is None

    key = cache_key(SearchConfig(2, 1))
    assert key == cache_key(SearchConfig(2, 1, worker_count=3))
    assert key != cache_key(SearchConfig(2, 2))
    assert cache.load(key) is None

    cache.store(key, {'classes': [1, 2]})
    assert cache.keys() == [key]
    assert cache.load(key) == {'classes': [1, 2]}
    assert cache.spot_check(lambda p: dict(p), seed=0) == (key, True)
    assert cache.spot_check(lambda p: {'classes': []}, seed=0) == \
        (key, False)
    assert list((tmp_path / 'cache').glob('*.tmp')) == []

    cache.path(key).write_text('{not json')
    assert cache.load(key) is None


def test_result_cache_spot_check_eligible(tmp_path):
    cache = ResultCache(tmp_path)
    small = cache_key(SearchConfig(2, 1))
    large = cache_key(SearchConfig(4, 2))
    cache.store(small, {'config': {'n': 2, 'g': 1}})
    cache.store(large, {'config': {'n': 4, 'g': 2}})

    recomputed = []

    def recompute(payload):
        recomputed.append(payload['config']['n'])
        return payload

    def no_larger(payload):
        return payload['config']['n'] <= 2

    for seed in range(8):
        assert cache.spot_check(recompute, seed=seed,
                                eligible=no_larger) == (small, True)
    assert recomputed == [2] * 8
    assert cache.spot_check(recompute, eligible=lambda p: False) is None


def test_default_cache_dir(monkeypatch, tmp_path):
    monkeypatch.setenv('GAMMA_FORGE_CACHE', str(tmp_path))
    assert default_cache_dir() == tmp_path
    monkeypatch.delenv('GAMMA_FORGE_CACHE')
    assert default_cache_dir().name == 'gamma-forge'


def test_run_manifest(tmp_path):
    data = tmp_path / 'data.txt'
    data.write_text('abc')
    manifest = RunManifest('verify', seed=4, wall_time_s=1.23456789)
    manifest.add_input(data)
    path = manifest.write(tmp_path)
    written = json.loads(path.read_text())
    assert written['tool_version'] == __version__
    assert written['inputs'] == {'data.txt': file_digest(data)}
    assert written['wall_time_s'] == 1.234568
    assert len(file_digest(data)) == 64


# ----- enumerate -----
def test_enumerate(create_enumeration):
    assert create_enumeration['code'] == 0
    out = create_enumeration['out']
    lines = (out / 'classes.jsonl').read_text().splitlines()
    assert len(lines) == 4
    assert all(loads(line).n == 2 for line in lines)

    stats = json.loads((out / 'stats.json').read_text())
    assert stats['classes'] == 4
    assert stats['valid_found'] == 4
    assert stats['axiom_mode'] == 'symmetric'
    manifest = json.loads((out / 'manifest.json').read_text())
    assert manifest['command'] == 'enumerate'
    assert sorted(manifest['outputs']) == ['classes.jsonl', 'stats.json']


def test_enumerate_cached_rerun(create_enumeration):
    out = create_enumeration['out']
    before = {name: (out / name).read_bytes() for name in OUTPUTS}
    assert main(create_enumeration['argv']) == 0
    after = {name: (out / name).read_bytes() for name in OUTPUTS}
    assert after == before


def test_enumerate_cache_mismatch(tmp_path):
    argv = ['enumerate', '--order', '2', '--gamma', '1',
            '--out', str(tmp_path / 'out'),
            '--cache-dir', str(tmp_path / 'cache')]
    assert main(argv) == 0
    cache = ResultCache(tmp_path / 'cache')
    key, = cache.keys()
    payload = cache.load(key)
    payload['class_sizes'][0] += 1
    cache.store(key, payload)
    assert main(argv) == 1


def test_enumerate_refusals(tmp_path):
    base = ['--out', str(tmp_path), '--cache-dir', str(tmp_path / 'cache')]
    assert main(['enumerate', '--order', '5', '--gamma', '1'] + base) == 2
    assert main(['enumerate', '--order', '3', '--gamma', '1',
                 '--step-budget', '1'] + base) == 2
    assert ResultCache(tmp_path / 'cache').keys() == []


def test_usage_errors(capsys):
    assert main(['enumerate', '--order', 'two', '--gamma', '1']) == 64
    assert main(['enumerate', '--bogus']) == 64
    assert main([]) == 64
    assert main(['--version']) == 0
    assert __version__ in capsys.readouterr().out


# ----- verify -----
def test_verify(create_enumeration, tmp_path, capsys):
    classes = create_enumeration['out'] / 'classes.jsonl'
    assert main(['verify', str(classes)]) == 0
    assert '4 structures, 0 invalid' in capsys.readouterr().out

    obj = structure_to_dict(boolean_structure())
    obj['tensors'][0][0][1][1] = 1
    path = tmp_path / 'corrupt.jsonl'
    path.write_text(classes.read_text() + json.dumps(obj) + '\n')
    assert main(['verify', str(path)]) == 1
    out = capsys.readouterr().out
    assert 'structure 5:' in out
    assert 'absorbing' in out

    path.write_text('')
    assert main(['verify', str(path)]) == 0

    path.write_text('{"n": 2,\n')
    assert main(['verify', str(path)]) == 65
    assert main(['verify', str(tmp_path / 'missing.jsonl')]) == 64


# ----- invariants and report -----
def test_invariants_and_report(create_enumeration, tmp_path, capsys):
    classes = create_enumeration['out'] / 'classes.jsonl'
    inv_out = tmp_path / 'invariants'
    assert main(['invariants', str(classes), '--out', str(inv_out),
                 '--spectra']) == 0
    csv_path = inv_out / 'signatures-full-aut.csv'
    assert len(csv_path.read_text().splitlines()) == 5
    spectra = json.loads((inv_out / 'spectra.json').read_text())
    assert len(spectra) == 4
    assert all(v['intersection_holds'] for v in spectra.values())
    manifest = json.loads((inv_out / 'manifest.json').read_text())
    assert list(manifest['inputs']) == ['classes.jsonl']

    report_out = tmp_path / 'report'
    assert main(['report', str(csv_path), '--out', str(report_out),
                 '--structures', str(classes),
                 '--stats', str(create_enumeration['out'] / 'stats.json'),
                 '--growth-max-n', '2', '--growth-max-g', '1',
                 '--trials', '20']) == 0
    for name in ('correlation.json', 'regression.json', 'pca.csv',
                 'pca_per_n.csv', 'pca.gnuplot', 'pca.json', 'growth.csv',
                 'stability.json', 'subvarieties.csv', 'summary.txt',
                 'manifest.json'):
        assert (report_out / name).is_file()

    summary = (report_out / 'summary.txt').read_text()
    assert 'claimed' in summary
    assert '\033[' not in summary
    assert 'classes: 4' in capsys.readouterr().out

    stability = json.loads((report_out / 'stability.json').read_text())
    assert stability['classes'] == 4
    regression = json.loads((report_out / 'regression.json').read_text())
    assert len(regression['fits']) == 4
    assert regression['sampling'][0]['trials'] == 20


def test_invariants_rejects_invalid(tmp_path):
    obj = structure_to_dict(boolean_structure())
    obj['tensors'][0][0][1][1] = 1
    path = tmp_path / 'corrupt.jsonl'
    path.write_text(json.dumps(obj) + '\n')
    assert main(['invariants', str(path), '--out', str(tmp_path)]) == 1


def test_report_empty_dataset(tmp_path):
    path = tmp_path / 'empty.csv'
    path.write_text(','.join(SIGNATURE_COLUMNS) + '\n')
    assert main(['report', str(path), '--out', str(tmp_path / 'r')]) == 2

    path.write_text('canon_hash,n\nabc,2\n')
    assert main(['report', str(path), '--out', str(tmp_path / 'r')]) == 65


def test_enumerate_jobs_identical(tmp_path):
    outputs = []
    for jobs in ('1', '8'):
        out = tmp_path / f'jobs{jobs}'
        argv = ['enumerate', '--order', '3', '--gamma', '1', '--jobs', jobs,
                '--out', str(out), '--cache-dir', str(tmp_path / f'c{jobs}')]
        assert main(argv) == 0
        outputs.append((out / 'classes.jsonl').read_bytes())
    assert outputs[0] == outputs[1]
    assert outputs[0].count(b'\n') == 26


def test_report_rerun_identical(create_enumeration, tmp_path):
    classes = create_enumeration['out'] / 'classes.jsonl'
    inv_out = tmp_path / 'invariants'
    assert main(['invariants', str(classes), '--out', str(inv_out)]) == 0
    dataset = inv_out / 'signatures-full-aut.csv'

    bundles, manifests = [], []
    for run in ('first', 'second'):
        out = tmp_path / run
        assert main(['report', str(dataset), '--out', str(out),
                     '--structures', str(classes),
                     '--growth-max-n', '2', '--growth-max-g', '1',
                     '--trials', '20']) == 0
        bundles.append({p.name: p.read_bytes() for p in sorted(out.iterdir())
                        if p.name != 'manifest.json'})
        manifests.append(json.loads((out / 'manifest.json').read_text()))
    assert len(bundles[0]) == 10
    assert bundles[0] == bundles[1]
    assert manifests[0]['outputs'] == manifests[1]['outputs']


def test_report_keeps_axiom_mode(tmp_path):
    enum_out = tmp_path / 'enumerate'
    assert main(['enumerate', '--order', '2', '--gamma', '1', '--associative',
                 '--out', str(enum_out),
                 '--cache-dir', str(tmp_path / 'cache')]) == 0
    classes = enum_out / 'classes.jsonl'
    inv_out = tmp_path / 'invariants'
    assert main(['invariants', str(classes), '--out', str(inv_out)]) == 0
    associative = AxiomConfig(associative=True)
    manifest = json.loads((inv_out / 'manifest.json').read_text())
    assert manifest['axiom_mode'] == associative.to_dict()

    dataset = inv_out / 'signatures-full-aut.csv'
    expected = growth_table(2, 1, axiom_mode=associative,
                            permute_gamma_column=False)
    for extra in ([], ['--structures', str(classes)]):
        out = tmp_path / f'report{len(extra)}'
        assert main(['report', str(dataset), '--out', str(out),
                     '--growth-max-n', '2', '--growth-max-g', '1',
                     '--trials', '5'] + extra) == 0
        manifest = json.loads((out / 'manifest.json').read_text())
        assert manifest['axiom_mode'] == associative.to_dict()
        growth = pd.read_csv(out / 'growth.csv')
        assert growth['classes'].tolist() == expected['classes'].tolist()
