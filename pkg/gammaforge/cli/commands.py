# -*- coding: utf-8 -*-
# Copyright (c) St. Anne's University Hospital in Brno. International Clinical
# Research Center, Biomedical Engineering. All Rights Reserved.
# Distributed under the (new) BSD License. See LICENSE.txt for more info.

"""
gamma-forge command line: enumerate, verify, invariants and report.

Exit codes: 0 ok, 1 validation failure, 2 refusal (size caps, step budget,
empty dataset), 64 usage error, 65 malformed input data.
"""

# Std imports
import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path

# Third pary imports
import numpy as np
import pandas as pd

# Local imports
from .. import __version__
from ..analytics import (CLAIMED_AUT_DOUBLING, CLAIMED_AUT_ORDERS,
                         CLAIMED_KAPPA_RHO, CLAIMED_REGRESSION_R,
                         CLAIMED_RUNTIMES, SignatureDataset, build_dataset,
                         correlation_report, equivalence_report,
                         gnuplot_script, growth_table, pca_projection,
                         regression_fit, stability_check, storage_cost,
                         subvariety_tally)
from ..core import (AxiomConfig, CapExceeded, ContractViolation,
                    DataFormatError, EmptyDatasetError, InvariantViolation,
                    StepBudgetExhausted, StructureError, verify_structure)
from ..enumeration import SearchConfig, enumerate_classes, sample_random
from ..enumeration.search import MAX_GAMMA, MAX_ORDER
from ..invariants import ENTROPY_MODES, check_closed_set_laws, spectrum
from .cache import ResultCache, cache_key
from .manifest import RunManifest
from .serialization import dumps, read_structures

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_REFUSED = 2
EXIT_USAGE = 64
EXIT_DATA = 65

REGRESSION_TARGETS = ('num_ideals', 'num_congruences')


class UsageArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that exits with 64 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _use_color(stream):
    return 'NO_COLOR' not in os.environ and stream.isatty()


def _bold(text, color):
    return f"\033[1m{text}\033[0m" if color else text


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (tuple, set, frozenset)):
        return list(obj)
    raise TypeError(f"{type(obj).__name__} is not JSON serializable")


def _write_json(path, obj):
    Path(path).write_text(json.dumps(obj, indent=2, default=_json_default)
                          + '\n', encoding='utf-8')
    return path


def _out_dir(args):
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


# ----- enumerate -----
def _enumeration_payload(cfg):
    records, stats = enumerate_classes(cfg, return_stats=True)
    return {'config': cfg.to_dict(),
            'classes': [dumps(r.representative) for r in records],
            'class_sizes': [r.class_size for r in records],
            'stats': stats.to_json_dict()}


def _config_from_dict(d, worker_count=1):
    mode = AxiomConfig.from_dict(d['axiom_mode'])
    return SearchConfig(d['n'], d['g'], mode,
                        worker_count=worker_count,
                        step_budget=d['step_budget'], force=True,
                        permute_gamma=d['permute_gamma'])


def cmd_enumerate(args):
    mode = AxiomConfig(symmetric=not args.no_symmetric,
                       associative=args.associative)
    cfg = SearchConfig(args.order, args.gamma, mode, worker_count=args.jobs,
                       step_budget=args.step_budget, force=args.force,
                       permute_gamma=args.permute_gamma)
    cfg.check_caps()

    start = time.perf_counter()
    cache = ResultCache(args.cache_dir)
    key = cache_key(cfg)
    payload = cache.load(key)
    if payload is not None:
        logger.info("Cache hit %s for n=%d g=%d", key, cfg.n, cfg.g)
    else:
        payload = _enumeration_payload(cfg)
        cache.store(key, payload)

    out = _out_dir(args)
    classes_path = out / 'classes.jsonl'
    classes_path.write_text(''.join(line + '\n'
                                    for line in payload['classes']),
                            encoding='utf-8')
    stats = {'n': cfg.n, 'g': cfg.g, 'axiom_mode': mode.name,
             'classes': len(payload['classes'])}
    stats.update(payload['stats'])
    stats_path = _write_json(out / 'stats.json', stats)

    def recompute(cached):
        fresh = _enumeration_payload(_config_from_dict(cached['config'],
                                                       args.jobs))
        fresh['stats']['wall_time_s'] = cached['stats']['wall_time_s']
        return fresh

    def no_larger(cached):
        return (cached['config']['n'] <= cfg.n
                and cached['config']['g'] <= cfg.g)

    checked = cache.spot_check(recompute, eligible=no_larger)

    manifest = RunManifest('enumerate', config=cfg.to_dict(),
                           axiom_mode=mode.to_dict())
    manifest.add_output(classes_path)
    manifest.add_output(stats_path)
    manifest.wall_time_s = payload['stats']['wall_time_s']
    manifest.write(out)
    logger.info("Wrote %d classes to %s in %.3f s", stats['classes'],
                classes_path, time.perf_counter() - start)

    if checked is not None and not checked[1]:
        print(f"cache entry {checked[0]} does not match a fresh computation",
              file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


# ----- verify -----
def cmd_verify(args):
    structures = read_structures(args.file)
    invalid = 0
    for idx, s in enumerate(structures, start=1):
        report = verify_structure(s)
        if not report.valid:
            invalid += 1
            print(f"structure {idx}: {report.summary()}")
    print(f"{len(structures)} structures, {invalid} invalid")
    return EXIT_INVALID if invalid else EXIT_OK


# ----- invariants -----
def cmd_invariants(args):
    structures = read_structures(args.file)
    for idx, s in enumerate(structures, start=1):
        report = verify_structure(s)
        if not report.valid:
            print(f"structure {idx}: {report.summary(3)}", file=sys.stderr)
            return EXIT_INVALID

    start = time.perf_counter()
    ds = build_dataset(structures, args.entropy_mode, n_cores=args.jobs)
    out = _out_dir(args)
    manifest = RunManifest('invariants',
                           axiom_mode=ds.provenance.get('axiom_mode'))
    manifest.add_input(args.file)

    csv_path = out / f"signatures-{args.entropy_mode}.csv"
    ds.to_csv(csv_path)
    manifest.add_output(csv_path)
    missing = int(ds.frame['num_congruences'].isna().sum())
    if missing:
        logger.warning("%d rows exceed the congruence scan cap, "
                       "num_congruences left empty", missing)

    if args.spectra:
        spectra = {}
        for h in ds.frame['canon_hash']:
            s = ds.structures[h]
            spec = spectrum(s)
            laws = check_closed_set_laws(s, spec)
            spectra[h] = dict(spec.to_dict(),
                              intersection_holds=laws.intersection_holds,
                              union_closed=laws.union_closed)
        manifest.add_output(_write_json(out / 'spectra.json', spectra))

    manifest.wall_time_s = time.perf_counter() - start
    manifest.write(out)
    print(f"{len(ds)} classes from {len(structures)} structures")
    return EXIT_OK


# ----- report -----
def _dataset_provenance(path):
    # axiom mode recorded by the invariants run that wrote the dataset
    manifest_path = Path(path).parent / 'manifest.json'
    try:
        manifest = json.loads(manifest_path.read_text(encoding='utf-8'))
    except (OSError, ValueError):
        return {}
    if (not isinstance(manifest, dict)
            or Path(path).name not in manifest.get('outputs', {})
            or not manifest.get('axiom_mode')):
        return {}
    return {'axiom_mode': manifest['axiom_mode']}


def _regression_bundle(ds, args):
    fits = []
    for target in REGRESSION_TARGETS:
        for intercept in (True, False):
            try:
                fits.append(regression_fit(ds, target, intercept).to_dict())
            except ValueError as exc:
                fits.append({'target': target, 'intercept_fit': intercept,
                             'error': str(exc)})

    sampling = []
    pairs = sorted({(int(r.n), int(r.g)) for r in ds.frame.itertuples()})
    for n, g in pairs:
        if n > MAX_ORDER or g > MAX_GAMMA:
            continue
        report = sample_random(SearchConfig(n, g, ds.axiom_mode), args.seed,
                               args.trials)
        sampling.append(report.to_dict())

    return {'schema_version': 1,
            'claimed_r': CLAIMED_REGRESSION_R,
            'fits': fits,
            'sampling': sampling}


def _pca_bundle(ds, out, manifest):
    summaries = {}
    for normalization, name in (('zscore', 'pca.csv'),
                                ('per_n', 'pca_per_n.csv')):
        try:
            proj = pca_projection(ds, normalization)
        except ValueError as exc:
            logger.warning("PCA (%s) skipped: %s", normalization, exc)
            frame = pd.DataFrame(columns=['canon_hash', 'pc1', 'pc2',
                                          'type_label'])
            summaries[normalization] = {'error': str(exc)}
        else:
            frame = proj.to_frame()
            summaries[normalization] = proj.to_dict()
        frame.to_csv(out / name, index=False, lineterminator='\n')
        manifest.add_output(out / name)

    labels = ds.frame['type_label'].tolist()
    (out / 'pca.gnuplot').write_text(gnuplot_script('pca.csv', labels),
                                     encoding='utf-8')
    manifest.add_output(out / 'pca.gnuplot')
    manifest.add_output(_write_json(out / 'pca.json', summaries))


def _summary_lines(ds, corr, regression, stability, run_stats, color):
    frame = ds.frame
    lines = [_bold(f"gamma-forge {__version__} report", color),
             f"classes: {len(frame)}", '',
             _bold("Automorphism orders (claimed | computed max |Aut|)",
                   color)]
    for n, g, label, claimed in CLAIMED_AUT_ORDERS:
        sel = frame[(frame['n'] == n) & (frame['g'] == g)]
        computed = int(sel['aut_order'].max()) if len(sel) else '-'
        lines.append(f"  n={n} g={g} {label:<17} claimed {claimed:>3} | "
                     f"computed {computed}")

    lines += ['', _bold("Search cost (claimed steps/runtime | computed)",
                        color)]
    for n, g, steps, runtime in CLAIMED_RUNTIMES:
        mine = [s for s in run_stats if s['n'] == n and s['g'] == g]
        computed = (f"{mine[0]['extension_steps']} steps "
                    f"{mine[0]['wall_time_s']:.3f} s" if mine else '-')
        lines.append(f"  n={n} g={g} claimed {steps} steps {runtime} s | "
                     f"computed {computed}")

    lines += ['', _bold("Radical and congruences", color),
              f"  claimed: {CLAIMED_KAPPA_RHO}",
              f"  computed mean |kappa - (1 + rho)|: "
              f"{corr['mean_abs_residual']}"]
    if corr['pearson_rho_kappa'] is not None:
        lines.append(f"  computed pearson r(rho, kappa): "
                     f"{corr['pearson_rho_kappa']['r']:.6f}")

    lines += ['', _bold("Regression", color),
              f"  claimed R: {CLAIMED_REGRESSION_R}"]
    for fit in regression['fits']:
        if 'error' in fit:
            continue
        kind = 'with' if fit['intercept'] is not None else 'without'
        lines.append(f"  computed R ({fit['target']}, {kind} intercept): "
                     f"{fit['r']:.6f}")

    lines += ['', _bold("Parameter duplication", color),
              f"  claimed: {CLAIMED_AUT_DOUBLING}"]
    if stability.get('classes'):
        lines.append(f"  computed: |Aut| doubled in "
                     f"{stability['aut_doubled']} of {stability['classes']} "
                     f"classes, type label unchanged in "
                     f"{stability['label_stability']:.0%}")
    else:
        lines.append("  computed: -")
    return lines


def cmd_report(args):
    ds = SignatureDataset.from_csv(args.dataset,
                                   _dataset_provenance(args.dataset))
    if len(ds) == 0:
        raise EmptyDatasetError(f"Dataset {args.dataset} has no rows")
    if args.structures:
        ds.attach(read_structures(args.structures))

    start = time.perf_counter()
    out = _out_dir(args)
    manifest = RunManifest('report', seed=args.seed,
                           axiom_mode=ds.provenance.get('axiom_mode'))
    manifest.add_input(args.dataset)
    if args.structures:
        manifest.add_input(args.structures)

    run_stats = []
    for path in args.stats or []:
        manifest.add_input(path)
        try:
            run_stats.append(json.loads(Path(path).read_text(
                encoding='utf-8')))
        except ValueError as exc:
            raise DataFormatError(f"{path}: {exc}")

    corr = correlation_report(ds)
    corr['equivalence'] = equivalence_report(ds)
    manifest.add_output(_write_json(out / 'correlation.json', corr))

    regression = _regression_bundle(ds, args)
    manifest.add_output(_write_json(out / 'regression.json', regression))

    _pca_bundle(ds, out, manifest)

    growth = growth_table(args.growth_max_n, args.growth_max_g,
                          axiom_mode=ds.axiom_mode,
                          worker_count=args.jobs)
    growth['storage_bits'] = [storage_cost(n, g)
                              for n, g in zip(growth['n'], growth['g'])]
    growth.to_csv(out / 'growth.csv', index=False, lineterminator='\n')
    manifest.add_output(out / 'growth.csv')

    if ds.structures:
        stability = stability_check(ds.structures)
    else:
        stability = {'schema_version': 1, 'classes': 0,
                     'skipped': 'no structures file given'}
    manifest.add_output(_write_json(out / 'stability.json', stability))

    tally = subvariety_tally(ds.structures)
    tally.to_csv(out / 'subvarieties.csv', index=False, lineterminator='\n')
    manifest.add_output(out / 'subvarieties.csv')

    lines = _summary_lines(ds, corr, regression, stability, run_stats, False)
    summary_path = out / 'summary.txt'
    summary_path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
    manifest.add_output(summary_path)

    color = _use_color(sys.stdout)
    print('\n'.join(_summary_lines(ds, corr, regression, stability,
                                   run_stats, color)))

    manifest.wall_time_s = time.perf_counter() - start
    manifest.write(out)
    return EXIT_OK


# ----- entry point -----
def build_parser():
    parser = UsageArgumentParser(
        prog='gamma-forge',
        description='Enumerate and classify finite commutative ternary '
                    'Gamma-semirings.')
    parser.add_argument('--version', action='version',
                        version=f"%(prog)s {__version__}")
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='More log output (repeat for debug)')
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='Only log errors')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('enumerate', help='Enumerate isomorphism classes')
    p.add_argument('--order', type=int, required=True)
    p.add_argument('--gamma', type=int, required=True)
    p.add_argument('--no-symmetric', action='store_true')
    p.add_argument('--associative', action='store_true')
    p.add_argument('--jobs', type=int, default=1)
    p.add_argument('--out', default='.')
    p.add_argument('--force', action='store_true',
                   help=f"Lift the n <= {MAX_ORDER}, g <= {MAX_GAMMA} caps")
    p.add_argument('--permute-gamma', action='store_true')
    p.add_argument('--cache-dir', default=None)
    p.add_argument('--step-budget', type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser('verify', help='Check the axioms of a structures file')
    p.add_argument('file')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('invariants', help='Signature CSV of a structures file')
    p.add_argument('file')
    p.add_argument('--out', default='.')
    p.add_argument('--spectra', action='store_true')
    p.add_argument('--entropy-mode', choices=sorted(ENTROPY_MODES),
                   default='full-aut')
    p.add_argument('--jobs', type=int, default=1)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser('report', help='Analytics bundle of a signature CSV')
    p.add_argument('dataset')
    p.add_argument('--out', default='.')
    p.add_argument('--structures', default=None)
    p.add_argument('--stats', action='append', default=None)
    p.add_argument('--growth-max-n', type=int, default=2)
    p.add_argument('--growth-max-g', type=int, default=2)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--trials', type=int, default=200)
    p.add_argument('--jobs', type=int, default=1)
    p.set_defaults(func=cmd_report)

    return parser


def _configure_logging(args):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    """
    Run the command line and return the exit code.

    Parameters
    ----------
    argv: list of str | None
        Arguments without the program name, sys.argv[1:] when None
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    _configure_logging(args)

    try:
        return args.func(args)
    except (CapExceeded, StepBudgetExhausted, EmptyDatasetError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except DataFormatError as exc:
        print(f"data format error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ContractViolation, InvariantViolation) as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (StructureError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
