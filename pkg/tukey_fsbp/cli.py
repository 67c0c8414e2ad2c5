# coding=utf-8
"""The ``tukey-fsbp`` command line interface.

Every sub-command but ``gen`` prints a JSON report matching
:data:`tukey_fsbp.constants.REPORT_SCHEMA`; ``gen`` prints a dataset that
:func:`tukey_fsbp.datasets.parse_dataset` reads back exactly. Logging goes to
stderr so that identical invocations print byte-identical reports.
"""
import argparse
import json
import logging
import os
import sys
import time
from collections import namedtuple

from tukey_fsbp import constants, report
from tukey_fsbp.attack import (
    build_attack,
    empirical_fsbp,
    lower_bound_trace,
    run_attack,
)
from tukey_fsbp.datasets import (
    dataset_document,
    gen_dataset,
    parse_dataset,
    parse_point,
)
from tukey_fsbp.depth import max_depth_region, tukey_depth, tukey_median
from tukey_fsbp.exceptions import (
    InvalidGenerator,
    NoBreakdownWithinBudget,
    ParseError,
    TukeyFsbpError,
)
from tukey_fsbp.fsbp import Method, fsbp_theorem1
from tukey_fsbp.geometry import (
    convex_hull,
    hull_contains,
    is_general_position,
    to_fraction,
)

logger = logging.getLogger(__name__)  # pylint:disable=invalid-name

RunConfig = namedtuple(
    'RunConfig',
    'command input gen seed max_m magnitudes out plot_data point timing '
    'sweep_n verbose',
)
"""The parsed command line. Identical configs print identical reports."""

_LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def build_parser():
    """Return the :class:`argparse.ArgumentParser` of the tool."""
    parser = argparse.ArgumentParser(
        prog='tukey-fsbp',
        description=(
            'Exact Tukey depth, the Tukey median and its finite sample '
            'breakdown point.'
        ),
    )
    parser.add_argument('command', choices=constants.COMMANDS)
    parser.add_argument(
        '--input', help='A CSV or JSON dataset, as a path or as text.'
    )
    parser.add_argument(
        '--gen', metavar='KIND[:N:D]',
        help='Generate the dataset instead, e.g. random_igp:9:2.',
    )
    parser.add_argument('--seed', type=int, default=constants.DEFAULT_SEED)
    parser.add_argument(
        '--max-m', type=int, default=constants.DEFAULT_MAX_M,
        help='The largest number of contaminating copies to try.',
    )
    parser.add_argument(
        '--magnitude', action='append', dest='magnitudes',
        help='A rational attack magnitude; repeat for several.',
    )
    parser.add_argument('--out', help='Write the report here, not to stdout.')
    parser.add_argument(
        '--plot-data', metavar='DIR',
        help='Write plot series as JSON files into DIR.',
    )
    parser.add_argument(
        '--point', help='For depth: a point such as 1/2,3.'
    )
    parser.add_argument(
        '--timing', action='store_true',
        help='Add the wall-clock time to the report.',
    )
    parser.add_argument(
        '--sweep-n', type=int, default=constants.SWEEP_N,
        help='The sample size of the epsilon-versus-dimension series.',
    )
    parser.add_argument('-v', '--verbose', action='count', default=0)
    return parser


def parse_args(argv=None):
    """Return a :class:`RunConfig`. Usage errors exit with status 2."""
    args = build_parser().parse_args(argv)
    return RunConfig(
        args.command,
        args.input,
        args.gen,
        args.seed,
        args.max_m,
        tuple(args.magnitudes) if args.magnitudes else None,
        args.out,
        args.plot_data,
        args.point,
        args.timing,
        args.sweep_n,
        args.verbose,
    )


def _magnitudes(config, default):
    values = config.magnitudes or default
    try:
        return tuple(to_fraction(value) for value in values)
    except (ValueError, ZeroDivisionError):
        raise ParseError(
            'Magnitudes must be rationals, got {}.'.format(', '.join(values))
        )


def _generator(text, seed):
    """Run a ``kind[:n:d]`` generator description."""
    kind, *sizes = text.split(':')
    if len(sizes) not in (0, 2):
        raise InvalidGenerator(
            'Expected KIND or KIND:N:D, got {!r}.'.format(text)
        )
    try:
        sizes = [int(size) if size else None for size in sizes]
    except ValueError:
        raise InvalidGenerator(
            'N and D must be integers, got {!r}.'.format(text)
        )
    n, d = sizes or (None, None)  # pylint:disable=invalid-name
    return gen_dataset(kind, n=n, d=d, seed=seed)


def load_dataset(config):
    """Return the dataset named by ``--input`` or ``--gen``, if any."""
    if config.input is not None and config.gen is not None:
        raise ParseError('Give --input or --gen, not both.')
    if config.input is not None:
        return parse_dataset(config.input)
    if config.gen is not None:
        return _generator(config.gen, config.seed)
    return None


def _summary(X):  # pylint:disable=invalid-name
    return {'n': X.n, 'd': X.d, 'general_position': is_general_position(X)}


def _echo(config):
    echo = config._asdict()
    echo.pop('verbose')
    if config.magnitudes is not None:
        echo['magnitudes'] = list(config.magnitudes)
    return echo


def _epsilon_series(config):
    """Return the breakdown point of seeded samples against the dimension."""
    series = []
    for d in constants.SWEEP_DIMENSIONS:  # pylint:disable=invalid-name
        X = gen_dataset(  # pylint:disable=invalid-name
            'random_igp', n=config.sweep_n, d=d, seed=config.seed
        )
        certificate = fsbp_theorem1(X, seed=config.seed)
        series.append({
            'd': d,
            'n': X.n,
            'k': certificate.lambda_star_min.count,
            'epsilon': report.rational(certificate.epsilon),
        })
    return series


def _depth_payload(config, X):  # pylint:disable=invalid-name
    if config.point is None:
        return {
            'sample_depths': [
                report.depth(tukey_depth(p, X)) for p in X
            ],
        }
    point = parse_point(config.point, X.d)
    return {
        'point': report.point(point),
        'depth': report.depth(tukey_depth(point, X)),
        'position': hull_contains(convex_hull(X), point).value,
    }


def _median_payload(X):  # pylint:disable=invalid-name
    return {
        'region': report.region(max_depth_region(X)),
        'median': report.point(tukey_median(X)),
    }


def _fsbp_payload(config, X):  # pylint:disable=invalid-name
    payload = {'certificate': report.certificate(
        fsbp_theorem1(X, seed=config.seed)
    )}
    if config.plot_data:
        payload['series'] = {'epsilon_vs_dimension': _epsilon_series(config)}
    return payload


def _attack_payload(config, X):  # pylint:disable=invalid-name
    magnitude = _magnitudes(config, (constants.DEFAULT_MAGNITUDE,))[0]
    certificate = fsbp_theorem1(X, seed=config.seed)
    m = empirical_fsbp(  # pylint:disable=invalid-name
        X, max_m=config.max_m, magnitude=magnitude, certificate=certificate
    )
    k = certificate.lambda_star_min.count  # pylint:disable=invalid-name
    plan = build_attack(X, magnitude=magnitude, m=k, certificate=certificate)
    payload = {
        'certificate': report.certificate(certificate),
        'empirical_m': m,
        'plan': report.plan(plan),
        'outcome': report.outcome(run_attack(X, plan)),
        'lower_bound': [
            report.trace(lower_bound_trace(X, below, plan))
            for below in range(k)
        ],
    }
    if config.plot_data:
        magnitudes = tuple(
            plan.magnitude * 2 ** i
            for i in range(constants.PLOT_MAGNITUDE_STEPS)
        )
        outcome = run_attack(X, plan._replace(magnitudes=magnitudes))
        payload['series'] = {'displacement_vs_magnitude': [
            {
                'magnitude': report.rational(magnitude),
                'displacement': report.rational(displacement),
            }
            for magnitude, displacement in zip(
                outcome.magnitudes, outcome.displacements
            )
        ]}
    return payload


def _check(name, label, passed, **detail):
    return dict(detail, name=name, dataset=label, passed=bool(passed))


def verify_dataset(X, label, config):  # pylint:disable=invalid-name
    """Run every acceptance check on one sample.

    :returns: A list of check records, each with a ``passed`` flag.
    """
    magnitudes = _magnitudes(config, constants.VERIFY_MAGNITUDES)
    certificate = fsbp_theorem1(X, seed=config.seed)
    k = certificate.lambda_star_min.count  # pylint:disable=invalid-name
    checks = [_check(
        'sandwich', label,
        certificate.prop1_lower <= certificate.epsilon
        <= certificate.prop1_upper,
        epsilon=report.rational(certificate.epsilon),
    )]
    if certificate.method is Method.RANDOMIZED_UPPER_BOUND:
        logger.warning('Skipping the attack checks on %s.', label)
        return checks
    try:
        m = empirical_fsbp(  # pylint:disable=invalid-name
            X, max_m=config.max_m, magnitude=magnitudes[0],
            certificate=certificate,
        )
    except NoBreakdownWithinBudget as err:
        logger.warning('%s: %s', label, err)
        m = None  # pylint:disable=invalid-name
    checks.append(_check('attack_threshold', label, m == k, k=k, m=m))
    for magnitude in magnitudes:
        plan = build_attack(X, magnitude=magnitude, certificate=certificate)
        traces = [lower_bound_trace(X, below, plan) for below in range(k)]
        checks.append(_check(
            'lower_bound', label, all(t.holds for t in traces),
            magnitude=report.rational(magnitude),
            failed_m=[t.m for t in traces if not t.holds],
        ))
    checks.append(_check(
        'sample_depth_floor', label,
        all(tukey_depth(p, X).count >= 1 for p in X),
    ))
    return checks


def _verify_payload(config, X):  # pylint:disable=invalid-name
    if X is not None:
        checks = verify_dataset(X, 'input', config)
    else:
        checks = []
        for kind, n, d in constants.VERIFY_SUITE:  # pylint:disable=invalid-name
            sample = gen_dataset(kind, n=n, d=d, seed=config.seed)
            label = '{}:{}:{}'.format(kind, sample.n, sample.d)
            checks.extend(verify_dataset(sample, label, config))
    payload = {
        'checks': checks,
        'passed': all(check['passed'] for check in checks),
    }
    if config.plot_data:
        payload['series'] = {'epsilon_vs_dimension': _epsilon_series(config)}
    return payload


def dispatch(config, X=None):  # pylint:disable=invalid-name
    """Run one sub-command other than ``gen`` and return its report.

    :param config: A :class:`RunConfig`.
    :param X: The sample, by default :func:`load_dataset` of the config.
    :returns: A report dictionary, validated against the report schema.
    :raises tukey_fsbp.exceptions.TukeyFsbpError: On any failed computation.
    """
    started = time.perf_counter()
    if X is None:
        X = load_dataset(config)  # pylint:disable=invalid-name
    if X is None and config.command != 'verify':
        raise ParseError(
            'The {} command needs --input or --gen.'.format(config.command)
        )
    logger.info('Running %s on %r.', config.command, X)
    if config.command == 'depth':
        payload = _depth_payload(config, X)
    elif config.command == 'median':
        payload = _median_payload(X)
    elif config.command == 'fsbp':
        payload = _fsbp_payload(config, X)
    elif config.command == 'attack':
        payload = _attack_payload(config, X)
    elif config.command == 'verify':
        payload = _verify_payload(config, X)
    else:
        raise ParseError(
            'The {} command prints no report.'.format(config.command)
        )
    document = {
        'command': config.command,
        'config': _echo(config),
        'dataset': None if X is None else _summary(X),
        'payload': payload,
        'version': report.tool_version(),
    }
    if config.timing:
        document['timing'] = {'seconds': time.perf_counter() - started}
    return report.check(document)


def emit_plot_data(document, directory):
    """Write each plot series of a report to ``directory/<name>.json``.

    :returns: The paths written, none for a report without series.
    """
    series = document.get('payload', {}).get('series', {})
    paths = []
    if not series:
        return paths
    os.makedirs(directory, exist_ok=True)
    for name in sorted(series):
        path = os.path.join(directory, '{}.json'.format(name))
        with open(path, 'w') as handle:
            json.dump(
                {'series': name, 'points': series[name]},
                handle, indent=2, sort_keys=True,
            )
            handle.write('\n')
        paths.append(path)
    logger.info('Wrote plot data to %s.', ', '.join(paths))
    return paths


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, 'w') as handle:
            handle.write(text)


def main(argv=None):
    """Run the command line interface and return its exit status."""
    config = parse_args(argv)
    logging.basicConfig(
        level=_LOG_LEVELS[min(config.verbose, len(_LOG_LEVELS) - 1)],
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )
    try:
        if config.command == 'gen':
            if config.gen is None:
                raise ParseError('The gen command needs --gen KIND[:N:D].')
            _write(report.dumps(dataset_document(load_dataset(config))),
                   config.out)
            return constants.EXIT_OK
        document = dispatch(config)
    except (ParseError, InvalidGenerator) as err:
        sys.stderr.write('error: {}\n'.format(err))
        return constants.EXIT_USAGE
    except TukeyFsbpError as err:
        sys.stderr.write('error: {}\n'.format(err))
        return constants.EXIT_VERIFICATION_FAILED
    _write(report.dumps(document), config.out)
    if config.plot_data:
        emit_plot_data(document, config.plot_data)
    if config.command == 'verify' and not document['payload']['passed']:
        return constants.EXIT_VERIFICATION_FAILED
    return constants.EXIT_OK
