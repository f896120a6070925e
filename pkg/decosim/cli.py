# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

"""
Command line front end. Every command writes a CSV body plus a JSON
sidecar `PATH.meta.json`; timestamps live only in the sidecar.

    $ decosim ising --spins 50 --lambda1 5 --t-max 4 --steps 2000 --envelope --out ising5.csv
    $ decosim ising-echo --spins 50 --lambda1 40 --approx --out echo40.csv
    $ decosim bose-hubbard --sites 6 --bosons 6 --lambda1 20 --out bh20.csv
    $ decosim scan --model ising --spins 200 --lambda-min 0.2 --lambda-max 3 --lambda-steps 29 --out scan.csv
    $ decosim oracle-check --spins 8 --lambda0 0.2 --lambda1 5 --out oracle.json
"""

import os
import sys
import csv
import json
import math
import argparse
import datetime
import tempfile

import numpy as np

from decosim import __version__
from decosim.analysis import IsingScanBuilder, BoseHubbardScanBuilder, critical_scan, fit_series_width, \
    ldos_moments, ldos_histogram, dos_histogram, histogram_overlap, WIDTH_SOURCES
from decosim.bose_hubbard import BoseHubbardParams, BoseHubbardModel, enumerate_basis, solve_ground_state, \
    eigendecompose, spectral_weights
from decosim.config import DEFAULT_COUPLING, DEFAULT_INTERACTION, load_config_file
from decosim.decoherence import TimeGrid, decoherence_series, echo_series, cumulative_variance, \
    lindenberg_check, survival_from_spectrum, suggested_time_step, default_t_max
from decosim.errors import DecosimError, InvalidParameter, NumericalFailure, ToleranceExceeded
from decosim.fermion_spectrum import IsingParams, build_spectrum, build_echo_spectrum
from decosim.oracle import oracle_check
from decosim.util import logging, set_logger, TimeIt


FALLBACK_T_MAX = 4.0


def _bool(value):
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ('1', 'true', 'yes', 'on'):
        return True
    if text in ('0', 'false', 'no', 'off'):
        return False
    raise InvalidParameter('`{}` is not a boolean.'.format(value))


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def _atomic_write(path, write):
    """ write through a temp file in the target directory, then rename. """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(prefix='.decosim-', dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
            write(f)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def _number(value):
    return '{:.17g}'.format(float(value))


def write_csv(path, header, columns):
    rows = zip(*columns)

    def _write(f):
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([_number(v) for v in row])

    _atomic_write(path, _write)


def write_json(path, payload):
    def _write(f):
        json.dump(_jsonable(payload), f, indent=2, sort_keys=True)
        f.write('\n')

    _atomic_write(path, _write)


def _metadata(args, derived, wall_time):
    parameters = {k: v for k, v in vars(args).items()
                  if k not in ('handler', 'config', 'log_level', 'log_dir')}
    return {
        'command': args.command,
        'parameters': parameters,
        'derived': derived,
        'version': __version__,
        'created': datetime.datetime.now().isoformat(timespec='seconds'),
        'wall_time_s': wall_time,
    }


def _grid(t_max, steps, t_start=0.0):
    return TimeGrid(t_start, t_max, steps)


def _lindenberg_dict(report):
    return {'mean_cos2': report.mean_cos2, 's2': report.s2, 'ratio': report.ratio,
            'satisfied': report.satisfied, 'tilde_s2': report.tilde_s2,
            'tilde_ratio': report.tilde_ratio}


def _ising_params(args):
    return IsingParams(n_spins=args.spins, lambda0=args.lambda0, lambda1=args.lambda1,
                       coupling=args.j, momentum_convention=args.convention)


def _spectrum_derived(spectrum):
    envelope = cumulative_variance(spectrum)
    return envelope, {
        'tilde_s2': envelope.variance,
        'mean_energy': envelope.mean_energy,
        'n_spins': spectrum.params.n_spins,
        'n_modes': spectrum.n_modes,
        'excluded_momenta': list(spectrum.excluded),
        'envelope_exponent': 'N/2 applied to |cos(eps t)| and compared against abs2',
        'lindenberg': _lindenberg_dict(lindenberg_check(spectrum)),
        'suggested_dt': suggested_time_step(spectrum),
    }


def cmd_ising(args):
    spectrum = build_spectrum(_ising_params(args))
    envelope, derived = _spectrum_derived(spectrum)

    t_max = args.t_max if args.t_max is not None else (default_t_max(envelope.variance) or FALLBACK_T_MAX)
    grid = _grid(t_max, args.steps)
    if grid.dt > derived['suggested_dt']:
        logging.warning('time step {:.4g} exceeds pi/(4 max eps) = {:.4g}; fast oscillations are '
                        'under-resolved.'.format(grid.dt, derived['suggested_dt']))

    series = decoherence_series(spectrum, grid, with_envelope=args.envelope)
    header = ['t', 're_r', 'im_r', 'abs2']
    columns = [series.times, series.r.real, series.r.imag, series.abs2]
    if args.envelope:
        header.append('envelope')
        columns.append(series.envelope)

    derived.update({'t_max': t_max, 'dt': grid.dt})
    return header, columns, derived


def cmd_ising_echo(args):
    params = _ising_params(args)
    spectrum = build_spectrum(params)
    echo = build_echo_spectrum(params)
    envelope, derived = _spectrum_derived(spectrum)

    # --t-max is the total time 2t
    t_total = args.t_max if args.t_max is not None else (default_t_max(envelope.variance) or FALLBACK_T_MAX)
    grid = _grid(0.5 * t_total, args.steps)

    series = echo_series(echo, grid, with_approximation=args.approx, spectrum=spectrum)
    header = ['t_total', 're_r', 'im_r', 'abs2']
    columns = [2.0 * series.times, series.r.real, series.r.imag, series.abs2]
    if args.approx:
        header.append('approx')
        columns.append(series.envelope)

    derived.update({'t_max_total': t_total, 'time_axis': 't_total = 2t, t the half-segment time'})
    return header, columns, derived


def cmd_bose_hubbard(args):
    params0 = BoseHubbardParams(args.sites, args.bosons, args.lambda0, args.u, args.boundary)
    basis = enumerate_basis(args.sites, args.bosons)
    model = BoseHubbardModel(params0, basis)
    ground = solve_ground_state(params0, basis, model=model)

    hamiltonian = model.hamiltonian(args.lambda1)
    energies, vectors = eigendecompose(hamiltonian)
    decomp = spectral_weights(ground.vector, energies, vectors)
    mean, variance = ldos_moments(decomp)

    if args.t_max is not None:
        t_max = args.t_max
    else:
        # the LDOS variance sets the initial drop, u the revival envelope
        t_max = max(default_t_max(variance) or 0.0, default_t_max(args.u ** 2))
    grid = _grid(t_max, args.steps)
    series = survival_from_spectrum(decomp, grid)

    derived = {
        'dimension': len(basis),
        'ground_energy': ground.energy,
        'ground_gap': ground.gap,
        'ground_degenerate': ground.degenerate,
        'ldos_mean': mean,
        'ldos_variance': variance,
        't_max': t_max,
    }
    try:
        fit = fit_series_width(series)
        derived.update({'fitted_width2': fit.width2, 'fitted_mean_freq': fit.mean_freq,
                        'fit_rms_log_residual': fit.rms_log_residual, 'fit_peaks': fit.n_peaks_used})
    except NumericalFailure as err:
        logging.warning('envelope fit failed: {}'.format(err))
        derived['fit_error'] = str(err)

    if args.dos_bins:
        e_range = (float(energies[0]), float(energies[-1]))
        ldos = ldos_histogram(decomp, args.dos_bins)
        dos = dos_histogram(energies, args.dos_bins, e_range)
        derived['ldos_dos_overlap'] = histogram_overlap(ldos, dos)

    write_csv(args.out + '.ldos.csv', ['E', 'weight'], [decomp.energies, decomp.weights])
    return ['t', 're_r', 'im_r', 'abs2'], [series.times, series.r.real, series.r.imag, series.abs2], derived


def _scan_builder(args):
    if args.model == 'ising':
        return IsingScanBuilder(args.spins, args.lambda0, args.j, args.convention)
    return BoseHubbardScanBuilder(args.sites, args.bosons, args.u, args.lambda0, args.boundary)


def cmd_scan(args):
    if args.lambda_steps < 5:
        raise InvalidParameter('a scan needs at least 5 couplings, got {}.'.format(args.lambda_steps))
    if args.log_grid:
        if args.lambda_min <= 0:
            raise InvalidParameter('a logarithmic grid needs --lambda-min > 0.')
        lambdas = np.geomspace(args.lambda_min, args.lambda_max, args.lambda_steps)
    else:
        lambdas = np.linspace(args.lambda_min, args.lambda_max, args.lambda_steps)

    result = critical_scan(_scan_builder(args), lambdas, _grid(args.t_max, args.steps), args.probe_time,
                           width_source=args.width_source, workers=args.workers)
    derived = {
        'lambda_c_estimate': result.lambda_c_estimate,
        'estimator': 'midpoint of the steepest finite-difference rise of width2(lambda)',
        'confident': result.confident,
        'width_source': result.width_source,
        'probe_minimum': result.probe_minimum,
        'fitted_widths': result.fitted_widths,
        'predicted_widths': result.predicted_widths,
        'failures': result.failures,
    }
    return ['lambda', 'width2', 'probe_abs2'], [result.lambdas, result.widths, result.probe_decay], derived


def cmd_oracle_check(args):
    grid = _grid(args.t_max, args.steps)
    check = oracle_check(args.spins, args.j, args.lambda0, args.lambda1, grid,
                         convention=args.convention, tolerance=args.tolerance)
    report = {
        'survival_deviation': check.survival_deviation,
        'echo_deviation': check.echo_deviation,
        'tolerance': check.tolerance,
        'convention': check.convention,
        'passed': check.passed,
    }
    return report


_COMMANDS = {
    'ising': cmd_ising,
    'ising-echo': cmd_ising_echo,
    'bose-hubbard': cmd_bose_hubbard,
    'scan': cmd_scan,
    'oracle-check': cmd_oracle_check,
}


def _add_ising_flags(parser, spins=50, lambda0=0.0, lambda1=5.0):
    parser.add_argument('--spins', type=int, default=spins, help='chain length N')
    parser.add_argument('--j', type=float, default=DEFAULT_COUPLING, help='Ising coupling J')
    parser.add_argument('--lambda0', type=float, default=lambda0)
    parser.add_argument('--lambda1', type=float, default=lambda1)
    parser.add_argument('--convention', choices=['antiperiodic', 'periodic', 'paper'], default='antiperiodic')


def _add_bose_hubbard_flags(parser):
    parser.add_argument('--sites', type=int, default=6)
    parser.add_argument('--bosons', type=int, default=6)
    parser.add_argument('--u', type=float, default=DEFAULT_INTERACTION, help='on-site interaction')
    parser.add_argument('--boundary', choices=['periodic', 'open'], default='periodic')


def _add_grid_flags(parser, t_max=None, steps=2000):
    parser.add_argument('--t-max', type=float, default=t_max)
    parser.add_argument('--steps', type=int, default=steps, help='number of grid points')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', default=None, help='key = value file of flag defaults')
    common.add_argument('--log-level', default='INFO')
    common.add_argument('--log-dir', default=None, help='directory for rotating log files')

    parser = argparse.ArgumentParser(
        prog='decosim', description='decoherence of a qubit coupled to a critical environment')
    parser.add_argument('--version', action='version', version='decosim ' + __version__)
    subparsers = parser.add_subparsers(dest='command', required=True)

    p = subparsers.add_parser('ising', parents=[common], help='survival amplitude of the Ising chain')
    _add_ising_flags(p)
    _add_grid_flags(p)
    p.add_argument('--envelope', type=_bool, nargs='?', const=True, default=False)
    p.add_argument('--out', required=True)

    p = subparsers.add_parser('ising-echo', parents=[common], help='echo overlap of the Ising chain')
    _add_ising_flags(p)
    _add_grid_flags(p)
    p.add_argument('--approx', type=_bool, nargs='?', const=True, default=False)
    p.add_argument('--out', required=True)

    p = subparsers.add_parser('bose-hubbard', parents=[common], help='survival amplitude of the Bose-Hubbard chain')
    _add_bose_hubbard_flags(p)
    p.add_argument('--lambda0', type=float, default=0.0)
    p.add_argument('--lambda1', type=float, default=20.0)
    _add_grid_flags(p)
    p.add_argument('--dos-bins', type=int, default=0)
    p.add_argument('--out', required=True)

    p = subparsers.add_parser('scan', parents=[common], help='critical point scan over lambda')
    p.add_argument('--model', choices=['ising', 'bose-hubbard'], default='ising')
    _add_ising_flags(p, spins=200, lambda1=0.0)
    _add_bose_hubbard_flags(p)
    p.add_argument('--lambda-min', type=float, default=0.2)
    p.add_argument('--lambda-max', type=float, default=3.0)
    p.add_argument('--lambda-steps', type=int, default=29)
    p.add_argument('--log-grid', type=_bool, nargs='?', const=True, default=False)
    p.add_argument('--probe-time', type=float, default=1.0)
    _add_grid_flags(p, t_max=2.0, steps=2001)
    p.add_argument('--width-source', choices=list(WIDTH_SOURCES), default='auto')
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--out', required=True)

    p = subparsers.add_parser('oracle-check', parents=[common], help='compare product formulas with brute force')
    _add_ising_flags(p, spins=8, lambda0=0.2, lambda1=5.0)
    _add_grid_flags(p, t_max=4.0, steps=401)
    p.add_argument('--tolerance', type=float, default=None)
    p.add_argument('--out', required=True)

    return parser, subparsers


def _apply_config(parser, subparsers, args, argv):
    options = load_config_file(args.config)
    subparser = subparsers.choices[args.command]
    known = {action.dest for action in subparser._actions}
    unknown = sorted(set(options) - known)
    if unknown:
        raise InvalidParameter('unknown config keys for `{}`: {}'.format(args.command, ', '.join(unknown)))
    subparser.set_defaults(**options)
    return parser.parse_args(argv)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser, subparsers = build_parser()

    try:
        args = parser.parse_args(argv)
        set_logger(level=args.log_level, log_dir_name=args.log_dir)
        if args.config is not None:
            args = _apply_config(parser, subparsers, args, argv)

        with TimeIt(args.command, verbose=False) as ti:
            result = _COMMANDS[args.command](args)
            wall_time = ti.break_point(restart=False)

        if args.command == 'oracle-check':
            write_json(args.out, dict(result, **_metadata(args, {}, wall_time)))
            if not result['passed']:
                raise ToleranceExceeded('deviation (survival {:.3e}, echo {:.3e}) above tolerance {:.3e}.'.format(
                    result['survival_deviation'], result['echo_deviation'], result['tolerance']))
        else:
            header, columns, derived = result
            write_csv(args.out, header, columns)
            write_json(args.out + '.meta.json', _metadata(args, derived, wall_time))

        logging.info('{} finished in {:.3f} s, wrote {}.'.format(args.command, wall_time, args.out))
        return 0

    except DecosimError as err:
        logging.error('{}: {}'.format(type(err).__name__, err))
        return err.exit_code


if __name__ == '__main__':
    sys.exit(main())
