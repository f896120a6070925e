# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

import math
import numpy as np

from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

from decosim.bose_hubbard import SpectralDecomposition, BoseHubbardParams, BoseHubbardModel, \
    enumerate_basis, solve_ground_state, eigendecompose, spectral_weights
from decosim.config import DEFAULT_COUPLING, DEFAULT_INTERACTION, FIT_FLOOR, NORM_TOLERANCE, PEAK_VALUE_MIN
from decosim.decoherence import TimeGrid, DecoherenceSeries, decoherence_series, cumulative_variance, \
    survival_from_spectrum
from decosim.errors import InvalidParameter, NumericalFailure, TooFewPeaks, DegenerateFit, \
    UnnormalizedWeights
from decosim.fermion_spectrum import IsingParams, build_spectrum
from decosim.util import logging


WIDTH_SOURCES = ('fit', 'predicted', 'auto')


@dataclass(frozen=True)
class GaussianFit:
    width2: float
    mean_freq: float
    rms_log_residual: float
    n_peaks_used: int


@dataclass
class CriticalScanResult:
    lambdas: np.ndarray
    widths: np.ndarray
    probe_decay: np.ndarray
    lambda_c_estimate: float
    fitted_widths: np.ndarray
    predicted_widths: np.ndarray
    width_source: str
    probe_minimum: float
    confident: bool
    failures: Dict[float, str] = field(default_factory=dict)


@dataclass
class ScanSample:
    series: DecoherenceSeries
    predicted_width: Optional[float] = None


def extract_envelope(series: DecoherenceSeries) -> List[Tuple[float, float]]:
    """ first point plus the strict local maxima of |r|^2, times ascending. """
    abs2 = np.asarray(series.abs2)
    times = series.times
    if abs2.size < 3:
        raise TooFewPeaks('a series of {} points has no interior maxima.'.format(abs2.size))

    interior = np.flatnonzero((abs2[1:-1] > abs2[:-2]) & (abs2[1:-1] > abs2[2:])) + 1
    if interior.size < 3:
        raise TooFewPeaks('only {} maxima found; extend or refine the grid.'.format(interior.size))

    points = [(float(times[0]), float(abs2[0]))]
    points.extend((float(times[i]), float(abs2[i])) for i in interior)
    return points


def _dominance_radius(times: np.ndarray, values: np.ndarray, i: int) -> float:
    higher = values > values[i]
    if not np.any(higher):
        return math.inf
    return float(np.min(np.abs(times[higher] - times[i])))


def _select_peak_train(times: np.ndarray, values: np.ndarray, floor: float) -> List[int]:
    """ walk the peaks one oscillation period at a time from the first point.

    The period is the distance from the highest non-initial peak to the
    nearest higher one. Each step takes the highest peak in (0.75, 1.25]
    periods ahead; the walk ends when none is found, when the train rises,
    or when it drops under `floor`.
    """
    best = 1 + int(np.argmax(values[1:]))
    period = _dominance_radius(times, values, best)

    chosen = [0]
    current = 0
    while True:
        if math.isfinite(period):
            window = np.flatnonzero((times > times[current] + 0.75 * period)
                                    & (times <= times[current] + 1.25 * period))
            if window.size == 0:
                break
            candidate = int(window[np.argmax(values[window])])
        else:
            candidate = current + 1
            if candidate >= times.size:
                break

        if values[candidate] > values[current] or values[candidate] < floor:
            break
        chosen.append(candidate)
        current = candidate

    return chosen


def fit_gaussian_width(envelope: Sequence[Tuple[float, float]], floor: float = PEAK_VALUE_MIN) -> GaussianFit:
    """ least-squares line through (t^2, log value) of a decaying peak train.

    Params:
        envelope: (time, value) pairs, e.g. from `extract_envelope`
        floor: peaks below this value end the train; `fit_series_width` raises it
            above the fluctuation plateau of a sampled series

    Return:
        GaussianFit with width2 = -slope (clipped at 0) and mean_freq = pi / mean spacing

    When failure:
        DegenerateFit if all times coincide, TooFewPeaks if fewer than three
        peaks form the train.
    """
    points = sorted((float(t), float(v)) for t, v in envelope if v > PEAK_VALUE_MIN)
    if len(points) >= 2 and points[0][0] == points[-1][0]:
        raise DegenerateFit('all {} envelope points share t={}.'.format(len(points), points[0][0]))
    if len(points) < 3:
        raise TooFewPeaks('{} usable envelope points, need 3.'.format(len(points)))

    times = np.array([p[0] for p in points])
    values = np.array([p[1] for p in points])
    chosen = _select_peak_train(times, values, floor)
    if len(chosen) < 3:
        raise TooFewPeaks('the peak train has {} points above the floor {:.3g}, need 3.'.format(
            len(chosen), floor))

    t = times[chosen]
    log_value = np.log(values[chosen])
    slope, intercept = np.polyfit(t ** 2, log_value, 1)
    residual = log_value - (slope * t ** 2 + intercept)

    return GaussianFit(
        width2=max(0.0, -float(slope)),
        mean_freq=float(math.pi / np.mean(np.diff(t))),
        rms_log_residual=float(np.sqrt(np.mean(residual ** 2))),
        n_peaks_used=len(chosen))


def fit_series_width(series: DecoherenceSeries) -> GaussianFit:
    """ envelope fit with the floor raised above the late-time plateau. """
    abs2 = np.asarray(series.abs2)
    times = series.times
    late = abs2[times >= 0.5 * (times[0] + times[-1])]
    plateau = float(np.mean(late)) if late.size else 0.0
    return fit_gaussian_width(extract_envelope(series), floor=max(FIT_FLOOR, 4.0 * plateau))


def _check_weights(decomp: SpectralDecomposition):
    total = float(np.sum(decomp.weights))
    if abs(total - 1.0) > NORM_TOLERANCE:
        raise UnnormalizedWeights('spectral weights sum to {:.15g}, expected 1.'.format(total))


def ldos_moments(decomp: SpectralDecomposition) -> Tuple[float, float]:
    _check_weights(decomp)
    mean = float(np.dot(decomp.weights, decomp.energies))
    variance = float(np.dot(decomp.weights, (decomp.energies - mean) ** 2))
    return mean, variance


def _histogram(energies, weights, n_bins: int, e_range=None) -> List[Tuple[float, float]]:
    if int(n_bins) != n_bins or n_bins < 1:
        raise InvalidParameter('`n_bins`={} should be a positive integer.'.format(n_bins))
    if e_range is None:
        e_range = (float(np.min(energies)), float(np.max(energies)))
    counts, edges = np.histogram(energies, bins=int(n_bins), range=e_range, weights=weights)
    centers = 0.5 * (edges[:-1] + edges[1:])
    return [(float(c), float(w)) for c, w in zip(centers, counts)]


def ldos_histogram(decomp: SpectralDecomposition, n_bins: int) -> List[Tuple[float, float]]:
    return _histogram(decomp.energies, decomp.weights, n_bins)


def dos_histogram(energies, n_bins: int, e_range=None) -> List[Tuple[float, float]]:
    """ density of states of a full spectrum, normalized to unit weight. """
    energies = np.asarray(energies, dtype=float)
    weights = np.full(energies.size, 1.0 / energies.size)
    return _histogram(energies, weights, n_bins, e_range)


def histogram_overlap(p: Sequence[Tuple[float, float]], q: Sequence[Tuple[float, float]]) -> float:
    """ Bhattacharyya coefficient of two histograms on the same bins. """
    if len(p) != len(q):
        raise InvalidParameter('histograms have {} and {} bins.'.format(len(p), len(q)))
    a = np.clip([w for _, w in p], 0.0, None)
    b = np.clip([w for _, w in q], 0.0, None)
    return float(np.sum(np.sqrt(a * b)))


def short_time_coefficient(series: DecoherenceSeries, window: float) -> float:
    """ c in 1 - |r|^2 ~ c t^2, least squares over 0 < t <= window. """
    times = series.times
    mask = (times > 0) & (times <= window)
    if np.count_nonzero(mask) < 2:
        raise InvalidParameter('the short-time window {} holds fewer than 2 grid points.'.format(window))
    x = times[mask] ** 2
    y = 1.0 - np.asarray(series.abs2)[mask]
    return float(np.dot(x, y) / np.dot(x, x))


@dataclass(frozen=True)
class IsingScanBuilder:
    """ survival series of the Ising chain for a quench lambda0 -> lambda. """
    n_spins: int
    lambda0: float = 0.0
    coupling: float = DEFAULT_COUPLING
    convention: str = 'antiperiodic'

    def __call__(self, lam: float, grid: TimeGrid) -> ScanSample:
        params = IsingParams(n_spins=self.n_spins, lambda0=self.lambda0, lambda1=lam,
                             coupling=self.coupling, momentum_convention=self.convention)
        spectrum = build_spectrum(params)
        return ScanSample(decoherence_series(spectrum, grid), cumulative_variance(spectrum).variance)


@dataclass(frozen=True)
class BoseHubbardScanBuilder:
    """ survival series of the Bose-Hubbard chain for a quench lambda0 -> lambda. """
    n_sites: int
    n_bosons: int
    interaction: float = DEFAULT_INTERACTION
    lambda0: float = 0.0
    boundary: str = 'periodic'

    def __call__(self, lam: float, grid: TimeGrid) -> ScanSample:
        params0 = BoseHubbardParams(self.n_sites, self.n_bosons, self.lambda0, self.interaction, self.boundary)
        basis = enumerate_basis(self.n_sites, self.n_bosons)
        model = BoseHubbardModel(params0, basis)
        ground = solve_ground_state(params0, basis, model=model)
        energies, vectors = eigendecompose(model.hamiltonian(lam))
        decomp = spectral_weights(ground.vector, energies, vectors)
        return ScanSample(survival_from_spectrum(decomp, grid), None)


def _scan_point(task):
    builder, lam, grid, probe_time = task
    try:
        sample = builder(lam, grid)
    except NumericalFailure as err:
        return lam, math.nan, None, math.nan, str(err)

    probe = float(np.interp(probe_time, sample.series.times, sample.series.abs2))
    try:
        fitted = fit_series_width(sample.series).width2
        failure = None
    except NumericalFailure as err:
        fitted = math.nan
        failure = str(err)
    return lam, fitted, sample.predicted_width, probe, failure


def _steepest_interval(lambdas: np.ndarray, widths: np.ndarray):
    best = None
    for i in range(lambdas.size - 1):
        if not (np.isfinite(widths[i]) and np.isfinite(widths[i + 1])):
            continue
        slope = (widths[i + 1] - widths[i]) / (lambdas[i + 1] - lambdas[i])
        if best is None or slope > best[1]:
            best = (i, slope)
    return best


def critical_scan(builder, lambda_grid: Sequence[float], grid: TimeGrid, probe_time: float,
                  width_source: str = 'auto', workers: int = 1) -> CriticalScanResult:
    """ locate the transition from the steepest rise of the envelope width.

    Params:
        builder: callable (lam, grid) -> ScanSample, picklable when workers > 1
        lambda_grid: at least 5 strictly ascending couplings
        probe_time: time at which |r|^2 is recorded for every coupling
        width_source: `fit`, `predicted`, or `auto` (predicted when the
            builder provides it, fitted otherwise)

    Return:
        CriticalScanResult; lambda_c_estimate is the midpoint of the interval
        with the largest finite-difference slope of the width curve.
    """
    lambdas = np.asarray(lambda_grid, dtype=float)
    if lambdas.ndim != 1 or lambdas.size < 5:
        raise InvalidParameter('a scan needs at least 5 couplings, got {}.'.format(lambdas.size))
    if not np.all(np.isfinite(lambdas)) or np.any(np.diff(lambdas) <= 0):
        raise InvalidParameter('scan couplings should be finite and strictly ascending.')
    if not grid.t_start <= probe_time <= grid.t_end:
        raise InvalidParameter('probe time {} lies outside [{}, {}].'.format(probe_time, grid.t_start, grid.t_end))
    if width_source not in WIDTH_SOURCES:
        raise InvalidParameter('`width_source`={} should be one of {}.'.format(width_source, WIDTH_SOURCES))

    tasks = [(builder, float(lam), grid, probe_time) for lam in lambdas]
    if workers > 1:
        with Pool(workers) as pool:
            points = list(pool.imap(_scan_point, tasks))
    else:
        points = [_scan_point(task) for task in tasks]
    points.sort(key=lambda point: point[0])

    fitted = np.array([p[1] for p in points])
    has_prediction = any(p[2] is not None for p in points)
    predicted = np.array([p[2] if p[2] is not None else math.nan for p in points])
    probe = np.array([p[3] for p in points])
    failures = {p[0]: p[4] for p in points if p[4] is not None}

    if width_source == 'auto':
        width_source = 'predicted' if has_prediction else 'fit'
    if width_source == 'predicted' and not np.any(np.isfinite(predicted)):
        raise InvalidParameter('this builder does not predict widths; use `fit`.')
    widths = predicted if width_source == 'predicted' else fitted

    steepest = _steepest_interval(lambdas, widths)
    if steepest is None:
        raise NumericalFailure('no two neighbouring couplings have a width; {} failures.'.format(len(failures)))
    i, slope = steepest
    lambda_c = 0.5 * (lambdas[i] + lambdas[i + 1])
    confident = bool(0 < i < lambdas.size - 2 and slope > 0)

    probe_minimum = float(lambdas[np.nanargmin(probe)]) if np.any(np.isfinite(probe)) else math.nan

    logging.info('scan of {} couplings: lambda_c ~ {:.4g} ({} widths, {} failures, confident={}).'.format(
        lambdas.size, lambda_c, width_source, len(failures), confident))
    return CriticalScanResult(
        lambdas=lambdas, widths=widths, probe_decay=probe, lambda_c_estimate=float(lambda_c),
        fitted_widths=fitted, predicted_widths=predicted, width_source=width_source,
        probe_minimum=probe_minimum, confident=confident, failures=failures)
