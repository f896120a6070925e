# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

import math
import numpy as np

from dataclasses import dataclass
from typing      import Optional, TYPE_CHECKING

from decosim.config           import LOG_PRODUCT_THRESHOLD, NORM_TOLERANCE
from decosim.errors           import InvalidParameter, DivideByZero, UnnormalizedWeights
from decosim.fermion_spectrum import BogoliubovSpectrum, EchoSpectrum
from decosim.util             import logging

if TYPE_CHECKING:
  from decosim.bose_hubbard import SpectralDecomposition


@dataclass(frozen=True)
class TimeGrid:
  t_start  : float
  t_end    : float
  n_points : int

  def __post_init__(self):
    if int(self.n_points) != self.n_points or self.n_points < 2:
      raise InvalidParameter('a time grid needs at least 2 points, got {}.'.format(self.n_points))
    object.__setattr__(self, 'n_points', int(self.n_points))
    if not (math.isfinite(self.t_start) and math.isfinite(self.t_end)):
      raise InvalidParameter('time grid bounds should be finite.')
    if self.t_start < 0:
      raise InvalidParameter('`t_start`={} should be >= 0.'.format(self.t_start))
    if self.t_end <= self.t_start:
      raise InvalidParameter('`t_end`={} should exceed `t_start`={}.'.format(self.t_end, self.t_start))

  @property
  def dt(self) -> float:
    return (self.t_end - self.t_start) / (self.n_points - 1)

  @property
  def times(self) -> np.ndarray:
    return np.linspace(self.t_start, self.t_end, self.n_points)


@dataclass
class DecoherenceSeries:
  grid     : TimeGrid
  r        : np.ndarray
  abs2     : np.ndarray
  envelope : Optional[np.ndarray] = None

  @property
  def times(self) -> np.ndarray:
    return self.grid.times

  @classmethod
  def from_amplitudes(cls, grid: TimeGrid, r: np.ndarray,
                      envelope: Optional[np.ndarray] = None) -> 'DecoherenceSeries':
    r = np.asarray(r, dtype=complex)
    if r.shape != (grid.n_points,):
      raise InvalidParameter('{} amplitudes for a grid of {} points.'.format(r.size, grid.n_points))
    return cls(grid, r, np.abs(r) ** 2, envelope)


@dataclass(frozen=True)
class EnvelopeParams:
  variance    : float   # s~_N^2
  mean_energy : float
  n_spins     : int
  n_modes     : int


@dataclass(frozen=True)
class LindenbergReport:
  mean_cos2   : float
  s2          : float
  ratio       : float
  satisfied   : bool
  tilde_s2    : float
  tilde_ratio : float


def _times(t) -> np.ndarray:
  return np.atleast_1d(np.asarray(t, dtype=float))


def _accumulate(factors: np.ndarray, log_path: bool) -> np.ndarray:
  """ product over the mode axis (last) of complex factors. """
  if not log_path:
    return np.prod(factors, axis=-1)

  with np.errstate(divide='ignore'):
    log_modulus = np.sum(np.log(np.abs(factors)), axis=-1)
  phase = np.sum(np.angle(factors), axis=-1)
  return np.exp(log_modulus) * np.exp(1j * phase)


def _use_log_path(n_spins: int, log_path: Optional[bool]) -> bool:
  if log_path is None:
    return n_spins > LOG_PRODUCT_THRESHOLD
  return bool(log_path)


def product_amplitudes(spectrum: BogoliubovSpectrum, times, log_path: Optional[bool] = None) -> np.ndarray:
  """ decoherence factor on an array of times.

  Each mode contributes cos^2(a) e^{i e t} + sin^2(a) e^{-i e t}, written as
  cos(e t) + i cos(2a) sin(e t) so that the factor is exactly 1 at t = 0.
  """
  t = _times(times)
  if spectrum.n_modes == 0:
    return np.ones(t.shape, dtype=complex)

  phase = np.outer(t, spectrum.epsilon1)
  factors = np.cos(phase) + 1j * np.cos(2.0 * spectrum.alpha) * np.sin(phase)
  return _accumulate(factors, _use_log_path(spectrum.params.n_spins, log_path))


def decoherence_factor(spectrum: BogoliubovSpectrum, t: float) -> complex:
  return complex(product_amplitudes(spectrum, [t])[0])


def cumulative_variance(spectrum: BogoliubovSpectrum) -> EnvelopeParams:
  if spectrum.n_modes == 0:
    raise InvalidParameter('the spectrum has no modes.')

  mean_energy = float(np.mean(spectrum.epsilon1))
  delta = spectrum.epsilon1 - mean_energy
  variance = float(np.sum(np.sin(2.0 * spectrum.alpha) ** 2 * delta ** 2))
  return EnvelopeParams(variance, mean_energy, spectrum.params.n_spins, spectrum.n_modes)


def envelope_curve(envelope: EnvelopeParams, times) -> np.ndarray:
  """ exp(-s~^2 t^2) |cos(e t)|^{N/2}, compared against |r|^2. """
  t = _times(times)
  oscillation = np.abs(np.cos(envelope.mean_energy * t)) ** (envelope.n_spins / 2.0)
  return np.exp(-envelope.variance * t ** 2) * oscillation


def lindenberg_check(spectrum: BogoliubovSpectrum) -> LindenbergReport:
  if spectrum.n_modes == 0:
    raise InvalidParameter('the spectrum has no modes.')

  weight = np.sin(2.0 * spectrum.alpha) ** 2
  mean_cos2 = float(np.mean(np.cos(spectrum.alpha) ** 2))
  s2 = float(np.sum(weight * spectrum.epsilon1 ** 2))

  envelope = cumulative_variance(spectrum)
  mean_sq = envelope.mean_energy ** 2
  ratio = s2 / mean_sq if mean_sq > 0 else math.inf
  tilde_ratio = envelope.variance / mean_sq if mean_sq > 0 else math.inf

  satisfied = abs(mean_cos2 - 0.5) < 0.1 and s2 > 10.0 * mean_sq
  return LindenbergReport(mean_cos2, s2, ratio, bool(satisfied), envelope.variance, tilde_ratio)


def decoherence_series(spectrum: BogoliubovSpectrum, grid: TimeGrid,
                       with_envelope: bool = False, log_path: Optional[bool] = None) -> DecoherenceSeries:
  times = grid.times
  r = product_amplitudes(spectrum, times, log_path=log_path)

  envelope = None
  if with_envelope:
    envelope = envelope_curve(cumulative_variance(spectrum), times)

  logging.debug('evaluated {} points over {} modes.'.format(grid.n_points, spectrum.n_modes))
  return DecoherenceSeries.from_amplitudes(grid, r, envelope)


def echo_amplitudes(echo: EchoSpectrum, times, log_path: Optional[bool] = None) -> np.ndarray:
  """ echo overlap <g0| e^{-i H_{-1} t} e^{-i H_1 t} |g0> on half-segment times. """
  t = _times(times)
  if echo.n_modes == 0:
    return np.ones(t.shape, dtype=complex)

  cos_minus = np.cos(echo.alpha_minus)
  sin_minus = np.sin(echo.alpha_minus)
  cos2_minus = cos_minus ** 2
  sin2_minus = 1.0 - cos2_minus
  cross_plus = cos_minus * np.cos(echo.alpha_plus)
  cross_minus = sin_minus * np.sin(echo.alpha_plus)

  phase_plus = np.outer(t, echo.epsilon_plus)
  phase_minus = np.outer(t, echo.epsilon_minus)
  factors = (np.cos(phase_plus) * cos2_minus + np.cos(phase_minus) * sin2_minus
             + 1j * (np.sin(phase_plus) * cross_plus + np.sin(phase_minus) * cross_minus))
  return _accumulate(factors, _use_log_path(echo.params.n_spins, log_path))


def echo_factor(echo: EchoSpectrum, t: float) -> complex:
  return complex(echo_amplitudes(echo, [t])[0])


def oscillation_kernel(echo: EchoSpectrum, t) -> np.ndarray:
  """ K(t) = 2 sum_k sin(eps_k^- t) cos(phi_k) sin^2(phi_k). """
  times = _times(t)
  weight = np.cos(echo.momentum) * np.sin(echo.momentum) ** 2
  kernel = 2.0 * np.sin(np.outer(times, echo.epsilon_minus)) @ weight
  if np.ndim(t) == 0:
    return float(kernel[0])
  return kernel


def echo_approximation(spectrum: BogoliubovSpectrum, echo: EchoSpectrum, t):
  """ large-lambda form of |r_echo|^2 at half-segment time t:

      exp(-s~^2 (2t)^2) (1 - K(t)/lambda1 sin(4 J lambda1 t))

  i.e. the Gaussian in the total time 2t and the residual oscillation at the
  frequency 4 J lambda1 of eps^+.
  """
  lambda1 = spectrum.params.lambda1
  if lambda1 == 0:
    raise DivideByZero('the echo approximation needs lambda1 > 0.')

  times = _times(t)
  variance = cumulative_variance(spectrum).variance
  J = spectrum.params.coupling
  kernel = oscillation_kernel(echo, times)
  value = np.exp(-variance * (2.0 * times) ** 2) * (
    1.0 - kernel / lambda1 * np.sin(4.0 * J * lambda1 * times))
  if np.ndim(t) == 0:
    return float(value[0])
  return value


def echo_series(echo: EchoSpectrum, grid: TimeGrid, with_approximation: bool = False,
                spectrum: Optional[BogoliubovSpectrum] = None,
                log_path: Optional[bool] = None) -> DecoherenceSeries:
  """ echo overlap on a grid of half-segment times; the large-lambda
  approximation, when requested, fills the envelope column.
  """
  times = grid.times
  r = echo_amplitudes(echo, times, log_path=log_path)

  approximation = None
  if with_approximation:
    if spectrum is None:
      raise InvalidParameter('the echo approximation needs the forward spectrum.')
    approximation = echo_approximation(spectrum, echo, times)

  return DecoherenceSeries.from_amplitudes(grid, r, approximation)


def survival_from_spectrum(decomp: 'SpectralDecomposition', grid: TimeGrid) -> DecoherenceSeries:
  """ r(t) = sum_n p_n exp(-i E_n t), the Fourier transform of the LDOS. """
  weights = np.asarray(decomp.weights, dtype=float)
  energies = np.asarray(decomp.energies, dtype=float)
  total = float(np.sum(weights))
  if abs(total - 1.0) > NORM_TOLERANCE:
    raise UnnormalizedWeights('spectral weights sum to {:.15g}, expected 1.'.format(total))

  times = grid.times
  r = np.exp(-1j * np.outer(times, energies)) @ weights
  return DecoherenceSeries.from_amplitudes(grid, r)


def suggested_time_step(spectrum: BogoliubovSpectrum) -> float:
  """ largest step resolving the fastest mode, pi / (4 max eps). """
  top = float(np.max(spectrum.epsilon1)) if spectrum.n_modes else 0.0
  if top <= 0:
    return math.inf
  return math.pi / (4.0 * top)


def default_t_max(variance: float, level: float = 1e-4) -> Optional[float]:
  """ time at which exp(-variance t^2) falls to `level`; None when the
  variance vanishes.
  """
  if variance <= 0:
    return None
  return math.sqrt(-math.log(level) / variance)
