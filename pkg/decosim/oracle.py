# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

"""
Brute-force reference for the transverse-field Ising chain: the full 2^N
matrix, exact diagonalization, and the survival and echo amplitudes built
from it. Site 1 is the most significant bit of a basis index; bit value 0
is spin up (sigma^z = +1).
"""

import numpy as np
import scipy.linalg

from dataclasses import dataclass
from typing      import Optional

from decosim.bose_hubbard     import SpectralDecomposition
from decosim.config           import DEFAULT_COUPLING, DEGENERACY_TOLERANCE, MAX_ORACLE_SPINS, NORM_TOLERANCE, \
  ORACLE_TOLERANCE, PERIODIC_ORACLE_SCALE
from decosim.decoherence      import TimeGrid, DecoherenceSeries, decoherence_series, echo_series
from decosim.errors           import InvalidParameter, DimensionTooLarge, DegenerateGroundState, \
  ConvergenceFailure
from decosim.fermion_spectrum import IsingParams, MomentumConvention, build_spectrum, build_echo_spectrum
from decosim.util             import logging


@dataclass(frozen=True)
class SpinChainMatrix:
  n_spins : int
  matrix  : np.ndarray
  lambda_ : float
  J       : float

  @property
  def dimension(self) -> int:
    return 1 << self.n_spins


@dataclass(frozen=True)
class OracleCheck:
  survival_deviation : float
  echo_deviation     : float
  tolerance          : float
  convention         : str

  @property
  def passed(self) -> bool:
    return self.survival_deviation <= self.tolerance and self.echo_deviation <= self.tolerance


def _check_size(n_spins: int):
  if int(n_spins) != n_spins or n_spins < 2:
    raise InvalidParameter('`n_spins`={} should be an integer >= 2.'.format(n_spins))
  if n_spins > MAX_ORACLE_SPINS:
    raise DimensionTooLarge('the dense oracle is limited to N <= {}, got {}.'.format(
      MAX_ORACLE_SPINS, n_spins))


def _spin_z(n_spins: int) -> np.ndarray:
  """ sigma^z eigenvalue of every site for every basis index, shape (2^N, N). """
  index = np.arange(1 << n_spins)[:, None]
  shift = np.arange(n_spins - 1, -1, -1)[None, :]
  return 1 - 2 * ((index >> shift) & 1)


def build_spin_hamiltonian(N: int, J: float = DEFAULT_COUPLING, lambda_: float = 0.0) -> SpinChainMatrix:
  """ -J (sum_i Z_i Z_{i+1} - lambda sum_i X_i) on a periodic chain.

  A negative `lambda_` gives the flipped-field Hamiltonian of the echo.
  """
  _check_size(N)
  if J <= 0:
    raise InvalidParameter('`J`={} should be positive.'.format(J))

  dimension = 1 << N
  z = _spin_z(N)
  bond = np.sum(z * np.roll(z, -1, axis=1), axis=1)
  matrix = np.diag(-J * bond.astype(float))

  index = np.arange(dimension)
  for site in range(N):
    flipped = index ^ (1 << (N - 1 - site))
    matrix[flipped, index] += J * lambda_

  return SpinChainMatrix(N, matrix, lambda_, J)


def _eigh(h: SpinChainMatrix):
  try:
    return scipy.linalg.eigh(h.matrix)
  except (np.linalg.LinAlgError, ValueError) as err:
    raise ConvergenceFailure('symmetric eigensolver failed: {}'.format(err))


def _ground(N: int, J: float, lambda0: float) -> np.ndarray:
  energies, vectors = _eigh(build_spin_hamiltonian(N, J, lambda0))
  gap = energies[1] - energies[0]
  norm = float(np.max(np.abs(energies)))
  if gap < DEGENERACY_TOLERANCE * norm:
    raise DegenerateGroundState(
      'ground state of H(lambda0={}) is degenerate (gap {:.3e}); use lambda0 >= 0.1.'.format(lambda0, gap))

  vector = vectors[:, 0]
  parity = parity_expectation(vector, N)
  if abs(abs(parity) - 1.0) > 1e-6:
    logging.warning('ground state parity {:.6f} is not sharp.'.format(parity))
  return vector


def parity_expectation(vector: np.ndarray, n_spins: int) -> float:
  """ <psi| prod_i X_i |psi>; the product of all X flips every bit. """
  vector = np.asarray(vector)
  flipped = vector[np.arange(1 << n_spins) ^ ((1 << n_spins) - 1)]
  return float(np.real(np.vdot(vector, flipped)))


def oracle_decomposition(N: int, J: float, lambda0: float, lambda1: float) -> SpectralDecomposition:
  """ LDOS of the H(lambda0) ground state in the eigenbasis of H(lambda1). """
  ground0 = _ground(N, J, lambda0)
  energies, vectors = _eigh(build_spin_hamiltonian(N, J, lambda1))
  weights = (vectors.T @ ground0) ** 2
  total = float(np.sum(weights))
  if abs(total - 1.0) > NORM_TOLERANCE:
    raise ConvergenceFailure('oracle weights sum to {:.15g}.'.format(total))
  return SpectralDecomposition(energies, weights)


def oracle_survival(N: int, J: float, lambda0: float, lambda1: float, grid: TimeGrid) -> DecoherenceSeries:
  decomp = oracle_decomposition(N, J, lambda0, lambda1)
  times = grid.times
  r = np.exp(-1j * np.outer(times, decomp.energies)) @ decomp.weights
  return DecoherenceSeries.from_amplitudes(grid, r)


def oracle_echo(N: int, J: float, lambda0: float, lambda1: float, grid: TimeGrid) -> DecoherenceSeries:
  """ <g0| e^{-i H(-lambda1) t} e^{-i H(lambda1) t} |g0> on half-segment times. """
  ground0 = _ground(N, J, lambda0)
  energies1, vectors1 = _eigh(build_spin_hamiltonian(N, J, lambda1))
  energies2, vectors2 = _eigh(build_spin_hamiltonian(N, J, -lambda1))

  times = grid.times
  a = vectors1.T @ ground0
  b = vectors2.T @ ground0
  transfer = vectors2.T @ vectors1

  first = a[:, None] * np.exp(-1j * np.outer(energies1, times))
  second = np.exp(-1j * np.outer(energies2, times)) * (transfer @ first)
  r = b @ second
  return DecoherenceSeries.from_amplitudes(grid, r)


def periodic_tolerance(N: int) -> float:
  """ default bound for the integer-momentum product against the dense chain.

  The integer momenta miss the k = 0 and k = N/2 modes and sit half a
  spacing away from the exact ones, so the product dephases from the exact
  evolution at a rate falling like 1/N. Short windows stay under the bound;
  windows of several 1/J at small N exceed it.
  """
  return PERIODIC_ORACLE_SCALE / N


def oracle_check(N: int, J: float, lambda0: float, lambda1: float, grid: TimeGrid,
                 convention='antiperiodic', tolerance: Optional[float] = None) -> OracleCheck:
  """ largest deviation of the product formulas from the dense evolution. """
  if lambda0 < 0.1:
    raise DegenerateGroundState(
      '`lambda0`={} leaves the ferromagnetic doublet degenerate; use lambda0 >= 0.1.'.format(lambda0))

  params = IsingParams(n_spins=N, lambda0=lambda0, lambda1=lambda1, coupling=J,
                       momentum_convention=convention)
  if tolerance is None:
    periodic = params.momentum_convention == MomentumConvention.PERIODIC
    tolerance = periodic_tolerance(N) if periodic else ORACLE_TOLERANCE

  product = decoherence_series(build_spectrum(params), grid)
  echo = echo_series(build_echo_spectrum(params), grid)
  survival_dev = float(np.max(np.abs(product.r - oracle_survival(N, J, lambda0, lambda1, grid).r)))
  echo_dev = float(np.max(np.abs(echo.r - oracle_echo(N, J, lambda0, lambda1, grid).r)))

  logging.info('oracle N={} lambda0={} lambda1={}: survival {:.3e}, echo {:.3e}.'.format(
    N, lambda0, lambda1, survival_dev, echo_dev))
  return OracleCheck(survival_dev, echo_dev, float(tolerance),
                     params.momentum_convention.name.lower())
