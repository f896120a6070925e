# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

import math
import numpy as np

from dataclasses import dataclass, field
from enum        import IntEnum
from typing      import Tuple, Union

from decosim.config import DEFAULT_COUPLING
from decosim.errors import InvalidParameter, SingularAngle


_SINGULAR_ATOL = 1e-14
_CONVENTION_ALIASES = {'PAPER': 'PERIODIC'}


class MomentumConvention(IntEnum):
  PERIODIC     = 0    # phi_k = 2 pi k / N
  ANTIPERIODIC = 1    # phi_m = pi (2m - 1) / N

  @classmethod
  def parse(cls, value: Union[str, int, 'MomentumConvention']) -> 'MomentumConvention':
    if isinstance(value, cls):
      return value
    if isinstance(value, str):
      key = value.strip().upper().replace('-', '_')
      key = _CONVENTION_ALIASES.get(key, key)
      if key in cls.__members__:
        return cls[key]
      raise InvalidParameter('momentum convention `{}` is invalid, use `paper`, `periodic` or `antiperiodic`.'.format(value))
    try:
      return cls(value)
    except ValueError:
      raise InvalidParameter('momentum convention `{}` is invalid.'.format(value))


@dataclass(frozen=True)
class IsingParams:
  n_spins             : int
  lambda0             : float
  lambda1             : float
  coupling            : float              = DEFAULT_COUPLING
  momentum_convention : MomentumConvention = MomentumConvention.ANTIPERIODIC

  def __post_init__(self):
    object.__setattr__(self, 'momentum_convention',
                       MomentumConvention.parse(self.momentum_convention))
    if int(self.n_spins) != self.n_spins or self.n_spins < 2:
      raise InvalidParameter('`n_spins`={} should be an integer >= 2.'.format(self.n_spins))
    object.__setattr__(self, 'n_spins', int(self.n_spins))
    if not math.isfinite(self.coupling) or self.coupling <= 0:
      raise InvalidParameter('`coupling`={} should be positive.'.format(self.coupling))
    for name in ('lambda0', 'lambda1'):
      value = getattr(self, name)
      if not math.isfinite(value) or value < 0:
        raise InvalidParameter('`{}`={} should be finite and >= 0.'.format(name, value))

  def with_lambda1(self, lambda1: float) -> 'IsingParams':
    return IsingParams(self.n_spins, self.lambda0, lambda1,
                       self.coupling, self.momentum_convention)


@dataclass(frozen=True)
class ModePair:
  index    : int
  momentum : float
  epsilon0 : float
  epsilon1 : float
  theta0   : float
  theta1   : float
  alpha    : float


@dataclass(frozen=True)
class BogoliubovSpectrum:
  """ quasiparticle energies and mixing angles of the pair (H_lambda0, H_lambda1).

  Array attributes are aligned with `modes`; they are what the evaluators use.
  """
  params   : IsingParams
  momentum : np.ndarray
  epsilon0 : np.ndarray
  epsilon1 : np.ndarray
  theta0   : np.ndarray
  theta1   : np.ndarray
  alpha    : np.ndarray
  excluded : Tuple[float, ...] = field(default=())   # sin(phi) = 0 momenta left out

  @property
  def n_modes(self) -> int:
    return int(self.momentum.size)

  @property
  def modes(self) -> Tuple[ModePair, ...]:
    return tuple(
      ModePair(i + 1, float(self.momentum[i]), float(self.epsilon0[i]), float(self.epsilon1[i]),
               float(self.theta0[i]), float(self.theta1[i]), float(self.alpha[i]))
      for i in range(self.n_modes))

  def __len__(self) -> int:
    return self.n_modes

  def __repr__(self) -> str:
    return '<BogoliubovSpectrum N={} lambda0={} lambda1={} modes={} convention={}>'.format(
      self.params.n_spins, self.params.lambda0, self.params.lambda1,
      self.n_modes, self.params.momentum_convention.name.lower())


@dataclass(frozen=True)
class EchoSpectrum:
  params         : IsingParams
  momentum       : np.ndarray
  epsilon_plus   : np.ndarray     # eps(lambda1) + eps(-lambda1)
  epsilon_minus  : np.ndarray     # eps(lambda1) - eps(-lambda1)
  alpha_plus     : np.ndarray     # alpha_tilde + alpha
  alpha_minus    : np.ndarray     # alpha_tilde - alpha

  @property
  def n_modes(self) -> int:
    return int(self.momentum.size)

  def __len__(self) -> int:
    return self.n_modes


def dispersion(lam, J, phi):
  """ quasiparticle energy 2J sqrt(1 + lam^2 - 2 lam cos(phi)).

  Accepts scalars or arrays. A negative `lam` gives the dispersion of the
  flipped-field Hamiltonian.
  """
  if np.any(np.asarray(J) <= 0):
    raise InvalidParameter('`J`={} should be positive.'.format(J))
  radicand = 1.0 + np.square(lam) - 2.0 * np.asarray(lam) * np.cos(phi)
  energy = 2.0 * J * np.sqrt(np.maximum(radicand, 0.0))
  if np.ndim(energy) == 0:
    return float(energy)
  return energy


def bogoliubov_angle(lam, phi):
  """ Bogoliubov angle atan2(sin(phi), lam - cos(phi)), in (-pi, pi].

  Raises SingularAngle at the 0/0 point sin(phi) = 0, lam = cos(phi).
  """
  sin_phi = np.sin(phi)
  denominator = np.asarray(lam) - np.cos(phi)
  singular = (np.abs(sin_phi) < _SINGULAR_ATOL) & (np.abs(denominator) < _SINGULAR_ATOL)
  if np.any(singular):
    raise SingularAngle('angle undefined at lambda={}, phi={}: sin(phi)=0 and lambda=cos(phi).'.format(
      lam, phi))

  theta = np.arctan2(sin_phi, denominator)
  if np.ndim(theta) == 0:
    return float(theta)
  return theta


def momenta(n_spins: int, convention=MomentumConvention.ANTIPERIODIC) -> np.ndarray:
  """ positive momenta in (0, pi) entering the mode product. """
  convention = MomentumConvention.parse(convention)
  if convention == MomentumConvention.ANTIPERIODIC:
    m = np.arange(1, n_spins // 2 + 1)
    return np.pi * (2 * m - 1) / n_spins

  # k and -k pair up; k = 0 and k = N/2 have sin(phi) = 0 and are excluded
  k = np.arange(1, (n_spins - 1) // 2 + 1)
  return 2.0 * np.pi * k / n_spins


def excluded_momenta(n_spins: int, convention=MomentumConvention.ANTIPERIODIC) -> Tuple[float, ...]:
  convention = MomentumConvention.parse(convention)
  if convention == MomentumConvention.ANTIPERIODIC:
    # odd N leaves phi = pi unpaired
    return (math.pi,) if n_spins % 2 == 1 else ()
  if n_spins % 2 == 0:
    return (0.0, math.pi)
  return (0.0,)


def build_spectrum(params: IsingParams) -> BogoliubovSpectrum:
  phi = momenta(params.n_spins, params.momentum_convention)
  J = params.coupling

  theta0 = np.atleast_1d(bogoliubov_angle(params.lambda0, phi))
  theta1 = np.atleast_1d(bogoliubov_angle(params.lambda1, phi))

  return BogoliubovSpectrum(
    params   = params,
    momentum = phi,
    epsilon0 = np.atleast_1d(dispersion(params.lambda0, J, phi)),
    epsilon1 = np.atleast_1d(dispersion(params.lambda1, J, phi)),
    theta0   = theta0,
    theta1   = theta1,
    alpha    = 0.5 * (theta1 - theta0),
    excluded = excluded_momenta(params.n_spins, params.momentum_convention))


def build_echo_spectrum(params: IsingParams) -> EchoSpectrum:
  """ mode sums and differences for the echo: the second segment evolves
  under the flipped field, i.e. lambda -> -lambda1.
  """
  phi = momenta(params.n_spins, params.momentum_convention)
  J = params.coupling

  eps1 = dispersion(params.lambda1, J, phi)
  eps_flip = dispersion(-params.lambda1, J, phi)

  theta0 = bogoliubov_angle(params.lambda0, phi)
  theta1 = bogoliubov_angle(params.lambda1, phi)
  theta_flip = bogoliubov_angle(-params.lambda1, phi)

  alpha = 0.5 * (theta1 - theta0)
  alpha_tilde = 0.5 * (theta_flip - theta0)

  return EchoSpectrum(
    params        = params,
    momentum      = phi,
    epsilon_plus  = np.atleast_1d(eps1 + eps_flip),
    epsilon_minus = np.atleast_1d(eps1 - eps_flip),
    alpha_plus    = np.atleast_1d(alpha_tilde + alpha),
    alpha_minus   = np.atleast_1d(alpha_tilde - alpha))


def ground_energy(spectrum: BogoliubovSpectrum, which: int = 1) -> float:
  """ free-fermion ground energy -sum_k eps_k of H_lambda0 (which=0) or H_lambda1 (which=1). """
  if which not in (0, 1):
    raise InvalidParameter('`which`={} should be 0 or 1.'.format(which))
  energies = spectrum.epsilon0 if which == 0 else spectrum.epsilon1
  return -float(np.sum(energies))
