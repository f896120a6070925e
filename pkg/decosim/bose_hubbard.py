# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

import math
import warnings
import numpy as np
import scipy.linalg

from dataclasses   import dataclass, field
from enum          import IntEnum
from typing        import Dict, List, NamedTuple, Optional, Tuple, Union
from scipy.special import comb

from decosim.config import DEFAULT_INTERACTION, DEGENERACY_TOLERANCE, NORM_TOLERANCE, max_dimension
from decosim.errors import InvalidParameter, DimensionTooLarge, ConvergenceFailure, \
  UnnormalizedInput, DegenerateGroundStateWarning
from decosim.util   import logging


class Boundary(IntEnum):
  PERIODIC = 0
  OPEN     = 1

  @classmethod
  def parse(cls, value: Union[str, int, 'Boundary']) -> 'Boundary':
    if isinstance(value, cls):
      return value
    if isinstance(value, str) and value.strip().upper() in cls.__members__:
      return cls[value.strip().upper()]
    raise InvalidParameter('boundary `{}` is invalid, use `periodic` or `open`.'.format(value))


@dataclass(frozen=True)
class BoseHubbardParams:
  n_sites     : int
  n_bosons    : int
  hopping     : float                        # g, plays the role of lambda
  interaction : float    = DEFAULT_INTERACTION
  boundary    : Boundary = Boundary.PERIODIC

  def __post_init__(self):
    object.__setattr__(self, 'boundary', Boundary.parse(self.boundary))
    if int(self.n_sites) != self.n_sites or self.n_sites < 1:
      raise InvalidParameter('`n_sites`={} should be an integer >= 1.'.format(self.n_sites))
    if int(self.n_bosons) != self.n_bosons or self.n_bosons < 0:
      raise InvalidParameter('`n_bosons`={} should be an integer >= 0.'.format(self.n_bosons))
    object.__setattr__(self, 'n_sites', int(self.n_sites))
    object.__setattr__(self, 'n_bosons', int(self.n_bosons))
    if not math.isfinite(self.hopping) or self.hopping < 0:
      raise InvalidParameter('`hopping`={} should be finite and >= 0.'.format(self.hopping))
    if not math.isfinite(self.interaction) or self.interaction <= 0:
      raise InvalidParameter('`interaction`={} should be positive.'.format(self.interaction))

  @property
  def dimension(self) -> int:
    return basis_dimension(self.n_sites, self.n_bosons)

  def with_hopping(self, hopping: float) -> 'BoseHubbardParams':
    return BoseHubbardParams(self.n_sites, self.n_bosons, hopping, self.interaction, self.boundary)


FockState = Tuple[int, ...]


@dataclass(frozen=True)
class FockBasis:
  n_sites  : int
  n_bosons : int
  states   : Tuple[FockState, ...]
  index    : Dict[FockState, int] = field(repr=False, compare=False)

  def __len__(self) -> int:
    return len(self.states)

  def __contains__(self, state) -> bool:
    return tuple(state) in self.index

  def occupations(self) -> np.ndarray:
    return np.asarray(self.states, dtype=int).reshape(len(self.states), self.n_sites)


@dataclass(frozen=True)
class DenseHamiltonian:
  dimension : int
  entries   : np.ndarray

  def __post_init__(self):
    if self.entries.shape != (self.dimension, self.dimension):
      raise InvalidParameter('matrix shape {} does not match dimension {}.'.format(
        self.entries.shape, self.dimension))

  def is_symmetric(self, rtol: float = 1e-12) -> bool:
    scale = max(float(np.max(np.abs(self.entries))) if self.dimension else 0.0, 1.0)
    return bool(np.max(np.abs(self.entries - self.entries.T), initial=0.0) <= rtol * scale)


@dataclass(frozen=True)
class SpectralDecomposition:
  """ local density of states: levels E_n with weights |<g0|phi_n>|^2. """
  energies : np.ndarray
  weights  : np.ndarray

  def __post_init__(self):
    energies = np.asarray(self.energies, dtype=float).ravel()
    weights = np.asarray(self.weights, dtype=float).ravel()
    if energies.shape != weights.shape:
      raise InvalidParameter('{} energies for {} weights.'.format(energies.size, weights.size))
    if energies.size == 0:
      raise InvalidParameter('a spectral decomposition needs at least one level.')
    if np.any(np.diff(energies) < 0):
      raise InvalidParameter('energies should be ascending.')
    if np.any(weights < 0):
      raise InvalidParameter('spectral weights should be non-negative.')
    object.__setattr__(self, 'energies', energies)
    object.__setattr__(self, 'weights', weights)


class Eigensystem(NamedTuple):
  energies : np.ndarray
  vectors  : np.ndarray     # columns


@dataclass(frozen=True)
class GroundState:
  vector     : np.ndarray
  energy     : float
  gap        : float
  degenerate : bool


def basis_dimension(n_sites: int, n_bosons: int) -> int:
  return int(comb(n_bosons + n_sites - 1, n_sites - 1, exact=True))


def _compositions(n_sites: int, n_bosons: int):
  # first site takes the most bosons first: lexicographic descending
  if n_sites == 1:
    yield (n_bosons,)
    return
  for first in range(n_bosons, -1, -1):
    for rest in _compositions(n_sites - 1, n_bosons - first):
      yield (first,) + rest


def enumerate_basis(n_sites: int, n_bosons: int, max_dim: Optional[int] = None) -> FockBasis:
  if n_sites < 1 or n_bosons < 0:
    raise InvalidParameter('need n_sites >= 1 and n_bosons >= 0, got ({}, {}).'.format(n_sites, n_bosons))

  limit = max_dimension() if max_dim is None else max_dim
  dimension = basis_dimension(n_sites, n_bosons)
  if dimension > limit:
    raise DimensionTooLarge('basis dimension C({}, {}) = {} exceeds the cap {}.'.format(
      n_bosons + n_sites - 1, n_sites - 1, dimension, limit))

  states = tuple(_compositions(n_sites, n_bosons))
  index = {state: i for i, state in enumerate(states)}
  return FockBasis(n_sites, n_bosons, states, index)


def bonds(n_sites: int, boundary=Boundary.PERIODIC) -> List[Tuple[int, int]]:
  """ nearest-neighbour bonds as unordered pairs, each counted once. """
  boundary = Boundary.parse(boundary)
  pairs = set()
  for i in range(n_sites - 1):
    pairs.add((i, i + 1))
  if boundary == Boundary.PERIODIC and n_sites > 2:
    pairs.add((0, n_sites - 1))
  return sorted(pairs)


class BoseHubbardModel(object):
  """ a fixed (L, n, u, boundary) lattice; the hopping part is assembled once
  with unit amplitude so Hamiltonians for many g are cheap.
  """
  def __init__(self, params: BoseHubbardParams, basis: Optional[FockBasis] = None):
    if basis is None:
      basis = enumerate_basis(params.n_sites, params.n_bosons)
    if (basis.n_sites, basis.n_bosons) != (params.n_sites, params.n_bosons):
      raise InvalidParameter('basis ({}, {}) does not match params ({}, {}).'.format(
        basis.n_sites, basis.n_bosons, params.n_sites, params.n_bosons))

    self.params = params
    self.basis = basis
    occupations = basis.occupations()
    self.interaction_diagonal = params.interaction * np.sum(occupations * (occupations - 1), axis=1).astype(float)
    self.hopping_matrix = self._assemble_hopping()

  def _assemble_hopping(self) -> np.ndarray:
    """ matrix of -sum_<ij> (a+_i a_j + a+_j a_i) in the Fock basis. """
    dimension = len(self.basis)
    matrix = np.zeros((dimension, dimension))
    lattice = bonds(self.params.n_sites, self.params.boundary)

    for col, state in enumerate(self.basis.states):
      for i, j in lattice:
        for dst, src in ((i, j), (j, i)):
          if state[src] == 0:
            continue
          target = list(state)
          amplitude = math.sqrt((target[dst] + 1) * target[src])
          target[dst] += 1
          target[src] -= 1
          row = self.basis.index[tuple(target)]
          matrix[row, col] -= amplitude

    return matrix

  def hamiltonian(self, hopping: Optional[float] = None) -> DenseHamiltonian:
    g = self.params.hopping if hopping is None else hopping
    entries = g * self.hopping_matrix
    entries[np.diag_indices_from(entries)] += self.interaction_diagonal
    return DenseHamiltonian(len(self.basis), entries)

  def __repr__(self) -> str:
    return '<BoseHubbardModel L={} n={} u={} {} dim={}>'.format(
      self.params.n_sites, self.params.n_bosons, self.params.interaction,
      self.params.boundary.name.lower(), len(self.basis))


def build_hamiltonian(params: BoseHubbardParams, basis: FockBasis) -> DenseHamiltonian:
  return BoseHubbardModel(params, basis).hamiltonian()


def eigendecompose(h: DenseHamiltonian) -> Eigensystem:
  """ full spectrum of a dense symmetric Hamiltonian.

  Description:
    Ascending eigenvalues with orthonormal eigenvectors as columns. The
    result is audited before it is returned.

  When failure:
    ConvergenceFailure if LAPACK does not converge, or if a residual
    |Hv - Ev| exceeds 1e-8 |H| or the vectors are not orthonormal to 1e-10.
  """
  if not h.is_symmetric():
    raise InvalidParameter('the Hamiltonian is not symmetric.')

  try:
    energies, vectors = scipy.linalg.eigh(h.entries)
  except (np.linalg.LinAlgError, ValueError) as err:
    raise ConvergenceFailure('symmetric eigensolver failed: {}'.format(err))

  norm = float(np.max(np.abs(energies))) if energies.size else 0.0
  residual = np.linalg.norm(h.entries @ vectors - vectors * energies, axis=0)
  if np.any(residual > 1e-8 * norm):
    raise ConvergenceFailure('eigenpair residual {:.3e} above 1e-8 |H| = {:.3e}.'.format(
      float(np.max(residual)), 1e-8 * norm))

  overlap = vectors.T @ vectors
  if np.max(np.abs(overlap - np.eye(h.dimension)), initial=0.0) > 1e-10:
    raise ConvergenceFailure('eigenvectors are not orthonormal.')

  return Eigensystem(energies, vectors)


def _warn_degenerate(message: str):
  logging.warning(message)
  warnings.warn(message, DegenerateGroundStateWarning, stacklevel=3)


def solve_ground_state(params: BoseHubbardParams, basis: FockBasis,
                       model: Optional[BoseHubbardModel] = None) -> GroundState:
  """ ground state of H_lambda0, with lambda0 = params.hopping. """
  model = model if model is not None else BoseHubbardModel(params, basis)
  dimension = len(basis)

  if params.hopping == 0:
    # diagonal in the Fock basis; the canonical-first minimum is the Mott state at n = L
    diagonal = model.interaction_diagonal
    lowest = float(np.min(diagonal))
    minima = np.flatnonzero(diagonal == lowest)
    vector = np.zeros(dimension)
    vector[minima[0]] = 1.0
    higher = diagonal[diagonal > lowest]
    gap = float(np.min(higher) - lowest) if higher.size else math.inf
    degenerate = minima.size > 1
    if degenerate:
      gap = 0.0
      _warn_degenerate('{} Fock states share the lowest interaction energy {}; using {}.'.format(
        minima.size, lowest, basis.states[minima[0]]))
    return GroundState(vector, lowest, gap, degenerate)

  energies, vectors = eigendecompose(model.hamiltonian(params.hopping))
  gap = float(energies[1] - energies[0]) if dimension > 1 else math.inf
  norm = float(np.max(np.abs(energies)))
  degenerate = gap < DEGENERACY_TOLERANCE * norm
  if degenerate:
    _warn_degenerate('ground state gap {:.3e} is below {:.0e} |H|.'.format(gap, DEGENERACY_TOLERANCE))

  return GroundState(vectors[:, 0].copy(), float(energies[0]), gap, bool(degenerate))


def ground_state(params: BoseHubbardParams, basis: FockBasis) -> np.ndarray:
  return solve_ground_state(params, basis).vector


def spectral_weights(ground0: np.ndarray, energies: np.ndarray, vectors: np.ndarray) -> SpectralDecomposition:
  ground0 = np.asarray(ground0)
  norm = float(np.linalg.norm(ground0))
  if abs(norm - 1.0) > NORM_TOLERANCE:
    raise UnnormalizedInput('initial state has norm {:.15g}.'.format(norm))

  weights = np.abs(np.asarray(vectors).conj().T @ ground0) ** 2
  total = float(np.sum(weights))
  if abs(total - 1.0) > NORM_TOLERANCE:
    raise UnnormalizedInput('spectral weights sum to {:.15g}; the eigenvectors are not complete '
                            'and orthonormal.'.format(total))

  return SpectralDecomposition(np.asarray(energies, dtype=float), weights)
