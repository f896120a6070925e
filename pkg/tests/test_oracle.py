# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

import numpy as np
import pytest
import scipy.linalg

from decosim.decoherence import TimeGrid
from decosim.errors import DegenerateGroundState, DimensionTooLarge, InvalidParameter
from decosim.fermion_spectrum import build_spectrum, ground_energy
from decosim.oracle import build_spin_hamiltonian, oracle_survival, oracle_echo, oracle_check, \
    oracle_decomposition, parity_expectation, periodic_tolerance

from tests.conftest import ising


def parity_matrix(n_spins):
    dimension = 1 << n_spins
    index = np.arange(dimension)
    matrix = np.zeros((dimension, dimension))
    matrix[index ^ (dimension - 1), index] = 1.0
    return matrix


class TestSpinHamiltonian:

    def test_two_spins_diagonal(self):
        h = build_spin_hamiltonian(2, 1.0, 0.0)
        # two bonds on a periodic pair
        np.testing.assert_array_equal(np.diag(h.matrix), [-2.0, 2.0, 2.0, -2.0])
        assert np.count_nonzero(h.matrix - np.diag(np.diag(h.matrix))) == 0

    def test_field_entries(self):
        h = build_spin_hamiltonian(3, 2.0, 0.5)
        assert h.dimension == 8
        np.testing.assert_array_equal(h.matrix, h.matrix.T)
        # each basis state couples to N single-flip neighbours
        assert np.all(np.count_nonzero(h.matrix - np.diag(np.diag(h.matrix)), axis=0) == 3)
        assert h.matrix[0b100, 0b000] == pytest.approx(1.0)

    def test_limits(self):
        with pytest.raises(DimensionTooLarge):
            build_spin_hamiltonian(13, 1.0, 1.0)
        with pytest.raises(InvalidParameter):
            build_spin_hamiltonian(1, 1.0, 1.0)
        with pytest.raises(InvalidParameter):
            build_spin_hamiltonian(4, 0.0, 1.0)

    def test_ground_energy_matches_free_fermions(self):
        energies = scipy.linalg.eigvalsh(build_spin_hamiltonian(8, 1.0, 5.0).matrix)
        expected = ground_energy(build_spectrum(ising(8, 5.0, 5.0)))
        assert energies[0] == pytest.approx(expected, rel=1e-3)

    def test_parity_symmetry(self):
        h = build_spin_hamiltonian(6, 1.0, 0.7).matrix
        p = parity_matrix(6)
        np.testing.assert_allclose(p @ h, h @ p, atol=1e-12)

        vector = scipy.linalg.eigh(h)[1][:, 0]
        assert abs(parity_expectation(vector, 6)) == pytest.approx(1.0, abs=1e-8)


class TestOracleEvolution:

    def test_initial_value(self):
        grid = TimeGrid(0.0, 1.0, 11)
        assert oracle_survival(6, 1.0, 0.5, 3.0, grid).r[0] == pytest.approx(1.0, abs=1e-12)
        assert oracle_echo(6, 1.0, 0.5, 3.0, grid).r[0] == pytest.approx(1.0, abs=1e-12)

    def test_no_quench(self):
        series = oracle_survival(6, 1.0, 0.8, 0.8, TimeGrid(0.0, 5.0, 51))
        np.testing.assert_allclose(np.abs(series.r), 1.0, atol=1e-10)

    def test_unitarity(self):
        decomp = oracle_decomposition(6, 1.0, 0.3, 2.0)
        assert decomp.weights.sum() == pytest.approx(1.0, abs=1e-10)
        series = oracle_survival(6, 1.0, 0.3, 2.0, TimeGrid(0.0, 8.0, 161))
        assert np.all(series.abs2 <= 1 + 1e-10)

    def test_degenerate_initial_state(self):
        with pytest.raises(DegenerateGroundState):
            oracle_survival(6, 1.0, 0.0, 2.0, TimeGrid(0.0, 1.0, 11))


class TestOracleCheck:

    def test_product_formula_is_exact(self):
        check = oracle_check(8, 1.0, 0.2, 5.0, TimeGrid(0.0, 4.0, 401))
        assert check.survival_deviation <= 1e-8
        assert check.echo_deviation <= 1e-8
        assert check.passed

    def test_critical_quench(self):
        check = oracle_check(10, 1.0, 0.5, 1.0, TimeGrid(0.0, 6.0, 241))
        assert check.passed

    def test_small_lambda0_rejected(self):
        with pytest.raises(DegenerateGroundState):
            oracle_check(8, 1.0, 0.0, 5.0, TimeGrid(0.0, 1.0, 11))

    def test_periodic_convention_tolerance(self):
        check = oracle_check(8, 1.0, 0.2, 2.0, TimeGrid(0.0, 0.005, 11), convention='periodic')
        assert check.convention == 'periodic'
        assert check.tolerance == pytest.approx(7.0 / 8)
        assert check.passed

    def test_periodic_convention_fails_long_window(self):
        assert periodic_tolerance(4) == pytest.approx(1.75)
        check = oracle_check(4, 1.0, 0.2, 5.0, TimeGrid(0.0, 4.0, 401), convention='paper')
        assert check.survival_deviation > check.tolerance
        assert not check.passed

    def test_periodic_convention_improves_with_size(self):
        grid = TimeGrid(0.0, 4.0, 801)
        small = oracle_check(6, 1.0, 0.2, 2.0, grid, convention='periodic')
        large = oracle_check(10, 1.0, 0.2, 2.0, grid, convention='periodic')
        assert large.survival_deviation < small.survival_deviation
