# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

import math

import numpy as np
import pytest

from decosim.bose_hubbard import SpectralDecomposition
from decosim.decoherence import TimeGrid, decoherence_factor, decoherence_series, product_amplitudes, \
    cumulative_variance, lindenberg_check, echo_factor, echo_amplitudes, echo_approximation, \
    survival_from_spectrum, suggested_time_step, default_t_max, oscillation_kernel, _use_log_path
from decosim.errors import InvalidParameter, DivideByZero, UnnormalizedWeights
from decosim.fermion_spectrum import BogoliubovSpectrum, build_spectrum, build_echo_spectrum

from tests.conftest import ising


def flat_spectrum(n_spins, energies, alpha):
    """ hand-made spectrum with prescribed energies and mixing angles. """
    energies = np.asarray(energies, dtype=float)
    zeros = np.zeros_like(energies)
    return BogoliubovSpectrum(
        params=ising(n_spins, 0.0, 1.0), momentum=np.linspace(0.1, 3.0, energies.size),
        epsilon0=zeros, epsilon1=energies, theta0=zeros, theta1=2 * np.asarray(alpha) + zeros,
        alpha=np.asarray(alpha) + zeros)


class TestTimeGrid:

    def test_spacing(self):
        grid = TimeGrid(0.0, 4.0, 5)
        assert grid.dt == 1.0
        np.testing.assert_array_equal(grid.times, [0, 1, 2, 3, 4])

    def test_invalid(self):
        with pytest.raises(InvalidParameter):
            TimeGrid(0.0, 1.0, 1)
        with pytest.raises(InvalidParameter):
            TimeGrid(1.0, 1.0, 10)
        with pytest.raises(InvalidParameter):
            TimeGrid(-1.0, 1.0, 10)


class TestDecoherenceFactor:

    def test_initial_value(self, spectrum50):
        assert abs(decoherence_factor(spectrum50, 0.0) - 1.0) <= 1e-14

    def test_uniform_modes_oscillate(self):
        spectrum = flat_spectrum(8, [1.3] * 4, math.pi / 4)
        for t in np.linspace(0, 5, 37):
            expected = abs(math.cos(1.3 * t)) ** 4
            assert abs(decoherence_factor(spectrum, t)) == pytest.approx(expected, abs=1e-12)

    def test_no_transition_is_pure_phase(self):
        spectrum = build_spectrum(ising(20, 0.4, 0.4))
        r = product_amplitudes(spectrum, np.linspace(0, 10, 101))
        np.testing.assert_allclose(np.abs(r), 1.0, atol=1e-12)

    def test_unit_bound(self, spectrum50):
        r = product_amplitudes(spectrum50, np.linspace(0, 6, 3001))
        assert np.all(np.abs(r) <= 1 + 1e-12)

    def test_log_path_agrees(self, spectrum50):
        times = np.linspace(0, 1, 201)
        direct = product_amplitudes(spectrum50, times, log_path=False)
        logged = product_amplitudes(spectrum50, times, log_path=True)
        np.testing.assert_allclose(logged, direct, atol=1e-12)

    def test_log_path_switches_on_spin_count(self):
        assert not _use_log_path(400, None)
        assert _use_log_path(401, None)
        assert _use_log_path(10, True)
        assert not _use_log_path(1000, False)

    @pytest.mark.parametrize('lambda1', [5.0, 10.0, 40.0])
    def test_maxima_follow_envelope(self, lambda1):
        grid = TimeGrid(0.0, 1.0, 4001)
        series = decoherence_series(build_spectrum(ising(50, 0.0, lambda1)), grid, with_envelope=True)
        abs2 = series.abs2
        maxima = np.flatnonzero((abs2[1:-1] > abs2[:-2]) & (abs2[1:-1] > abs2[2:])) + 1
        maxima = maxima[series.envelope[maxima] >= 0.1]
        assert maxima.size >= 1
        deviation = np.abs(np.log(abs2[maxima]) - np.log(series.envelope[maxima]))
        assert np.all(deviation <= 0.5)

    def test_series_carries_envelope(self, spectrum50):
        series = decoherence_series(spectrum50, TimeGrid(0.0, 1.0, 101), with_envelope=True)
        assert series.envelope[0] == pytest.approx(1.0)
        np.testing.assert_allclose(series.abs2, np.abs(series.r) ** 2, atol=1e-12)
        assert series.r[0] == 1.0


class TestCumulativeVariance:

    def test_equal_energies(self):
        envelope = cumulative_variance(flat_spectrum(8, [2.0] * 4, 0.3))
        assert envelope.variance == 0.0

    def test_two_modes(self):
        envelope = cumulative_variance(flat_spectrum(4, [5.0, 9.0], math.pi / 4))
        assert envelope.mean_energy == pytest.approx(7.0)
        assert envelope.variance == pytest.approx(8.0)

    def test_strong_field_scales_with_n(self):
        v50 = cumulative_variance(build_spectrum(ising(50, 0.0, 40.0))).variance
        v100 = cumulative_variance(build_spectrum(ising(100, 0.0, 40.0))).variance
        assert v50 == pytest.approx(12.505, abs=0.01)
        assert v100 / v50 == pytest.approx(2.0, rel=0.01)

    def test_conventions_converge(self):
        for n_spins, bound in ((50, 0.05), (200, 0.015)):
            ap = cumulative_variance(build_spectrum(ising(n_spins, 0.0, 5.0, 'antiperiodic'))).variance
            periodic = cumulative_variance(build_spectrum(ising(n_spins, 0.0, 5.0, 'periodic'))).variance
            assert abs(ap - periodic) / ap < bound


class TestLindenberg:

    def test_strong_coupling_satisfied(self):
        report = lindenberg_check(build_spectrum(ising(50, 0.0, 40.0)))
        assert report.satisfied
        assert report.mean_cos2 == pytest.approx(0.5, abs=0.05)

    def test_weak_coupling_not_satisfied(self):
        report = lindenberg_check(build_spectrum(ising(50, 0.0, 0.1)))
        assert not report.satisfied
        assert report.mean_cos2 > 0.9

    def test_no_mixing(self):
        report = lindenberg_check(build_spectrum(ising(50, 0.3, 0.3)))
        assert report.mean_cos2 == 1.0
        assert report.s2 == 0.0
        assert not report.satisfied


class TestEcho:

    def test_initial_value(self, echo8):
        assert abs(echo_factor(echo8, 0.0) - 1.0) <= 1e-14

    def test_static_chain_is_pure_phase(self):
        echo = build_echo_spectrum(ising(16, 0.0, 0.0))
        r = echo_amplitudes(echo, np.linspace(0, 3, 61))
        np.testing.assert_allclose(np.abs(r), 1.0, atol=1e-12)

    def test_modulus_is_even(self, echo8):
        times = np.linspace(0.0, 2.0, 41)
        np.testing.assert_allclose(np.abs(echo_amplitudes(echo8, times)),
                                   np.abs(echo_amplitudes(echo8, -times)), atol=1e-14)

    def test_unit_bound(self):
        echo = build_echo_spectrum(ising(50, 0.0, 10.0))
        assert np.all(np.abs(echo_amplitudes(echo, np.linspace(0, 2, 801))) <= 1 + 1e-12)

    def test_approximation_at_zero(self):
        params = ising(50, 0.0, 40.0)
        value = echo_approximation(build_spectrum(params), build_echo_spectrum(params), 0.0)
        assert value == pytest.approx(1.0)

    def test_approximation_needs_field(self):
        params = ising(50, 0.0, 0.0)
        with pytest.raises(DivideByZero):
            echo_approximation(build_spectrum(params), build_echo_spectrum(params), 0.1)
        with pytest.raises(ZeroDivisionError):
            echo_approximation(build_spectrum(params), build_echo_spectrum(params), 0.1)

    def test_kernel_vanishes_at_zero(self, echo8):
        assert oscillation_kernel(echo8, 0.0) == 0.0


class TestSurvivalFromSpectrum:

    def test_single_level(self):
        grid = TimeGrid(0.0, 3.0, 31)
        series = survival_from_spectrum(SpectralDecomposition([1.7], [1.0]), grid)
        np.testing.assert_allclose(series.r, np.exp(-1j * 1.7 * grid.times), atol=1e-14)
        np.testing.assert_allclose(series.abs2, 1.0, atol=1e-14)

    def test_two_levels(self):
        grid = TimeGrid(0.0, 3.0, 31)
        series = survival_from_spectrum(SpectralDecomposition([-2.0, 2.0], [0.5, 0.5]), grid)
        np.testing.assert_allclose(series.r, np.cos(2.0 * grid.times), atol=1e-14)

    def test_unnormalized(self):
        with pytest.raises(UnnormalizedWeights):
            survival_from_spectrum(SpectralDecomposition([0.0, 1.0], [0.5, 0.6]), TimeGrid(0.0, 1.0, 3))


class TestGridHelpers:

    def test_suggested_step(self, spectrum50):
        assert suggested_time_step(spectrum50) == pytest.approx(math.pi / (4 * np.max(spectrum50.epsilon1)))

    def test_default_window(self):
        t_max = default_t_max(4.0)
        assert math.exp(-4.0 * t_max ** 2) == pytest.approx(1e-4)
        assert default_t_max(0.0) is None
