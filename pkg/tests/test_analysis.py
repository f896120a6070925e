# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

import math

import numpy as np
import pytest

from decosim.analysis import extract_envelope, fit_gaussian_width, fit_series_width, ldos_moments, \
    ldos_histogram, dos_histogram, histogram_overlap, short_time_coefficient, critical_scan, \
    IsingScanBuilder, BoseHubbardScanBuilder
from decosim.bose_hubbard import SpectralDecomposition
from decosim.decoherence import TimeGrid, DecoherenceSeries
from decosim.errors import InvalidParameter, TooFewPeaks, DegenerateFit, UnnormalizedWeights


def series_of(grid, abs2):
    return DecoherenceSeries.from_amplitudes(grid, np.sqrt(abs2))


class TestEnvelope:

    def test_peaks_of_damped_oscillation(self):
        grid = TimeGrid(0.0, 3.0, 3001)
        t = grid.times
        envelope = extract_envelope(series_of(grid, np.exp(-t ** 2) * np.cos(10 * t) ** 2))
        assert len(envelope) == 10
        assert envelope[0] == (0.0, 1.0)
        for k, (time, _) in enumerate(envelope[1:4], start=1):
            assert time == pytest.approx(k * math.pi / 10, abs=0.01)

    def test_monotone_series(self):
        grid = TimeGrid(0.0, 2.0, 201)
        with pytest.raises(TooFewPeaks):
            extract_envelope(series_of(grid, np.exp(-grid.times ** 2)))

    def test_needs_three_maxima(self):
        grid = TimeGrid(0.0, 6.0, 7)
        with pytest.raises(TooFewPeaks):
            extract_envelope(series_of(grid, np.array([1.0, 0.2, 0.9, 0.1, 0.8, 0.05, 0.01])))

        envelope = extract_envelope(series_of(TimeGrid(0.0, 7.0, 8),
                                              np.array([1.0, 0.2, 0.9, 0.1, 0.8, 0.05, 0.7, 0.01])))
        assert [t for t, _ in envelope] == pytest.approx([0.0, 2.0, 4.0, 6.0])


class TestGaussianFit:

    def test_exact_gaussian(self):
        t = np.linspace(0, 1, 11)
        fit = fit_gaussian_width(list(zip(t, np.exp(-4 * t ** 2))))
        assert fit.width2 == pytest.approx(4.0, rel=1e-9)
        assert fit.mean_freq == pytest.approx(10 * math.pi)
        assert fit.n_peaks_used == 11
        assert fit.rms_log_residual < 1e-9

    @pytest.mark.parametrize('width2', [0.1, 1.0, 10.0, 100.0])
    def test_scales(self, width2):
        t = np.linspace(0, 2 / math.sqrt(width2), 21)
        fit = fit_gaussian_width(list(zip(t, np.exp(-width2 * t ** 2))))
        assert fit.width2 == pytest.approx(width2, rel=1e-6)

    def test_constant_envelope(self):
        fit = fit_gaussian_width([(0.0, 0.5), (1.0, 0.5), (2.0, 0.5)])
        assert fit.width2 == pytest.approx(0.0, abs=1e-12)

    def test_failures(self):
        with pytest.raises(DegenerateFit):
            fit_gaussian_width([(1.0, 0.5), (1.0, 0.4), (1.0, 0.3)])
        with pytest.raises(TooFewPeaks):
            fit_gaussian_width([(0.0, 1.0), (1.0, 0.5)])
        with pytest.raises(TooFewPeaks):
            fit_gaussian_width([(0.0, 1.0), (1.0, 1e-3), (2.0, 1e-4)], floor=5e-3)

    def test_steep_gaussian_keeps_small_peaks(self):
        t = np.array([0.0, 0.2, 0.4])
        fit = fit_gaussian_width(list(zip(t, np.exp(-100 * t ** 2))))
        assert fit.width2 == pytest.approx(100.0, rel=1e-6)
        assert fit.n_peaks_used == 3

    def test_series_width(self):
        grid = TimeGrid(0.0, 1.5, 3001)
        t = grid.times
        fit = fit_series_width(series_of(grid, np.exp(-3 * t ** 2) * np.cos(20 * t) ** 2))
        assert fit.width2 == pytest.approx(3.0, rel=0.05)


class TestLdos:

    def test_moments(self):
        decomp = SpectralDecomposition(np.array([-1.0, 1.0]), np.array([0.5, 0.5]))
        assert ldos_moments(decomp) == pytest.approx((0.0, 1.0))
        with pytest.raises(UnnormalizedWeights):
            ldos_moments(SpectralDecomposition(np.array([-1.0, 1.0]), np.array([0.5, 0.6])))

    def test_histograms(self):
        single = ldos_histogram(SpectralDecomposition(np.array([2.0]), np.array([1.0])), 4)
        assert len(single) == 4
        assert sum(w for _, w in single) == pytest.approx(1.0)

        flat = dos_histogram(np.linspace(0, 1, 100), 10)
        np.testing.assert_allclose([w for _, w in flat], 0.1)
        assert histogram_overlap(flat, flat) == pytest.approx(1.0)
        with pytest.raises(InvalidParameter):
            dos_histogram(np.linspace(0, 1, 100), 0)

    def test_disjoint_overlap(self):
        p = [(0.0, 1.0), (1.0, 0.0)]
        q = [(0.0, 0.0), (1.0, 1.0)]
        assert histogram_overlap(p, q) == 0.0
        with pytest.raises(InvalidParameter):
            histogram_overlap(p, q[:1])

    def test_short_time_coefficient(self):
        grid = TimeGrid(0.0, 1.0, 1001)
        series = DecoherenceSeries.from_amplitudes(grid, np.cos(2.0 * grid.times))
        assert short_time_coefficient(series, 0.05) == pytest.approx(4.0, rel=1e-2)
        with pytest.raises(InvalidParameter):
            short_time_coefficient(series, 1e-4)


class TestCriticalScan:

    def test_validation(self):
        builder = IsingScanBuilder(n_spins=20)
        grid = TimeGrid(0.0, 1.0, 101)
        with pytest.raises(InvalidParameter):
            critical_scan(builder, [0.1, 0.2, 0.3, 0.4], grid, 0.5)
        with pytest.raises(InvalidParameter):
            critical_scan(builder, [0.1, 0.3, 0.2, 0.4, 0.5], grid, 0.5)
        with pytest.raises(InvalidParameter):
            critical_scan(builder, [0.1, 0.2, 0.3, 0.4, 0.5], grid, 2.0)
        with pytest.raises(InvalidParameter):
            critical_scan(builder, [0.1, 0.2, 0.3, 0.4, 0.5], grid, 0.5, width_source='guess')

    def test_auto_uses_prediction(self):
        result = critical_scan(IsingScanBuilder(n_spins=20), np.linspace(0.5, 1.5, 11),
                               TimeGrid(0.0, 2.0, 401), 1.0)
        assert result.width_source == 'predicted'
        assert np.all(np.isfinite(result.predicted_widths))
        assert result.probe_decay.shape == (11,)

    def test_edge_of_grid_is_not_confident(self):
        result = critical_scan(IsingScanBuilder(n_spins=20), np.linspace(0.05, 0.25, 5),
                               TimeGrid(0.0, 2.0, 201), 1.0)
        assert not result.confident

    def test_workers_agree(self):
        builder = IsingScanBuilder(n_spins=20)
        grid = TimeGrid(0.0, 2.0, 201)
        serial = critical_scan(builder, np.linspace(0.2, 2.0, 7), grid, 1.0)
        parallel = critical_scan(builder, np.linspace(0.2, 2.0, 7), grid, 1.0, workers=2)
        np.testing.assert_array_equal(serial.widths, parallel.widths)
        np.testing.assert_array_equal(serial.probe_decay, parallel.probe_decay)
        assert serial.lambda_c_estimate == parallel.lambda_c_estimate

    def test_lattice_builder_has_no_prediction(self):
        builder = BoseHubbardScanBuilder(n_sites=2, n_bosons=2)
        with pytest.raises(InvalidParameter):
            critical_scan(builder, np.linspace(0.5, 2.5, 5), TimeGrid(0.0, 2.0, 101), 1.0,
                          width_source='predicted')
