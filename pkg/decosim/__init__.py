# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.


__version__ = '0.1.0'

from decosim.util import logging, set_logger, TimeIt
from decosim.errors import *
from decosim.fermion_spectrum import IsingParams, MomentumConvention, ModePair, BogoliubovSpectrum, \
    EchoSpectrum, dispersion, bogoliubov_angle, build_spectrum, build_echo_spectrum, ground_energy
from decosim.decoherence import TimeGrid, DecoherenceSeries, EnvelopeParams, LindenbergReport, \
    decoherence_factor, decoherence_series, cumulative_variance, lindenberg_check, echo_factor, \
    echo_series, echo_approximation, oscillation_kernel, survival_from_spectrum
from decosim.bose_hubbard import BoseHubbardParams, Boundary, FockBasis, DenseHamiltonian, \
    SpectralDecomposition, BoseHubbardModel, enumerate_basis, build_hamiltonian, eigendecompose, \
    ground_state, spectral_weights
from decosim.analysis import GaussianFit, CriticalScanResult, extract_envelope, fit_gaussian_width, \
    fit_series_width, ldos_moments, ldos_histogram, critical_scan, IsingScanBuilder, BoseHubbardScanBuilder
