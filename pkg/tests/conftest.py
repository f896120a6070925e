# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

import pytest

from decosim.decoherence import TimeGrid
from decosim.fermion_spectrum import IsingParams, build_spectrum, build_echo_spectrum
from decosim.util import set_logger


@pytest.fixture(autouse=True)
def quiet_logger():
    set_logger(level='WARNING', log_dir_name=None)
    yield


def ising(n_spins=50, lambda0=0.0, lambda1=5.0, convention='antiperiodic'):
    return IsingParams(n_spins=n_spins, lambda0=lambda0, lambda1=lambda1,
                       momentum_convention=convention)


@pytest.fixture
def spectrum50():
    return build_spectrum(ising(50, 0.0, 5.0))


@pytest.fixture
def echo8():
    return build_echo_spectrum(ising(8, 0.2, 5.0))


@pytest.fixture
def grid4():
    return TimeGrid(0.0, 4.0, 401)
