# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

import os

from decosim.errors import InvalidParameter


DEFAULT_COUPLING = 1.0          # J, the energy unit of the Ising chain
DEFAULT_INTERACTION = 1.0       # u, the energy unit of the Bose-Hubbard chain
DEFAULT_MAX_DIM = 20000
MAX_ORACLE_SPINS = 12

LOG_PRODUCT_THRESHOLD = 400     # spins above which products go through logs
FIT_FLOOR = 5e-3
PEAK_VALUE_MIN = 1e-12
NORM_TOLERANCE = 1e-10
DEGENERACY_TOLERANCE = 1e-10    # relative to the matrix norm

ORACLE_TOLERANCE = 1e-8
PERIODIC_ORACLE_SCALE = 7.0     # integer-momentum oracle bound is this over N

MAX_DIM_ENV = 'DECOSIM_MAX_DIM'


def max_dimension():
    """ basis-dimension cap, overridable by `DECOSIM_MAX_DIM`. """
    raw = os.environ.get(MAX_DIM_ENV)
    if raw is None or raw.strip() == '':
        return DEFAULT_MAX_DIM

    try:
        value = int(raw)
    except ValueError:
        raise InvalidParameter(
            '{}={} is not an integer.'.format(MAX_DIM_ENV, raw))
    if value <= 0:
        raise InvalidParameter(
            '{}={} should be positive.'.format(MAX_DIM_ENV, raw))
    return value


def load_config_file(path):
    """ read a plain-text `key = value` file.

    Args:
        path(str): file path; blank lines and `#` comments are skipped

    Returns:
        dict: keys normalized to `snake_case`, values kept as strings

    """
    if not os.path.isfile(path):
        raise InvalidParameter('config file `{}` does not exist.'.format(path))

    options = dict()
    with open(path, 'r', encoding='utf-8') as f:
        for line_no, line in enumerate(f, start=1):
            line = line.split('#', 1)[0].strip()
            if line == '':
                continue
            if '=' not in line:
                raise InvalidParameter(
                    '{}:{}: expected `key = value`, got `{}`.'.format(
                        path, line_no, line))

            key, value = line.split('=', 1)
            key = key.strip().lstrip('-').replace('-', '_')
            if key == '':
                raise InvalidParameter('{}:{}: empty key.'.format(path, line_no))
            options[key] = value.strip()

    return options
