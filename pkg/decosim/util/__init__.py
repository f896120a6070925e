# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.


from .logger import set_logger
from .time_it import TimeIt


logging = set_logger(level='INFO', log_dir_name=None)
