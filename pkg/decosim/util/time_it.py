# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.


import time
import logging


class TimeIt(object):
    """ wall-clock timer for a block of work.

    Args:
        name(str): label used in the log line, default `None`
        unit(str): either second `s` or millisecond `ms`
        verbose(bool): whether to log the measured time

    Examples:
        >>> with TimeIt('spectrum') as ti:
        >>>     spectrum = build_spectrum(params)
        >>>     cost = ti.break_point(restart=True)
        >>> ti.cost_time

    """
    def __init__(self, name=None, unit='s', verbose=True):
        if unit not in ('s', 'ms'):
            raise ValueError('the unit of time is either `s` or `ms`, got `{}`.'.format(unit))
        self.name = name if name is not None else 'None'
        self.unit = unit
        self.verbose = verbose
        self.start_time = None
        self.restart_time = None  # last break point
        self.cost_time = None

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, *args, **kwargs):
        self.cost_time = time.perf_counter() - self.start_time
        self._report('totally costs', self.cost_time)

    def start(self):
        self.start_time = time.perf_counter()
        self.restart_time = self.start_time

    def break_point(self, restart=True):
        """ time elapsed since the start, or since the last break point when
        `restart` is True.
        """
        now = time.perf_counter()
        if restart:
            cost_time = now - self.restart_time
        else:
            cost_time = now - self.start_time

        self._report('break point costs', cost_time)
        self.restart_time = now
        return cost_time

    def _report(self, what, cost_time):
        if not self.verbose:
            return
        logger = logging.getLogger('decosim')
        if self.unit == 's':
            logger.info('{0:s} {1:s} {2:.3f} s.'.format(self.name, what, cost_time))
        else:
            logger.info('{0:s} {1:s} {2:.1f} ms.'.format(self.name, what, cost_time * 1000))
