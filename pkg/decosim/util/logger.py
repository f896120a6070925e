# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.


import os
import sys
import logging
from logging.handlers import TimedRotatingFileHandler


LOGGER_NAME = 'decosim'

_LEVELS = {
    'CRITICAL': logging.CRITICAL,
    'ERROR': logging.ERROR,
    'WARN': logging.WARNING,
    'WARNING': logging.WARNING,
    'INFO': logging.INFO,
    'DEBUG': logging.DEBUG,
    'NOTSET': logging.NOTSET
}


def _logging_level_from_str(level):
    level = level.upper()
    if level in _LEVELS:
        return _LEVELS[level]
    return logging.INFO


def _refresh_logger(logger):
    while logger.handlers:
        logger.removeHandler(logger.handlers[0])
    return logger


def set_logger(level='INFO', log_dir_name='.cache/decosim'):
    """ decosim logger

    Args:
        level(str): level of logger, silent if set to `None`
        log_dir_name(str): directory under `~` (or absolute) for rotating log
            files, no file output if `None`

    Returns:
        logging.Logger: the package logger, reconfigured in place

    """
    logger = logging.getLogger(LOGGER_NAME)
    _refresh_logger(logger)
    logger.propagate = False

    if level is None:
        logger.addHandler(logging.NullHandler())
        return logger

    level = _logging_level_from_str(level)
    logger.setLevel(level)

    formatter = logging.Formatter(
        fmt="%(asctime)s %(levelname)s %(funcName)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S")

    stream_handler = logging.StreamHandler(sys.stdout)
    stream_handler.setLevel(level)
    stream_handler.setFormatter(formatter)

    filename_directory = None
    if log_dir_name is not None:
        if os.path.isabs(log_dir_name):
            filename_directory = log_dir_name
        else:
            filename_directory = os.path.join(os.path.expanduser('~'), log_dir_name)
        os.makedirs(filename_directory, exist_ok=True)

        file_handler = TimedRotatingFileHandler(
            os.path.join(filename_directory, "log.txt"),
            when="midnight", backupCount=30)
        file_handler.setLevel(level)
        file_handler.suffix = "%Y%m%d"
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    logger.addHandler(stream_handler)

    length = 20
    logger.debug("-" * length + " logging start " + "-" * length)
    logger.debug("LEVEL: {}".format(logging.getLevelName(level)))
    if filename_directory is not None:
        logger.debug("PATH:  {}".format(filename_directory))
    logger.debug("-" * (length * 2 + 15))

    return logger
