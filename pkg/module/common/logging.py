# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import os
import sys
import logging
from logging.handlers import RotatingFileHandler

from module.common.misc import do_error_exit

logger_name = "WW-Lab"

# solver iterations (Newton steps, Volterra progress)
DEBUG2 = 6
# raw quadrature diagnostics
DEBUG3 = 3

extra_log_levels = {
    "DEBUG2": DEBUG2,
    "DEBUG3": DEBUG3
}

valid_log_levels = ["DEBUG3", "DEBUG2", "DEBUG", "INFO", "WARNING", "ERROR"]

log_file_max_size_in_mb = 10
log_file_max_rotation = 5

log_format = '%(asctime)s - %(levelname)s: %(message)s'


def _make_level_method(level):

    def log_at_level(self, message, *args, **kwargs):
        if self.isEnabledFor(level):
            self._log(level, message, args, **kwargs)

    return log_at_level


for _level_name, _level in extra_log_levels.items():
    logging.addLevelName(_level, _level_name)
    setattr(logging.Logger, _level_name.lower(), _make_level_method(_level))


def get_logger():
    """
    common function to retrieve the project logger in all module files

    Returns
    -------
    logging.Logger: the project logger
    """

    return logging.getLogger(logger_name)


def numeric_log_level(log_level):
    """
    translate a log level name into its numeric value

    Parameters
    ----------
    log_level: str
        one of 'valid_log_levels'

    Returns
    -------
    int: numeric log level
    """

    if log_level is None or len(str(log_level)) == 0:
        do_error_exit("log level undefined or empty. Check config please.")

    log_level = str(log_level).upper()

    if log_level not in valid_log_levels:
        do_error_exit(f"Passed invalid log level: {log_level}")

    return extra_log_levels.get(log_level, getattr(logging, log_level, logging.INFO))


def setup_logging(log_level=None, log_file=None):
    """
    Set up logging for the whole program and return the project logger.
    Python warnings (scipy integration warnings and alike) get routed into the same handlers.

    Parameters
    ----------
    log_level: str
        valid log level to set logging to
    log_file: str
        name of the log file to log to, relative paths are based on the repository root

    Returns
    -------
    logging.Logger: the project logger
    """

    formatter = logging.Formatter(log_format)

    logger = get_logger()
    logger.setLevel(numeric_log_level(log_level))

    warnings_logger = logging.getLogger("py.warnings")

    # a repeated setup replaces the handlers of the previous one
    previous = set(logger.handlers) | set(warnings_logger.handlers)
    for handler in previous:
        logger.removeHandler(handler)
        warnings_logger.removeHandler(handler)
        handler.close()

    handlers = [logging.StreamHandler(sys.stdout)]

    if log_file is not None:
        if not os.path.isabs(log_file):
            base_dir = os.sep.join(__file__.split(os.sep)[0:-3])
            log_file = os.path.join(base_dir, log_file)

        try:
            os.makedirs(os.path.dirname(log_file), exist_ok=True)
            handlers.append(RotatingFileHandler(
                filename=log_file,
                maxBytes=log_file_max_size_in_mb * 1024 * 1024,
                backupCount=log_file_max_rotation
            ))
        except Exception as e:
            do_error_exit(f"Problems setting up log file: {e}")

    for handler in handlers:
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    # route warnings.warn() output through the same handlers
    logging.captureWarnings(True)
    for handler in handlers:
        warnings_logger.addHandler(handler)

    return logger

# EOF
