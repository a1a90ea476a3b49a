"""
Logging Setup
=============
Configures the 'parasim' logger: stderr always, plus a daily log file
(logs/parasim_YYYYMMDD.log) when a log folder is configured.

Standard output is left alone so command output stays byte-identical
between runs.
"""

import logging
import os
import sys
from datetime import datetime

from parasim.config import get_config_path, get_project_root, read_json_config

LOG_FORMAT = '%(asctime)s %(levelname)-7s %(name)s: %(message)s'


def setup_logging(level=None, log_folder=None):
    """
    Configure the package logger once; later calls replace the handlers.

    Missing arguments come from config/logging_config.json.
    """
    settings = read_json_config(get_config_path('logging_config.json'))
    level = level or settings.get('level', 'WARNING')
    log_folder = log_folder or settings.get('log_folder')

    logger = logging.getLogger('parasim')
    logger.setLevel(level)
    logger.propagate = False

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(LOG_FORMAT)

    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(formatter)
    logger.addHandler(console)

    if log_folder:
        folder = os.path.join(get_project_root(), log_folder)
        os.makedirs(folder, exist_ok=True)
        filename = settings.get('filename_pattern', 'parasim_{date}.log').format(
            date=datetime.now().strftime('%Y%m%d')
        )
        file_handler = logging.FileHandler(os.path.join(folder, filename), encoding='utf-8')
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger
