import logging
import sys
from typing import Optional, TextIO

from .config import settings

LOGGER_NAME = "nevderiv"


def configure_logging(level: Optional[str] = None, stream: Optional[TextIO] = None) -> logging.Logger:
    """Attach a single stderr handler to the package logger"""
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel((level or settings.NEVDERIV_LOG_LEVEL).upper())

    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
    return logger
