"""Global options read from the environment at import time.

``ZIGZAG_PROGRESSBAR``
    ``true``/``yes``/``on`` (default) shows tqdm progress bars for long
    certification and exploration loops.
``ZIGZAG_REPAIR_SHIFTS``
    Largest shift ``t`` tried when repairing a free family (default 20).
``ZIGZAG_DEFAULT_FAMILY``
    Comma separated rationals used as the default free family parameter set
    (default ``0,1,...,10``).
"""

import os

import logging
logger = logging.getLogger(__name__)

TRUTHY = ('true', 'yes', 'on')


def _flag(name, default):
    return os.getenv(name, default).strip().lower() in TRUTHY


def _positive_int(name, default):
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer, using %i." % (name, raw, default))
        return default
    if value < 1:
        logger.warning("Ignoring %s=%r: must be positive, using %i." % (name, raw, default))
        return default
    return value


PROGRESSBAR = _flag('ZIGZAG_PROGRESSBAR', 'true')
REPAIR_SHIFTS = _positive_int('ZIGZAG_REPAIR_SHIFTS', 20)
DEFAULT_FAMILY = os.getenv('ZIGZAG_DEFAULT_FAMILY', ','.join(str(i) for i in range(11)))
