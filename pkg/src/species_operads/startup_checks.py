"""
Startup validation for species-operads.

Validates configuration before any suite runs. If validation fails, the CLI
exits with an actionable error message instead of running with bounds that
make no sense.
"""

import logging

from .env import get_env

logger = logging.getLogger(__name__)

POSITIVE_INT_VARS = [
    "OPERADS_MAX_S",
    "OPERADS_MAX_T",
    "OPERADS_MAX_R",
    "OPERADS_MAX_TOTAL",
    "OPERADS_MAX_INSTANCES",
]

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# Smallest glued size at which A1 inserts two elements that are not units
MIN_TOTAL = 3


def validate_startup_config() -> dict:
    """
    Validate configuration at startup.

    Returns the parsed settings.
    Raises SystemExit with an actionable message if a variable is invalid.
    """
    problems = []
    settings = {}

    for var in POSITIVE_INT_VARS:
        raw = get_env(var, "")
        try:
            value = int(raw)
        except ValueError:
            problems.append(f"  {var}={raw!r} (must be a positive integer)")
            continue
        if value < 1:
            problems.append(f"  {var}={value} (must be a positive integer)")
        settings[var] = value

    total = settings.get("OPERADS_MAX_TOTAL")
    if total is not None and 0 < total < MIN_TOTAL:
        problems.append(
            f"  OPERADS_MAX_TOTAL={total} (must be at least {MIN_TOTAL} so "
            f"associativity has instances)"
        )

    level = get_env("OPERADS_LOG_LEVEL", "WARNING").upper()
    if level not in LOG_LEVELS:
        problems.append(f"  OPERADS_LOG_LEVEL={level} (one of {', '.join(LOG_LEVELS)})")
    settings["OPERADS_LOG_LEVEL"] = level

    if problems:
        msg = "Invalid configuration:\n" + "\n".join(problems)
        logger.critical(msg)
        raise SystemExit(msg)

    logger.debug(f"Startup validation passed: {settings}")
    return settings
