"""
species-operads environment configuration

Loads variables from a .env.operads file or the system environment.
Isolated environments (CI runners, containers) skip the file lookup.
"""

import logging
import os
from pathlib import Path
from typing import Dict, Optional

from dotenv import dotenv_values, load_dotenv

logger = logging.getLogger(__name__)

ENV_FILE_NAME = ".env.operads"

ENV_VALUES: Dict[str, Optional[str]] = {}

# Set IS_ISOLATED_ENVIRONMENT=true where no .env.operads file should be read
is_isolated_environment = (
    os.environ.get("IS_ISOLATED_ENVIRONMENT", "false").lower() == "true"
)

if not is_isolated_environment:
    project_env_path = Path(__file__).parent.parent.parent / ENV_FILE_NAME
    cwd_env_path = Path.cwd() / ENV_FILE_NAME

    for env_path in (project_env_path, cwd_env_path):
        if env_path.exists():
            load_dotenv(env_path)
            ENV_VALUES = dict(dotenv_values(env_path))
            break
    else:
        logger.debug(
            f"{ENV_FILE_NAME} not found, using system environment variables only. "
            f"Searched: {project_env_path}, {cwd_env_path}"
        )

# Law-check bounds
ENV_VALUES["OPERADS_MAX_S"] = os.getenv("OPERADS_MAX_S", "3")
ENV_VALUES["OPERADS_MAX_T"] = os.getenv("OPERADS_MAX_T", "2")
ENV_VALUES["OPERADS_MAX_R"] = os.getenv("OPERADS_MAX_R", "2")
ENV_VALUES["OPERADS_MAX_TOTAL"] = os.getenv("OPERADS_MAX_TOTAL", "4")

# Guard against combinatorial blowup
ENV_VALUES["OPERADS_MAX_INSTANCES"] = os.getenv("OPERADS_MAX_INSTANCES", "500000")
ENV_VALUES["OPERADS_ALLOW_LARGE"] = os.getenv("OPERADS_ALLOW_LARGE", "false")

# CLI logging
ENV_VALUES["OPERADS_LOG_LEVEL"] = os.getenv("OPERADS_LOG_LEVEL", "WARNING")

ENV_VALUES["IS_ISOLATED_ENVIRONMENT"] = os.getenv("IS_ISOLATED_ENVIRONMENT", "false")


def get_env(key: str, default: str = "") -> str:
    """
    Get environment variable value.

    Args:
        key: Environment variable key
        default: Default value if key not found

    Returns:
        Environment variable value or default
    """
    value = ENV_VALUES.get(key)
    return default if value is None else value


def get_env_bool(key: str, default: bool = False) -> bool:
    """
    Get environment variable as boolean.

    Args:
        key: Environment variable key
        default: Default value if key not found

    Returns:
        Boolean value
    """
    return get_env(key, str(default)).lower() in ("true", "1", "yes", "on")


def get_env_int(key: str, default: int = 0) -> int:
    """
    Get environment variable as integer.

    Args:
        key: Environment variable key
        default: Default value if key not found or not an integer

    Returns:
        Integer value
    """
    try:
        return int(get_env(key, str(default)))
    except (ValueError, TypeError):
        return default
