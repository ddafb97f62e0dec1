"""
Environment variable management for rectcross.

Reads the worker count from the process environment or the project's
.env file.
"""
import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import dotenv_values

logger = logging.getLogger(__name__)

WORKERS_VAR = "RECTCROSS_WORKERS"


def get_env_file_path() -> Path:
    """
    Get the path to the .env file.

    Returns:
        Path to .env file in project root
    """
    # .env lives in the project root (parent of src directory)
    return Path(__file__).parent.parent / '.env'


def read_env_value(name: str, env_file: Optional[Path] = None) -> Optional[str]:
    """
    Value of a variable, process environment first, then the .env file.

    Returns:
        The value, or None if unset or empty
    """
    value = os.environ.get(name)
    if value is None:
        path = env_file or get_env_file_path()
        if path.exists():
            value = dotenv_values(path).get(name)
    if value is None or not value.strip():
        return None
    return value.strip()


def read_worker_count(default: int = 1, env_file: Optional[Path] = None) -> int:
    """
    Worker count for parallel search restarts and suite instances.

    Invalid or non-positive values log a warning and fall back to default.
    """
    raw = read_env_value(WORKERS_VAR, env_file)
    if raw is None:
        return default
    try:
        workers = int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer; using %d", WORKERS_VAR, raw, default)
        return default
    if workers < 1:
        logger.warning("%s=%d must be at least 1; using %d", WORKERS_VAR, workers, default)
        return default
    return workers
