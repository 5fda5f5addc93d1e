"""Resource caps and their environment-variable overrides.

Every cap is a plain module function so callers always see the current
environment; nothing is cached at import time.
"""

import os

_ENV_ENUM_CAP = "CUBECODES_ENUM_CAP"
_ENV_GRAPH_CAP = "CUBECODES_GRAPH_CAP"
_ENV_ENGINE_CAP = "CUBECODES_ENGINE_CAP"
_ENV_BUDGET_NODES = "CUBECODES_BUDGET_NODES"
_ENV_BUDGET_SECONDS = "CUBECODES_BUDGET_SECONDS"

DEFAULT_ENUM_CAP = 1 << 20
DEFAULT_GRAPH_CAP = 1 << 17
DEFAULT_ENGINE_CAP = 1 << 12


class ResourceLimitError(RuntimeError):
    """A requested computation exceeds a configured resource cap."""

    def __init__(self, message: str, cap_name: str, cap_value: int):
        super().__init__(message)
        self.cap_name = cap_name
        self.cap_value = cap_value


def _int_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    return int(raw)


def _float_env(name: str):
    raw = os.environ.get(name)
    if raw is None:
        return None
    return float(raw)


def enum_cap() -> int:
    """Maximum number of candidate words an enumeration may scan."""
    return _int_env(_ENV_ENUM_CAP, DEFAULT_ENUM_CAP)


def graph_cap() -> int:
    """Maximum vertex count for a materialized induced graph."""
    return _int_env(_ENV_GRAPH_CAP, DEFAULT_GRAPH_CAP)


def engine_cap() -> int:
    """Maximum vertex count the exact-cover search engine accepts."""
    return _int_env(_ENV_ENGINE_CAP, DEFAULT_ENGINE_CAP)


def default_node_budget():
    """Default search node budget (None = unbounded)."""
    raw = os.environ.get(_ENV_BUDGET_NODES)
    return int(raw) if raw is not None else None


def default_time_budget():
    """Default search time budget in seconds (None = unbounded)."""
    return _float_env(_ENV_BUDGET_SECONDS)
