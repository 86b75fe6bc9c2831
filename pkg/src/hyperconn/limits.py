"""Default resource limits, overridable per call or via environment."""

import os

DEFAULT_VERTEX_CAP = 25
DEFAULT_PSI_BUDGET = 1_000_000
DEFAULT_TRIANGULATED_CAP = 16
DEFAULT_COMBINATION_CAP = 10_000_000


def vertex_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get("HYPERCONN_VERTEX_CAP", DEFAULT_VERTEX_CAP))


def psi_budget(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get("HYPERCONN_PSI_BUDGET", DEFAULT_PSI_BUDGET))


def triangulated_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get("HYPERCONN_TRIANGULATED_CAP", DEFAULT_TRIANGULATED_CAP))
