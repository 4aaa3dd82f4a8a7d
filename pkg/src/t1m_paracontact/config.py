"""Shared numerical tolerances and environment-driven configuration."""

from __future__ import annotations

import os

# Default comparison tolerances: relative 1e-9, absolute 1e-12 near zero.
DEFAULT_RTOL = 1e-9
DEFAULT_ATOL = 1e-12

# Absolute tolerance for exact-zero tests (degeneracy boundaries, b = 0, ...).
ZERO_TOL = 1e-12

# Gap threshold used to cluster eigenvalues into multiplicities.
EIGEN_GAP = 1e-7

# Environment variables.
ENV_TOL = "PARACONTACT_TOL"
ENV_BACKEND = "PARACONTACT_BACKEND"


def residual_tolerance(default: float) -> float:
    """Tolerance for a residual gate; PARACONTACT_TOL overrides every default."""
    raw = os.environ.get(ENV_TOL)
    if raw is None:
        return default
    value = float(raw)
    if value <= 0.0:
        raise ValueError(f"{ENV_TOL} must be positive, got {raw!r}")
    return value


def isclose(x: float, y: float, rtol: float = DEFAULT_RTOL, atol: float = DEFAULT_ATOL) -> bool:
    return abs(x - y) <= atol + rtol * max(abs(x), abs(y))


def iszero(x: float, atol: float = ZERO_TOL) -> bool:
    return abs(x) <= atol
