"""Backend selection for the curvature-block kernels.

PARACONTACT_BACKEND chooses the implementation: "numba" (njit-compiled
loops), "numpy" (vectorized einsum), or "auto" (default: numba when
importable, numpy otherwise).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..config import ENV_BACKEND
from . import np_blocks

BlockFn = Callable[..., tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class KernelSet:
    name: str
    block_i: BlockFn
    block_ii: BlockFn
    block_iii: BlockFn


_NUMBA_SET: KernelSet | None = None


def _numba_kernels() -> KernelSet:
    global _NUMBA_SET
    if _NUMBA_SET is None:
        import numba

        from . import nb_blocks

        jit = numba.njit(cache=True)
        _NUMBA_SET = KernelSet(
            "numba",
            jit(nb_blocks.block_i_impl),
            jit(nb_blocks.block_ii_impl),
            jit(nb_blocks.block_iii_impl),
        )
    return _NUMBA_SET


_NUMPY_SET = KernelSet("numpy", np_blocks.block_i, np_blocks.block_ii, np_blocks.block_iii)


def available_backends() -> list[str]:
    names = ["numpy"]
    try:
        import numba  # noqa: F401

        names.insert(0, "numba")
    except ImportError:
        pass
    return names


def resolve_backend(name: str | None = None) -> str:
    requested = name if name is not None else os.environ.get(ENV_BACKEND, "auto")
    requested = requested.strip().lower()
    if requested == "auto":
        return available_backends()[0]
    if requested not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {requested!r} (use auto, numba, or numpy)")
    if requested == "numba" and "numba" not in available_backends():
        raise RuntimeError("numba backend requested but numba is not importable")
    return requested


def get_kernels(name: str | None = None) -> KernelSet:
    """Resolve the kernel triple for a backend name (None = env/auto)."""
    if resolve_backend(name) == "numba":
        return _numba_kernels()
    return _NUMPY_SET
