"""Pointwise linear algebra at a point (x, u) of the unit tangent sphere bundle.

Everything is expressed in an adapted orthonormal frame {e_0 = u, e_1, ..., e_n}
of the base manifold.  A tangent vector of T1M splits into a horizontal part
(components of a base vector) and a tangential part orthogonal to u; the
adapted basis of the bundle tangent space is {u^h, e_i^h, e_i^t} with
i = 1, ..., n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .errors import DegenerateMetricError, DimensionMismatchError, GeometryError

if TYPE_CHECKING:  # pragma: no cover
    from .gnatural import MetricParams

#: Base tangent vectors are plain 1-D float arrays in the adapted frame.
BaseVector = np.ndarray


def _as_base_vector(coords, base_dim: int | None = None) -> np.ndarray:
    v = np.asarray(coords, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise GeometryError(f"base vector must be 1-D with length >= 2, got shape {v.shape}")
    if base_dim is not None and v.size != base_dim:
        raise DimensionMismatchError(f"expected dimension {base_dim}, got {v.size}")
    return v


@dataclass(frozen=True)
class Frame:
    """Adapted orthonormal frame with e_0 equal to the foot vector u."""

    base_dim: int

    def __post_init__(self) -> None:
        if self.base_dim < 2:
            raise GeometryError("base_dim must be at least 2")

    @property
    def n(self) -> int:
        return self.base_dim - 1

    @property
    def u(self) -> BaseVector:
        return self.e(0)

    def e(self, i: int) -> BaseVector:
        if not 0 <= i < self.base_dim:
            raise DimensionMismatchError(f"frame index {i} out of range for dim {self.base_dim}")
        v = np.zeros(self.base_dim)
        v[i] = 1.0
        return v


@dataclass(frozen=True)
class T1MVector:
    """Tangent vector of T1M at (x, u): horizontal part + tangential part.

    The tangential part is orthogonal to u exactly (first coordinate zero).
    """

    h: np.ndarray
    t: np.ndarray

    def __post_init__(self) -> None:
        h = _as_base_vector(self.h)
        t = _as_base_vector(self.t, h.size)
        if t[0] != 0.0:
            raise GeometryError("tangential part must be orthogonal to u (t[0] == 0)")
        h = h.copy()
        t = t.copy()
        h.setflags(write=False)
        t.setflags(write=False)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "t", t)

    @property
    def base_dim(self) -> int:
        return self.h.size

    def __add__(self, other: "T1MVector") -> "T1MVector":
        return T1MVector(self.h + other.h, self.t + other.t)

    def __sub__(self, other: "T1MVector") -> "T1MVector":
        return T1MVector(self.h - other.h, self.t - other.t)

    def __mul__(self, s: float) -> "T1MVector":
        return T1MVector(self.h * s, self.t * s)

    __rmul__ = __mul__

    def __neg__(self) -> "T1MVector":
        return self * -1.0

    def norm(self) -> float:
        """Euclidean norm of the frame components (not the bundle metric)."""
        return float(np.sqrt(self.h @ self.h + self.t @ self.t))

    def components(self) -> np.ndarray:
        """Components in the adapted basis {u^h, e_i^h, e_i^t}, length 2n+1."""
        return np.concatenate(([self.h[0]], self.h[1:], self.t[1:]))

    @staticmethod
    def from_components(comp: np.ndarray) -> "T1MVector":
        comp = np.asarray(comp, dtype=float)
        if comp.ndim != 1 or comp.size % 2 == 0:
            raise DimensionMismatchError(f"component vector must have odd length, got {comp.shape}")
        n = comp.size // 2
        h = np.concatenate(([comp[0]], comp[1 : n + 1]))
        t = np.concatenate(([0.0], comp[n + 1 :]))
        return T1MVector(h, t)

    @staticmethod
    def zero(base_dim: int) -> "T1MVector":
        return T1MVector(np.zeros(base_dim), np.zeros(base_dim))


def horizontal_lift(x: BaseVector) -> T1MVector:
    """Horizontal lift of an arbitrary base vector."""
    x = _as_base_vector(x)
    return T1MVector(x, np.zeros_like(x))


def base_inner(x: BaseVector, y: BaseVector) -> float:
    """Base metric in the orthonormal frame (Euclidean dot product)."""
    x = _as_base_vector(x)
    y = _as_base_vector(y, x.size)
    return float(x @ y)


def tangential_lift(params: "MetricParams", x: BaseVector) -> T1MVector:
    """Tangential lift of an arbitrary base vector.

    For x orthogonal to u this is the pure tangential part; a u-component is
    routed into the horizontal direction with weight b/(a+c+d).
    """
    x = _as_base_vector(x)
    trace = params.trace
    if abs(trace) <= 1e-300 or not np.isfinite(trace):
        raise DegenerateMetricError("tangential lift undefined: a + c + d = 0")
    x0 = x[0]
    t = x.copy()
    t[0] = 0.0
    h = np.zeros_like(x)
    h[0] = params.b / trace * x0
    return T1MVector(h, t)


def t1m_vector(params: "MetricParams", h_raw: BaseVector, t_raw: BaseVector) -> T1MVector:
    """Build h_raw^h + t_raw^t, splitting any u-component of t_raw per the lift rule."""
    h_raw = _as_base_vector(h_raw)
    t_raw = _as_base_vector(t_raw, h_raw.size)
    if t_raw[0] == 0.0:
        return T1MVector(h_raw, t_raw)
    lifted = tangential_lift(params, t_raw)
    return T1MVector(h_raw + lifted.h, lifted.t)


def t1m_inner(params: "MetricParams", v: T1MVector, w: T1MVector) -> float:
    """Induced metric on T1M evaluated on two tangent vectors.

    G(X1^h, X2^h) = (a+c)<X1,X2> + d<X1,u><X2,u>,
    G(X^h, Y^t)   = b<X,Y>,
    G(Y1^t, Y2^t) = a<Y1,Y2>.
    """
    if v.base_dim != w.base_dim:
        raise DimensionMismatchError("vectors live in different base dimensions")
    a, b, _, d = params.a, params.b, params.c, params.d
    ac = params.a + params.c
    return float(
        ac * (v.h @ w.h)
        + d * v.h[0] * w.h[0]
        + b * (v.h @ w.t + v.t @ w.h)
        + a * (v.t @ w.t)
    )


def gram_matrix(params: "MetricParams", n: int) -> np.ndarray:
    """Gram matrix of the adapted basis {u^h, e_i^h, e_i^t}, shape (2n+1, 2n+1)."""
    a, b, d = params.a, params.b, params.d
    ac = params.a + params.c
    g = np.zeros((2 * n + 1, 2 * n + 1))
    g[0, 0] = ac + d
    for i in range(1, n + 1):
        g[i, i] = ac
        g[n + i, n + i] = a
        g[i, n + i] = b
        g[n + i, i] = b
    return g
