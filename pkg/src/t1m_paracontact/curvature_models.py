"""Algebraic curvature models of the base manifold.

Supported models are locally symmetric (the curvature derivative vanishes
identically): constant sectional curvature, holomorphic space forms, and
explicit algebraic curvature tensors loaded from JSON.  The sign convention
throughout is R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import numpy as np

from .config import EIGEN_GAP
from .errors import DimensionMismatchError, GeometryError
from .frames import BaseVector, base_inner

_SYMMETRY_TOL = 1e-9


def standard_complex_structure(base_dim: int) -> np.ndarray:
    """Block-diagonal complex structure with J e_{2k} = e_{2k+1}."""
    if base_dim % 2:
        raise GeometryError("a complex structure needs an even dimension")
    j = np.zeros((base_dim, base_dim))
    for k in range(0, base_dim, 2):
        j[k + 1, k] = 1.0
        j[k, k + 1] = -1.0
    return j


@dataclass(frozen=True)
class ConstantCurvature:
    """Space form of constant sectional curvature cbar."""

    cbar: float
    base_dim: int

    def __post_init__(self) -> None:
        if self.base_dim < 2:
            raise GeometryError("base_dim must be at least 2")


@dataclass(frozen=True)
class ComplexSpaceForm:
    """Holomorphic space form of constant holomorphic curvature chol."""

    chol: float
    base_dim: int
    j_matrix: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.base_dim < 2 or self.base_dim % 2:
            raise GeometryError("a complex space form needs an even base_dim >= 2")
        j = self.j_matrix
        if j is None:
            j = standard_complex_structure(self.base_dim)
        j = np.asarray(j, dtype=float)
        if j.shape != (self.base_dim, self.base_dim):
            raise DimensionMismatchError("complex structure has wrong shape")
        if not np.allclose(j @ j, -np.eye(self.base_dim), atol=_SYMMETRY_TOL):
            raise GeometryError("complex structure must satisfy J^2 = -I")
        if not np.allclose(j.T @ j, np.eye(self.base_dim), atol=_SYMMETRY_TOL):
            raise GeometryError("complex structure must be orthogonal")
        j = j.copy()
        j.setflags(write=False)
        object.__setattr__(self, "j_matrix", j)


@dataclass(frozen=True)
class ExplicitModel:
    """Algebraic curvature tensor given by its (0,4) component table."""

    r4: np.ndarray

    def __post_init__(self) -> None:
        r4 = np.asarray(self.r4, dtype=float)
        if r4.ndim != 4 or len(set(r4.shape)) != 1:
            raise DimensionMismatchError("explicit tensor must be a (d,d,d,d) array")
        residual = explicit_symmetry_residuals(r4)
        worst = max(residual, key=residual.get)
        if residual[worst] > _SYMMETRY_TOL:
            raise GeometryError(
                f"explicit tensor violates curvature symmetries: {worst} residual {residual[worst]:.3e}"
            )
        r4 = r4.copy()
        r4.setflags(write=False)
        object.__setattr__(self, "r4", r4)

    @property
    def base_dim(self) -> int:
        return self.r4.shape[0]


CurvatureModel = Union[ConstantCurvature, ComplexSpaceForm, ExplicitModel]


def explicit_symmetry_residuals(r4: np.ndarray) -> dict[str, float]:
    """Max violations of the four algebraic curvature symmetries."""
    return {
        "antisym_first_pair": float(np.max(np.abs(r4 + r4.transpose(1, 0, 2, 3)))),
        "antisym_second_pair": float(np.max(np.abs(r4 + r4.transpose(0, 1, 3, 2)))),
        "pair_interchange": float(np.max(np.abs(r4 - r4.transpose(2, 3, 0, 1)))),
        "first_bianchi": float(
            np.max(np.abs(r4 + r4.transpose(1, 2, 0, 3) + r4.transpose(2, 0, 1, 3)))
        ),
    }


def curvature_table(model: CurvatureModel) -> np.ndarray:
    """Component table Rv[i,j,k,l] = <R(e_i,e_j)e_k, e_l> in the adapted frame."""
    d = model.base_dim
    eye = np.eye(d)
    if isinstance(model, ConstantCurvature):
        return model.cbar * (
            np.einsum("jk,il->ijkl", eye, eye) - np.einsum("ik,jl->ijkl", eye, eye)
        )
    if isinstance(model, ComplexSpaceForm):
        # jm[i, l] = <J e_i, e_l>
        jm = model.j_matrix.T
        table = (
            np.einsum("jk,il->ijkl", eye, eye)
            - np.einsum("ik,jl->ijkl", eye, eye)
            + np.einsum("jk,il->ijkl", jm, jm)
            - np.einsum("ik,jl->ijkl", jm, jm)
            - 2.0 * np.einsum("ij,kl->ijkl", jm, jm)
        )
        return model.chol / 4.0 * table
    if isinstance(model, ExplicitModel):
        return np.array(model.r4)
    raise TypeError(f"unknown curvature model {type(model)!r}")


def curvature(model: CurvatureModel, x: BaseVector, y: BaseVector, z: BaseVector) -> BaseVector:
    """Curvature operator R(X,Y)Z of the base manifold."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    if not (x.shape == y.shape == z.shape == (model.base_dim,)):
        raise DimensionMismatchError("curvature arguments must match the model dimension")
    if isinstance(model, ConstantCurvature):
        return model.cbar * (base_inner(y, z) * x - base_inner(x, z) * y)
    if isinstance(model, ComplexSpaceForm):
        j = model.j_matrix
        jx, jy, jz = j @ x, j @ y, j @ z
        return (
            model.chol
            / 4.0
            * (
                base_inner(y, z) * x
                - base_inner(x, z) * y
                + base_inner(jy, z) * jx
                - base_inner(jx, z) * jy
                - 2.0 * base_inner(jx, y) * jz
            )
        )
    return np.einsum("ijkl,i,j,k->l", model.r4, x, y, z)


def jacobi(model: CurvatureModel, u: BaseVector, x: BaseVector) -> BaseVector:
    """Jacobi operator R_u X = R(X, u)u for a unit vector u."""
    u = np.asarray(u, dtype=float)
    if abs(base_inner(u, u) - 1.0) > 1e-9:
        raise GeometryError("the Jacobi operator needs a unit vector u")
    return curvature(model, x, u, u)


def jacobi_matrix(model: CurvatureModel, u: BaseVector) -> np.ndarray:
    """Matrix of the Jacobi operator in the frame: J[i, l] = (R_u e_i)_l."""
    table = curvature_table(model)
    u = np.asarray(u, dtype=float)
    return np.einsum("ijkl,j,k->il", table, u, u)


def jacobi_spectrum(model: CurvatureModel, u: BaseVector) -> list[tuple[float, int]]:
    """Eigenvalues of R_u on the orthogonal complement of u, with multiplicities."""
    u = np.asarray(u, dtype=float)
    if abs(base_inner(u, u) - 1.0) > 1e-9:
        raise GeometryError("the Jacobi operator needs a unit vector u")
    d = model.base_dim
    # Orthonormal basis of u-perp via QR completion of u.
    q, _ = np.linalg.qr(np.column_stack([u, np.eye(d)]))
    basis = q[:, 1:d]
    jm = jacobi_matrix(model, u)
    restricted = basis.T @ jm.T @ basis
    eigenvalues = np.linalg.eigvalsh(0.5 * (restricted + restricted.T))
    clusters: list[tuple[float, int]] = []
    for value in eigenvalues:
        if clusters and abs(value - clusters[-1][0]) <= EIGEN_GAP:
            prev, mult = clusters[-1]
            clusters[-1] = ((prev * mult + value) / (mult + 1), mult + 1)
        else:
            clusters.append((float(value), 1))
    return [(float(v), m) for v, m in clusters]


def explicit_from_json(source: Union[str, Path, dict]) -> ExplicitModel:
    """Load an explicit model from {"dim": d, "R4": nested array} JSON."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    else:
        payload = source
    if not isinstance(payload, dict) or "dim" not in payload or "R4" not in payload:
        raise GeometryError('explicit model JSON needs keys "dim" and "R4"')
    dim = int(payload["dim"])
    r4 = np.asarray(payload["R4"], dtype=float)
    if r4.shape != (dim, dim, dim, dim):
        raise DimensionMismatchError(
            f'"R4" must have shape ({dim},{dim},{dim},{dim}), got {r4.shape}'
        )
    return ExplicitModel(r4)


def model_from_descriptor(descriptor: str, base_dim: int) -> CurvatureModel:
    """Parse CLI model descriptors: const:<cbar>, cpx:<chol>, file:<path>."""
    kind, _, arg = descriptor.partition(":")
    if kind == "const":
        return ConstantCurvature(float(arg), base_dim)
    if kind == "cpx":
        return ComplexSpaceForm(float(arg), base_dim)
    if kind == "file":
        model = explicit_from_json(arg)
        if model.base_dim != base_dim:
            raise DimensionMismatchError(
                f"explicit model dimension {model.base_dim} != requested {base_dim}"
            )
        return model
    raise GeometryError(f"unknown model descriptor {descriptor!r} (use const:, cpx:, file:)")
