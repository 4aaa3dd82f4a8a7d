"""Structure tensors of g-natural (para)contact metric structures on T1M.

A paracontact structure is determined by three parameters (a, b, c) with
alpha = a(a+c) - b**2 < 0; the fourth constant is forced to d = -4*alpha - (a+c)
and the characteristic field is xi = rho * u^h with rho**2 = 1/(a+c+d).
Contact structures (used by the deformation maps) satisfy instead a > 0,
alpha > 0 and a+c+d = 4*alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .config import iszero
from .curvature_models import CurvatureModel, curvature_table, jacobi_matrix
from .errors import (
    AdmissibilityError,
    DegenerateMetricError,
    DimensionMismatchError,
    GeometryError,
    NormalizationRequiredError,
    UnsupportedParametersError,
)
from .frames import T1MVector, gram_matrix, t1m_vector
from .gnatural import MetricParams


class Flavor(Enum):
    PARACONTACT = "paracontact"
    CONTACT = "contact"


@dataclass(frozen=True)
class ParacontactStructure:
    """Validated parameter bundle (a, b, c, d, rho) of one structure.

    rho may be negative for structures obtained by a homothety with t < 0
    (the characteristic field rescales as xi/t); build_structure always
    returns rho > 0.
    """

    params: MetricParams
    rho: float
    flavor: Flavor = Flavor.PARACONTACT

    def __post_init__(self) -> None:
        if not math.isfinite(self.rho) or self.rho == 0.0:
            raise GeometryError("rho must be finite and nonzero")

    @property
    def alpha(self) -> float:
        return self.params.alpha

    @property
    def phi(self) -> float:
        return self.params.phi

    def validate(self) -> dict[str, float]:
        """Residuals of the defining compatibility relations."""
        trace = self.params.trace
        alpha = self.alpha
        target = -4.0 * alpha if self.flavor is Flavor.PARACONTACT else 4.0 * alpha
        return {
            "trace_vs_4alpha": abs(trace - target),
            "trace_vs_inv_rho_sq": abs(trace - 1.0 / self.rho**2),
        }


def build_structure(a: float, b: float, c: float, flavor: Flavor = Flavor.PARACONTACT) -> ParacontactStructure:
    """Construct the structure with d and rho derived from (a, b, c)."""
    alpha = a * (a + c) - b * b
    if iszero(alpha):
        raise DegenerateMetricError(f"alpha = {alpha} is degenerate")
    if flavor is Flavor.PARACONTACT:
        if alpha > 0.0:
            raise AdmissibilityError(f"paracontact structures need alpha < 0, got {alpha}")
        d = -4.0 * alpha - (a + c)
        trace = -4.0 * alpha
    else:
        if a <= 0.0 or alpha < 0.0:
            raise AdmissibilityError(f"contact structures need a > 0 and alpha > 0, got a={a}, alpha={alpha}")
        d = 4.0 * alpha - (a + c)
        trace = 4.0 * alpha
    rho = 1.0 / math.sqrt(trace)
    return ParacontactStructure(MetricParams(a, b, c, d), rho, flavor)


def xi(structure: ParacontactStructure, base_dim: int) -> T1MVector:
    """Characteristic vector field rho * u^h at the point."""
    h = np.zeros(base_dim)
    h[0] = structure.rho
    return T1MVector(h, np.zeros(base_dim))


def eta(structure: ParacontactStructure, v: T1MVector) -> float:
    """Dual 1-form: eta(X^h) = <X,u>/rho, eta(Y^t) = b*rho*<Y,u>."""
    return v.h[0] / structure.rho + structure.params.b * structure.rho * v.t[0]


def phi_apply(structure: ParacontactStructure, v: T1MVector) -> T1MVector:
    """Apply the structure endomorphism, including the <.,u> correction terms."""
    p = structure.params
    coef = 1.0 / (2.0 * structure.rho * p.alpha)
    trace = p.trace
    x, y = v.h, v.t
    h_raw = coef * (-p.b * x - p.a * y)
    h_raw[0] += coef * (p.b * p.d / trace * x[0] + p.phi / trace * y[0])
    t_raw = coef * ((p.a + p.c) * x + p.b * y)
    return t1m_vector(p, h_raw, t_raw)


@dataclass(frozen=True)
class EigendistributionBasis:
    """Bases of the +1 and -1 eigendistributions of the endomorphism."""

    plus: tuple[T1MVector, ...]
    minus: tuple[T1MVector, ...]


def eigendistributions(structure: ParacontactStructure, base_dim: int) -> EigendistributionBasis:
    """Frame bases of both eigendistributions (paracontact flavor only)."""
    if structure.flavor is not Flavor.PARACONTACT:
        raise AdmissibilityError("eigendistributions are defined for the paracontact flavor")
    p = structure.params
    n = base_dim - 1
    eye = np.eye(base_dim)

    def mixed(i: int, slope: float) -> T1MVector:
        return T1MVector(eye[i], -slope * eye[i])

    def tangential(i: int) -> T1MVector:
        return T1MVector(np.zeros(base_dim), eye[i])

    if not iszero(p.a):
        slope_plus = (p.b + 2.0 * structure.rho * p.alpha) / p.a
        slope_minus = (p.b - 2.0 * structure.rho * p.alpha) / p.a
        plus = tuple(mixed(i, slope_plus) for i in range(1, n + 1))
        minus = tuple(mixed(i, slope_minus) for i in range(1, n + 1))
    else:
        slope = p.c / (2.0 * p.b)
        if p.b * structure.rho > 0.0:
            plus = tuple(mixed(i, slope) for i in range(1, n + 1))
            minus = tuple(tangential(i) for i in range(1, n + 1))
        else:
            plus = tuple(tangential(i) for i in range(1, n + 1))
            minus = tuple(mixed(i, slope) for i in range(1, n + 1))
    return EigendistributionBasis(plus, minus)


def _require_model_dim(model: CurvatureModel, base_dim: int) -> None:
    if model.base_dim != base_dim:
        raise DimensionMismatchError(
            f"model dimension {model.base_dim} does not match vectors of dimension {base_dim}"
        )


def h_apply(structure: ParacontactStructure, model: CurvatureModel, v: T1MVector) -> T1MVector:
    """Apply the characteristic shape tensor h of the structure.

    For phi <= 0 (and a != 0) the evaluation is routed through the smallest
    phi-normalizing homothety and scaled back (h = t * h_t); for a = 0 no
    normalization exists and the operation is unsupported.
    """
    if structure.flavor is not Flavor.PARACONTACT:
        raise AdmissibilityError("h is implemented for the paracontact flavor")
    p = structure.params
    _require_model_dim(model, v.base_dim)
    if p.phi <= 0.0:
        if iszero(p.a):
            raise UnsupportedParametersError("a = 0 keeps phi < 0 under every homothety")
        from .deform import normalize_phi

        normalized, t = normalize_phi(structure)
        return t * h_apply(normalized, model, v)
    alpha = p.alpha
    ac = p.a + p.c
    ju = jacobi_matrix(model, np.eye(v.base_dim)[0])
    x = v.h.copy()
    x[0] = 0.0  # h(u^h) = 0; only the part orthogonal to u contributes
    y = v.t
    ru_x = ju.T @ x
    ru_y = ju.T @ y
    h_raw = (-ac * x + p.a * ru_x - 2.0 * p.b * y) / (4.0 * alpha)
    t_raw = (-2.0 * p.b * ru_x + ac * y - p.a * ru_y) / (4.0 * alpha)
    return t1m_vector(p, h_raw, t_raw)


def _require_phi_positive(structure: ParacontactStructure) -> None:
    if structure.params.phi <= 0.0:
        raise NormalizationRequiredError(
            f"phi = {structure.params.phi} <= 0: apply deform.normalize_phi first"
        )


def nabla(
    structure: ParacontactStructure,
    model: CurvatureModel,
    v: T1MVector,
    w: T1MVector,
    base_deriv: np.ndarray | None = None,
) -> T1MVector:
    """Covariant derivative of the lift field of w in the direction v.

    Both arguments are lifts of constant extensions; base_deriv supplies the
    base-manifold derivative value and is only meaningful for pure lifts
    (horizontal/horizontal places it horizontally, horizontal/tangential
    tangentially).  Requires phi > 0.
    """
    _require_phi_positive(structure)
    _require_model_dim(model, v.base_dim)
    if w.base_dim != v.base_dim:
        raise DimensionMismatchError("arguments live in different base dimensions")
    p = structure.params
    a, b, c, d = p.a, p.b, p.c, p.d
    ac = a + c
    alpha = p.alpha
    trace = p.trace
    dim = v.base_dim
    table = curvature_table(model)

    def curv(x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        return np.einsum("ijkl,i,j,k->l", table, x, y, z)

    u = np.eye(dim)[0]
    h_out = np.zeros(dim)
    t_out = np.zeros(dim)

    if base_deriv is not None:
        dv = np.asarray(base_deriv, dtype=float)
        if np.any(dv != 0.0):
            v_horizontal = not np.any(v.t)
            if v_horizontal and not np.any(w.t):
                h_out += dv
            elif v_horizontal and not np.any(w.h):
                t_out += dv
            else:
                raise GeometryError("base_deriv is only supported for pure-lift arguments")

    xv, yv = v.h, v.t
    xw, yw = w.h, w.t

    # Horizontal direction acting on a horizontal lift.
    if np.any(xv != 0.0) and np.any(xw != 0.0):
        r_xy = curv(xv, u, xw)
        r_yx = curv(xw, u, xv)
        q = r_xy @ u
        h_out += (
            -a * b / (2.0 * alpha) * (r_xy + r_yx)
            + b * d / (2.0 * alpha) * (xv[0] * xw + xw[0] * xv)
            + b / (trace * alpha) * ((a * d + b * b) * q - d * trace * xv[0] * xw[0]) * u
        )
        t_out += (
            b * b / alpha * r_xy
            - a * ac / (2.0 * alpha) * curv(xv, xw, u)
            - ac * d / (2.0 * alpha) * (xw[0] * xv + xv[0] * xw)
            + (1.0 / alpha) * (-b * b * q + d * ac * xw[0] * xv[0]) * u
        )

    # Horizontal direction acting on a tangential lift.
    if np.any(xv != 0.0) and np.any(yw != 0.0):
        r_yx = curv(yw, u, xv)
        q = curv(xv, u, yw) @ u
        h_out += (
            -a * a / (2.0 * alpha) * r_yx
            + a * d / (2.0 * alpha) * xv[0] * yw
            + 1.0 / (2.0 * trace * alpha) * (a * (a * d + b * b) * q + d * alpha * (xv @ yw)) * u
        )
        t_out += (
            a * b / (2.0 * alpha) * r_yx
            - b * d / (2.0 * alpha) * xv[0] * yw
            - a * b / (2.0 * alpha) * q * u
        )

    # Tangential direction acting on a horizontal lift.
    if np.any(yv != 0.0) and np.any(xw != 0.0):
        r_xy = curv(yv, u, xw)
        q = r_xy @ u
        h_out += (
            -a * a / (2.0 * alpha) * r_xy
            + a * d / (2.0 * alpha) * xw[0] * yv
            + 1.0 / (2.0 * trace * alpha) * (a * (a * d + b * b) * q + d * alpha * (yv @ xw)) * u
        )
        t_out += (
            a * b / (2.0 * alpha) * r_xy
            - b * d / (2.0 * alpha) * xw[0] * yv
            - a * b / (2.0 * alpha) * q * u
        )

    # Tangential on tangential vanishes at the point.
    return t1m_vector(p, h_out, t_out)


def nabla_xi(structure: ParacontactStructure, model: CurvatureModel, v: T1MVector) -> T1MVector:
    """Covariant derivative of the characteristic field in the direction v."""
    _require_phi_positive(structure)
    _require_model_dim(model, v.base_dim)
    p = structure.params
    a, b, d = p.a, p.b, p.d
    ac = p.a + p.c
    alpha = p.alpha
    rho = structure.rho
    ju = jacobi_matrix(model, np.eye(v.base_dim)[0])
    x = v.h.copy()
    x[0] = 0.0  # the u^h-direction derivative of xi vanishes
    y = v.t
    ru_x = ju.T @ x
    ru_y = ju.T @ y
    coef = rho / (2.0 * alpha)
    h_raw = coef * (b * d * x - a * b * ru_x + (a * d + 2.0 * alpha) * y - a * a * ru_y)
    t_raw = coef * (-ac * d * x + (b * b - alpha) * ru_x - b * d * y + a * b * ru_y)
    return t1m_vector(p, h_raw, t_raw)


def cov_phi(
    structure: ParacontactStructure,
    model: CurvatureModel,
    z: T1MVector,
    w: T1MVector,
) -> T1MVector:
    """Covariant derivative of the structure endomorphism applied to w.

    The value is tensorial in both slots; it is computed with constant
    extensions, keeping the derivative of the <.,u> scalar factors (which is
    nonzero in fiber directions even when the factor vanishes at the point).
    """
    _require_phi_positive(structure)
    _require_model_dim(model, z.base_dim)
    p = structure.params
    dim = z.base_dim
    u = np.eye(dim)[0]
    coef = 1.0 / (2.0 * structure.rho * p.alpha)

    x0 = w.h[0]
    x_perp = w.h.copy()
    x_perp[0] = 0.0
    y = w.t
    w_perp = T1MVector(x_perp, y)

    zero = np.zeros(dim)
    # d/dZ of <X,u> and <Y,u> along the lift of Z: only the fiber part moves u.
    ds_x = float(z.t @ x_perp)
    ds_y = float(z.t @ y)

    term = T1MVector.zero(dim)
    if np.any(x_perp != 0.0):
        term = term + (-p.b * coef) * nabla(structure, model, z, T1MVector(x_perp, zero))
        term = term + ((p.a + p.c) * coef) * nabla(structure, model, z, T1MVector(zero, x_perp))
    if np.any(y != 0.0):
        term = term + (-p.a * coef) * nabla(structure, model, z, T1MVector(y, zero))
        term = term + (p.b * coef) * nabla(structure, model, z, T1MVector(zero, y))
    scalar = coef * (p.b * p.d / p.trace * ds_x + p.phi / p.trace * ds_y)
    term = term + T1MVector(scalar * u, zero)
    term = term - phi_apply(structure, nabla(structure, model, z, w_perp))

    eta_w = eta(structure, w)
    if eta_w != 0.0:
        term = term - eta_w * phi_apply(structure, nabla_xi(structure, model, z))
    return term


def phi_matrix(structure: ParacontactStructure, n: int) -> np.ndarray:
    """Matrix of the structure endomorphism in the adapted basis (2n+1 square)."""
    dim = 2 * n + 1
    mat = np.zeros((dim, dim))
    for j in range(dim):
        e = np.zeros(dim)
        e[j] = 1.0
        mat[:, j] = phi_apply(structure, T1MVector.from_components(e)).components()
    return mat


def h_matrix(structure: ParacontactStructure, model: CurvatureModel, n: int) -> np.ndarray:
    """Matrix of the shape tensor h in the adapted basis."""
    dim = 2 * n + 1
    mat = np.zeros((dim, dim))
    for j in range(dim):
        e = np.zeros(dim)
        e[j] = 1.0
        mat[:, j] = h_apply(structure, model, T1MVector.from_components(e)).components()
    return mat


def eta_row(structure: ParacontactStructure, n: int) -> np.ndarray:
    row = np.zeros(2 * n + 1)
    row[0] = 1.0 / structure.rho
    return row


def sample_components(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform [-1,1] components in the adapted basis, shape (2n+1, count)."""
    return rng.uniform(-1.0, 1.0, size=(2 * n + 1, count))


@dataclass(frozen=True)
class AxiomReport:
    """Named residuals of the structure axioms (and h properties if evaluated)."""

    flavor: Flavor
    residuals: dict[str, float]
    samples: int
    seed: int

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    def to_jsonable(self) -> dict:
        return {
            "flavor": self.flavor.value,
            "samples": self.samples,
            "seed": self.seed,
            "residuals": dict(self.residuals),
            "max_residual": self.max_residual,
        }


def verify_axioms(
    structure: ParacontactStructure,
    model: CurvatureModel | None = None,
    samples: int = 64,
    seed: int = 0,
    base_dim: int = 3,
) -> AxiomReport:
    """Residuals of the structure axioms over sampled vectors.

    With a model the h-tensor property residuals (self-adjointness, vanishing
    trace, eta o h = 0, anticommutation with the endomorphism) are included.
    """
    if model is not None:
        base_dim = model.base_dim
    n = base_dim - 1
    dim = 2 * n + 1
    rng = np.random.default_rng(seed)
    vs = sample_components(n, samples, rng)
    ws = sample_components(n, samples, rng)

    p = structure.params
    g = gram_matrix(p, n)
    phi = phi_matrix(structure, n)
    eta_v = eta_row(structure, n)
    xi_c = xi(structure, base_dim).components()
    sign = 1.0 if structure.flavor is Flavor.PARACONTACT else -1.0

    phi_vs = phi @ vs
    phi_ws = phi @ ws
    # phi^2 = sign * (I - eta (x) xi)   (paracontact +, contact -)
    sq = phi @ phi_vs - sign * (vs - np.outer(xi_c, eta_v @ vs))
    res_sq = float(np.max(np.sqrt(np.sum(sq * sq, axis=0)))) if samples else 0.0
    # g(phi V, phi W) = -sign * g(V, W) + eta(V) eta(W)
    compat = phi_vs.T @ g @ phi_ws + sign * (vs.T @ g @ ws) - np.outer(eta_v @ vs, eta_v @ ws)
    res_compat = float(np.max(np.abs(compat)))
    res_eta_phi = float(np.max(np.abs(eta_v @ phi_vs)))
    skew = vs.T @ g @ phi_ws + phi_vs.T @ g @ ws
    res_skew = float(np.max(np.abs(skew)))
    res_eta_dual = float(np.max(np.abs(eta_v @ vs - xi_c @ g @ vs)))

    residuals = {
        "phi_square": res_sq,
        "compatibility": res_compat,
        "eta_after_phi": res_eta_phi,
        "phi_skew_adjoint": res_skew,
        "eta_duality": res_eta_dual,
    }
    if model is not None:
        hm = h_matrix(structure, model, n)
        h_vs = hm @ vs
        h_ws = hm @ ws
        residuals["h_xi"] = float(np.linalg.norm(hm @ xi_c))
        residuals["h_trace"] = abs(float(np.trace(hm)))
        residuals["h_self_adjoint"] = float(np.max(np.abs(vs.T @ g @ h_ws - h_vs.T @ g @ ws)))
        anti = (hm @ phi + phi @ hm) @ vs
        residuals["h_phi_anticommute"] = float(np.max(np.abs(anti)))
        residuals["eta_after_h"] = float(np.max(np.abs(eta_v @ h_vs)))
    return AxiomReport(structure.flavor, residuals, samples, seed)
