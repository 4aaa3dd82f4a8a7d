"""Homothetic deformations and the contact-to-paracontact parameter maps.

A homothety with scalar t rescales the structure as
g_t = t*g + t*(t-1)*eta(x)eta, eta_t = t*eta, xi_t = xi/t, phi_t = phi,
h_t = h/t; on parameters this is (a,b,c,d,rho) ->
(ta, tb, tc, t*(d + (t-1)/rho**2), rho/t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import iszero
from .curvature_models import ConstantCurvature, CurvatureModel
from .errors import (
    GeometryError,
    InconsistencyError,
    SasakianLimitError,
    UnsupportedParametersError,
)
from .frames import T1MVector, t1m_inner
from .gnatural import MetricParams
from .paracontact import (
    Flavor,
    ParacontactStructure,
    build_structure,
    eta,
    h_apply,
    phi_apply,
    sample_components,
    xi,
)


def _check_scalar(t: float) -> float:
    t = float(t)
    if not math.isfinite(t) or t == 0.0:
        raise GeometryError("the deformation scalar t must be finite and nonzero")
    return t


def d_homothetic(structure: ParacontactStructure, t: float) -> ParacontactStructure:
    """Parameter-level homothetic deformation of a structure."""
    t = _check_scalar(t)
    p = structure.params
    inv_rho_sq = p.trace  # equals 1/rho**2 for a valid structure
    params_t = MetricParams(t * p.a, t * p.b, t * p.c, t * (p.d + (t - 1.0) * inv_rho_sq))
    return ParacontactStructure(params_t, structure.rho / t, structure.flavor)


def normalize_phi(structure: ParacontactStructure) -> tuple[ParacontactStructure, float]:
    """Smallest-magnitude integer homothety making phi positive.

    Returns (structure, 1.0) when phi is already positive.  The search moves
    in the growth direction sign(a); for a = 0 phi stays negative under every
    homothety and the operation is unsupported.
    """
    if structure.params.phi > 0.0:
        return structure, 1.0
    a = structure.params.a
    if iszero(a):
        raise UnsupportedParametersError("a = 0: phi = -b**2 < 0 is homothety-invariant")
    sign = 1.0 if a > 0.0 else -1.0
    for k in range(1, 1_000_000):
        t = sign * k
        candidate = d_homothetic(structure, t)
        if candidate.params.phi > 0.0:
            return candidate, t
    raise UnsupportedParametersError("no admissible normalizing homothety found")


def dhom_kappa_mu(kappa: float, mu: float, t: float) -> tuple[float, float]:
    """Transformation of the space-form invariants under a homothety."""
    t = _check_scalar(t)
    return (kappa + 1.0 - t * t) / (t * t), (mu + 2.0 * t - 2.0) / t


@dataclass(frozen=True)
class DeformCheckReport:
    """Residuals comparing deformed tensors against the rescaling laws."""

    t: float
    residuals: dict[str, float]

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    def to_jsonable(self) -> dict:
        return {"t": self.t, "residuals": dict(self.residuals), "max_residual": self.max_residual}


def d_homothetic_tensors_check(
    structure: ParacontactStructure,
    model: CurvatureModel,
    t: float,
    samples: int = 64,
    seed: int = 0,
) -> DeformCheckReport:
    """Compare tensors built from deformed parameters with deformed tensors.

    Checks g_t = t*g + t*(t-1)*eta(x)eta, eta_t = t*eta, xi_t = xi/t,
    phi_t = phi and h_t = h/t on sampled vectors; both phi values must be
    positive for the h comparison.
    """
    t = _check_scalar(t)
    deformed = d_homothetic(structure, t)
    base_dim = model.base_dim
    n = base_dim - 1
    rng = np.random.default_rng(seed)
    comps = sample_components(n, samples, rng)
    vectors = [T1MVector.from_components(comps[:, j]) for j in range(samples)]

    res_g = 0.0
    res_eta = 0.0
    res_phi = 0.0
    res_h = 0.0
    for v in vectors:
        for w in vectors[: max(1, min(8, samples))]:
            g_t = t1m_inner(deformed.params, v, w)
            law = t * t1m_inner(structure.params, v, w) + t * (t - 1.0) * eta(structure, v) * eta(
                structure, w
            )
            res_g = max(res_g, abs(g_t - law))
        res_eta = max(res_eta, abs(eta(deformed, v) - t * eta(structure, v)))
        res_phi = max(res_phi, (phi_apply(deformed, v) - phi_apply(structure, v)).norm())
        res_h = max(
            res_h,
            (h_apply(deformed, model, v) - (1.0 / t) * h_apply(structure, model, v)).norm(),
        )
    res_xi = (xi(deformed, base_dim) - (1.0 / t) * xi(structure, base_dim)).norm()

    residuals = {
        "metric": res_g,
        "eta": res_eta,
        "xi": res_xi,
        "phi_tensor": res_phi,
        "h_tensor": res_h,
    }
    if isinstance(model, ConstantCurvature):
        from .classify import kappa_mu_values

        kappa, mu = kappa_mu_values(structure.params, model.cbar)
        kappa_t, mu_t = dhom_kappa_mu(kappa, mu, t)
        kappa_p, mu_p = kappa_mu_values(deformed.params, model.cbar)
        residuals["kappa_transform"] = abs(kappa_t - kappa_p)
        residuals["mu_transform"] = abs(mu_t - mu_p)
    return DeformCheckReport(t, residuals)


def contact_kappa_mu(structure: ParacontactStructure, cbar: float) -> tuple[float, float]:
    """Space-form invariants of a contact structure over constant curvature cbar."""
    if structure.flavor is not Flavor.CONTACT:
        raise GeometryError("contact_kappa_mu needs a contact-flavor structure")
    p = structure.params
    alpha = p.alpha
    kappa = (
        -(p.a**2) * cbar**2 + 2.0 * (alpha - p.b**2) * cbar + p.d * (2.0 * (p.a + p.c) + p.d)
    ) / (16.0 * alpha**2)
    mu = (p.d - p.a * cbar) / (2.0 * alpha)
    if kappa >= 1.0 - 1e-12:
        raise SasakianLimitError(f"kappa = {kappa} >= 1: the Sasakian case admits no such deformation")
    return kappa, mu


def kappa1_mu1(kappa: float, mu: float) -> tuple[float, float]:
    """Invariants of the first canonical deformation of a contact structure."""
    return (1.0 - mu / 2.0) ** 2 - 1.0, 2.0 * (1.0 - math.sqrt(1.0 - kappa))


def kappa2_mu2(kappa: float, mu: float) -> tuple[float, float]:
    """Invariants of the second canonical deformation of a contact structure."""
    return kappa - 2.0 + (1.0 - mu / 2.0) ** 2, 2.0


def _validate_deformed(
    label: str, aa: float, bb: float, cc: float, dd: float, alpha_contact: float
) -> ParacontactStructure:
    alpha_new = aa * (aa + cc) - bb * bb
    if abs(alpha_new + alpha_contact) > 1e-8 * max(1.0, abs(alpha_contact)):
        raise InconsistencyError(
            f"{label}: expected alpha = {-alpha_contact}, got {alpha_new}"
        )
    trace = aa + cc + dd
    if abs(trace + 4.0 * alpha_new) > 1e-8 * max(1.0, abs(trace)):
        raise InconsistencyError(
            f"{label}: a+c+d = {trace} fails the compatibility a+c+d = -4*alpha = {-4.0 * alpha_new}"
        )
    structure = build_structure(aa, bb, cc, Flavor.PARACONTACT)
    if abs(structure.params.d - dd) > 1e-8 * max(1.0, abs(dd)):
        raise InconsistencyError(f"{label}: derived d = {structure.params.d} != mapped d = {dd}")
    return structure


def deform1(contact: ParacontactStructure, cbar: float) -> ParacontactStructure:
    """First canonical paracontact structure built from a contact one.

    The b-coefficient uses the derivation with the leading b' factor, under
    which alpha flips sign exactly; see deform1_b1_candidates for the variant
    comparison.
    """
    kappa, _ = contact_kappa_mu(contact, cbar)
    p = contact.params
    alpha = p.alpha
    ac = p.a + p.c
    s = 4.0 * alpha * math.sqrt(1.0 - kappa)
    a1 = (p.a**2 * cbar - alpha + p.b**2) / s
    b1 = p.b * (p.a * cbar + ac) / s
    c1 = ((-(p.a**2) - alpha + p.b**2) * cbar + alpha - p.b**2 + ac**2) / s
    d1 = p.trace + ((alpha - p.b**2) * cbar - ac**2) / s
    return _validate_deformed("deform1", a1, b1, c1, d1, alpha)


def deform1_b1_candidates(contact: ParacontactStructure, cbar: float) -> dict[str, float]:
    """Both b1 readings (with and without the b' factor) and their alphas."""
    kappa, _ = contact_kappa_mu(contact, cbar)
    p = contact.params
    alpha = p.alpha
    ac = p.a + p.c
    s = 4.0 * alpha * math.sqrt(1.0 - kappa)
    a1 = (p.a**2 * cbar - alpha + p.b**2) / s
    c1 = ((-(p.a**2) - alpha + p.b**2) * cbar + alpha - p.b**2 + ac**2) / s
    b1_with = p.b * (p.a * cbar + ac) / s
    b1_without = (p.a * cbar + ac) / s
    return {
        "b1_with_factor": b1_with,
        "alpha_with_factor": a1 * (a1 + c1) - b1_with**2,
        "b1_without_factor": b1_without,
        "alpha_without_factor": a1 * (a1 + c1) - b1_without**2,
        "alpha_target": -alpha,
    }


def deform2(contact: ParacontactStructure, cbar: float) -> ParacontactStructure:
    """Second canonical paracontact structure built from a contact one."""
    kappa, _ = contact_kappa_mu(contact, cbar)
    p = contact.params
    r = contact.rho / math.sqrt(1.0 - kappa)
    a2 = -r * p.b
    b2 = -r / 2.0 * (p.a * cbar - (p.a + p.c))
    c2 = -r * (1.0 + cbar) * p.b
    d2 = 1.0 / contact.rho**2 - r * p.b * cbar
    return _validate_deformed("deform2", a2, b2, c2, d2, p.alpha)
