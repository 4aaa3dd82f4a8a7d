"""Parameter algebra and signature classification for g-natural metrics.

On the full tangent bundle a g-natural metric is described pointwise by six
coefficients; on the radius-r sphere bundle it collapses to four constants
(a, b, c, d).  This module owns the derived quantities alpha and phi and all
admissibility gates used downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .config import ZERO_TOL, iszero
from .errors import DegenerateMetricError, GeometryError


@dataclass(frozen=True)
class TMCoefficients:
    """The six metric coefficients on TM, evaluated at t = r**2."""

    alpha1: float
    alpha2: float
    alpha3: float
    beta1: float
    beta2: float
    beta3: float
    t: float = 1.0

    def __post_init__(self) -> None:
        values = (self.alpha1, self.alpha2, self.alpha3, self.beta1, self.beta2, self.beta3, self.t)
        if not all(math.isfinite(v) for v in values):
            raise GeometryError("TM coefficients must be finite")
        if self.t <= 0.0:
            raise GeometryError("the evaluation point t = r**2 must be positive")

    @property
    def phi1(self) -> float:
        return self.alpha1 + self.t * self.beta1

    @property
    def phi2(self) -> float:
        return self.alpha2 + self.t * self.beta2

    @property
    def phi3(self) -> float:
        return self.alpha3 + self.t * self.beta3

    @property
    def alpha(self) -> float:
        return self.alpha1 * (self.alpha1 + self.alpha3) - self.alpha2**2

    @property
    def phi(self) -> float:
        return self.phi1 * (self.phi1 + self.phi3) - self.phi2**2


@dataclass(frozen=True)
class MetricParams:
    """Constants (a, b, c, d) of an induced metric on the unit bundle."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c, self.d)):
            raise GeometryError("metric parameters must be finite")

    @property
    def alpha(self) -> float:
        return self.a * (self.a + self.c) - self.b**2

    @property
    def phi(self) -> float:
        return self.a * (self.a + self.c + self.d) - self.b**2

    @property
    def trace(self) -> float:
        return self.a + self.c + self.d

    def phi_at(self, r: float) -> float:
        return self.a * (self.a + self.c + self.d * r * r) - self.b**2

    def trace_at(self, r: float) -> float:
        return self.a + self.c + self.d * r * r

    @staticmethod
    def from_mapping(data: dict) -> "MetricParams":
        try:
            return MetricParams(float(data["a"]), float(data["b"]), float(data["c"]), float(data["d"]))
        except KeyError as exc:
            raise GeometryError(f"missing metric parameter {exc.args[0]!r}") from exc


def params_from_tm(coeffs: TMCoefficients, r: float = 1.0) -> MetricParams:
    """Induced sphere-bundle constants a, b, c, d from TM coefficients at t = r**2."""
    if abs(coeffs.t - r * r) > ZERO_TOL:
        raise GeometryError(f"coefficients evaluated at t={coeffs.t}, but r**2={r * r}")
    return MetricParams(
        a=coeffs.alpha1,
        b=coeffs.alpha2,
        c=coeffs.alpha3,
        d=coeffs.beta1 + coeffs.beta3,
    )


class SignatureKind(Enum):
    RIEMANNIAN = "Riemannian"
    NEUTRAL_ADMISSIBLE = "NeutralAdmissible"
    DEGENERATE = "Degenerate"
    OTHER_PSEUDO = "OtherPseudo"


class TMInducedClass(Enum):
    RIEMANNIAN_TM = "RiemannianTM"
    DEGENERATE_TM = "DegenerateTM"
    LORENTZ_TM = "LorentzTM"


@dataclass(frozen=True)
class SignatureReport:
    kind: SignatureKind
    eigenvalues: tuple[float, ...]
    details: str


def _block_eigenvalues(p: float, q: float, s: float) -> tuple[float, float]:
    """Eigenvalues of the 2x2 block [[p+q, s], [s, p]]."""
    disc = math.sqrt(q * q + 4.0 * s * s)
    return (p + 0.5 * (q + disc), p + 0.5 * (q - disc))


def tm_signature(coeffs: TMCoefficients) -> SignatureReport:
    """Classify a g-natural metric on TM at the given t.

    The Gram matrix is block diagonal with one [[phi1+phi3, phi2], [phi2, phi1]]
    block and n [[alpha1+alpha3, alpha2], [alpha2, alpha1]] blocks; the
    determinant is phi * alpha**n.
    """
    phi_hi, phi_lo = _block_eigenvalues(coeffs.phi1, coeffs.phi3, coeffs.phi2)
    al_hi, al_lo = _block_eigenvalues(coeffs.alpha1, coeffs.alpha3, coeffs.alpha2)
    eigenvalues = (phi_hi, phi_lo, al_hi, al_lo)
    details = (
        f"block eigenvalues: phi-block {phi_hi:.6g}, {phi_lo:.6g} (once each); "
        f"alpha-block {al_hi:.6g}, {al_lo:.6g} (n times each); "
        f"alpha={coeffs.alpha:.6g}, phi={coeffs.phi:.6g}"
    )
    if iszero(coeffs.alpha * coeffs.phi):
        return SignatureReport(SignatureKind.DEGENERATE, eigenvalues, details)
    riemannian = (
        coeffs.alpha1 > 0.0 and coeffs.phi1 > 0.0 and coeffs.alpha > 0.0 and coeffs.phi > 0.0
    )
    if riemannian:
        return SignatureReport(SignatureKind.RIEMANNIAN, eigenvalues, details)
    if coeffs.alpha < 0.0 and coeffs.phi < 0.0:
        return SignatureReport(SignatureKind.NEUTRAL_ADMISSIBLE, eigenvalues, details)
    return SignatureReport(SignatureKind.OTHER_PSEUDO, eigenvalues, details)


def t1m_signature(params: MetricParams, r: float = 1.0) -> SignatureReport:
    """Classify the induced metric on the radius-r sphere bundle.

    Riemannian iff a > 0, a+c+d*r**2 > 0 and alpha > 0; neutral on the
    distribution orthogonal to u^h iff a+c+d*r**2 != 0 and alpha < 0 (u^h is
    spacelike when a+c+d*r**2 > 0).  Ties with the degenerate boundary are
    reported as Degenerate.
    """
    if r <= 0.0:
        raise GeometryError("the bundle radius r must be positive")
    trace_r = params.trace_at(r)
    hi, lo = _block_eigenvalues(params.a, params.c, params.b)
    eigenvalues = (trace_r, hi, lo)
    details = (
        f"u-block eigenvalue {trace_r:.6g} (once); "
        f"2x2-block eigenvalues {hi:.6g}, {lo:.6g} (n times each); "
        f"alpha={params.alpha:.6g}"
    )
    if iszero(trace_r) or iszero(params.alpha):
        return SignatureReport(SignatureKind.DEGENERATE, eigenvalues, details)
    if params.a > 0.0 and trace_r > 0.0 and params.alpha > 0.0:
        return SignatureReport(SignatureKind.RIEMANNIAN, eigenvalues, details)
    if params.alpha < 0.0:
        causal = "spacelike" if trace_r > 0.0 else "timelike"
        return SignatureReport(
            SignatureKind.NEUTRAL_ADMISSIBLE, eigenvalues, details + f"; u^h {causal}"
        )
    return SignatureReport(SignatureKind.OTHER_PSEUDO, eigenvalues, details)


def tm_induced_class(params: MetricParams, r: float = 1.0) -> TMInducedClass:
    """Which kind of TM metric induces these constants on the radius-r bundle."""
    phi_r = params.phi_at(r)
    if iszero(phi_r):
        return TMInducedClass.DEGENERATE_TM
    return TMInducedClass.RIEMANNIAN_TM if phi_r > 0.0 else TMInducedClass.LORENTZ_TM


@dataclass(frozen=True)
class NormalVector:
    """Unit normal of the unit bundle inside TM: horizontal and vertical weights."""

    horizontal: float
    vertical: float
    spacelike: bool


def kappa_mu_values(params: MetricParams, cbar: float) -> tuple[float, float]:
    """Closed-form space-form invariants of a paracontact structure.

    kappa = (a^2 cbar^2 - 2(alpha - b^2) cbar - d(2(a+c)+d)) / (16 alpha^2),
    mu    = (a cbar - d) / (2 alpha).
    """
    alpha = params.alpha
    kappa = (
        params.a**2 * cbar**2
        - 2.0 * (alpha - params.b**2) * cbar
        - params.d * (2.0 * (params.a + params.c) + params.d)
    ) / (16.0 * alpha**2)
    mu = (params.a * cbar - params.d) / (2.0 * alpha)
    return kappa, mu


def unit_normal(params: MetricParams) -> NormalVector:
    """Unit normal -b*u^h + (a+c+d)*u^v, normalized by |(a+c+d)*phi|."""
    phi = params.phi
    trace = params.trace
    if iszero(phi):
        raise DegenerateMetricError("unit normal undefined: phi = 0")
    if iszero(trace):
        raise DegenerateMetricError("unit normal undefined: a + c + d = 0")
    scale = 1.0 / math.sqrt(abs(trace * phi))
    return NormalVector(-params.b * scale, trace * scale, spacelike=phi > 0.0)
