"""Exception hierarchy for the geometric layers."""


class GeometryError(ValueError):
    """Base class for all domain errors raised by this package."""


class DimensionMismatchError(GeometryError):
    """Operands live in frames of different dimensions."""


class DegenerateMetricError(GeometryError):
    """A metric (or a required determinant factor) is degenerate."""


class AdmissibilityError(GeometryError):
    """Parameters violate the sign conditions required by the construction."""


class NormalizationRequiredError(GeometryError):
    """Connection/curvature formulas need phi > 0; apply a homothety first."""


class UnsupportedParametersError(GeometryError):
    """No admissible normalization exists (the a = 0 branch)."""


class InconsistencyError(GeometryError):
    """Two routes that must agree disagree beyond tolerance."""


class SasakianLimitError(GeometryError):
    """Contact deformations require kappa < 1."""
