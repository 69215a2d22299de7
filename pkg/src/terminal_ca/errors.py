"""Exception hierarchy shared by all modules."""


class CAError(ValueError):
    """Base class for every error raised by this package."""


class ParseError(CAError):
    """Malformed polynomial expression.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class VariableSetMismatch(CAError):
    pass


class DivisionError(CAError):
    """A term is not divisible by the requested monomial."""


class SubstitutionError(CAError):
    pass


class NotStandardForm(CAError):
    """The hypersurface equation is not literally xy + f(z,u)."""


class NotSingular(CAError):
    """The origin is not a singular point (f has a constant or linear term)."""


class NotIsolated(CAError):
    """The cA germ does not have an isolated singularity."""


class DegreeBoundExceeded(CAError):
    pass


class WeightRangeError(CAError):
    """Weights (a, b) outside the admissible range for the requested operation."""


class ValuationError(CAError):
    """Invalid pseudo-weighted valuation or coordinate change."""


class LinkingError(ValuationError):
    """The coordinate change does not carry one defining equation to the other."""


class OrderConditionError(ValuationError):
    pass


class PositiveDimensionalSingularLocus(CAError):
    """A chart has a curve of singular points meeting the exceptional divisor."""


class UnsupportedChartShape(CAError):
    pass


class ZeroPolynomialError(CAError):
    """An operation undefined on the zero polynomial received it."""
