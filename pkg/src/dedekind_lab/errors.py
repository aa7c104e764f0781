class DomainError(ValueError):
    """Raised when arguments fall outside an operation's domain."""


class DegenerateRatioError(DomainError):
    """A ratio whose denominator vanishes (all-zero cone vector)."""


class InapplicableBoundError(DomainError):
    """A moment bound that cannot be formed, e.g. a zero moment."""
