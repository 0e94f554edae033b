"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """A value violates a structural precondition (bad dimensions, zero lines,
    out-of-range index, malformed text)."""


class InvalidTransformationError(InvalidInputError):
    """A transformation's applicability condition does not hold at the
    requested location."""
