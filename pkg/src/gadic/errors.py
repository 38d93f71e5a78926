"""Exception types shared across the package."""


class GadicError(ValueError):
    """A domain precondition was violated (bad base, non-unit divisor, ...)."""


class ParseError(GadicError):
    """Malformed textual input for a digit expansion or polynomial."""


class NonResidueError(GadicError):
    """Square root requested for a quadratic non-residue."""


class MultipleRootError(GadicError):
    """Root lifting attempted where the simple-root hypothesis fails."""
