"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Multi-indices of different lengths were combined."""


class ValidationError(ValueError):
    """A commutation system does not define an algebra of solvable type."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class ParseError(ValueError):
    """Malformed polynomial, ordering or algebra description."""


class SemanticError(ValueError):
    """Well-formed input that the requested operation does not accept."""


class AlgebraMismatch(SemanticError):
    """Polynomials from different algebras were combined."""
