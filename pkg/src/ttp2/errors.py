"""Exception types shared across the package."""


class FormatError(ValueError):
    """Raised when an input stream cannot be decoded into an instance/schedule."""


class ValidationError(ValueError):
    """Raised when decoded data violates an instance invariant (names the cell)."""


class DomainError(ValueError):
    """Raised when an operation is called outside its supported team counts."""
