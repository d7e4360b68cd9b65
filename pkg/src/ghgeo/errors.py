"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Structurally malformed input: wrong dimensions, mismatched sizes."""


class DomainError(ValueError):
    """Value outside the mathematical domain of an operation."""


class SizeLimitError(ValueError):
    """Problem instance exceeds an explicit enumeration cap."""


class ParseError(ValueError):
    """Malformed text input. Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
