from __future__ import annotations


class DomainError(ValueError):
    """Raised when an operation is undefined for its input, e.g. inverting zero."""


class PreconditionError(ValueError):
    """Raised when an input violates a documented precondition."""


class ParseError(ValueError):
    """Raised on malformed quaternion, rational or matrix text.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        super().__init__(f"{message} (at position {position} in {text!r})")
