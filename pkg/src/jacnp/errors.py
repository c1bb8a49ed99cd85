"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """Input is well formed but outside the domain of the operation."""


class ParseError(DomainError):
    """Malformed textual input (polynomial, polygon or integer list)."""

    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class InternalInconsistency(RuntimeError):
    """Two routes that must agree did not. Always a bug or a broken theorem."""
