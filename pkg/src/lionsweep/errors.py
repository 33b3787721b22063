"""Exception types shared across the package."""


class ParseError(ValueError):
    """A graph/trace/moves file could not be parsed. Carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ResourceLimitError(RuntimeError):
    """An exhaustive operation would exceed its explicit enumeration limit."""


class InfeasibleWalkError(ValueError):
    """No walk with the requested endpoints and exact length exists."""


class WalkTooShortError(InfeasibleWalkError):
    """Requested length is below the shortest-path distance."""


class WalkParityError(InfeasibleWalkError):
    """Requested length has a parity no walk between the endpoints can realize."""
