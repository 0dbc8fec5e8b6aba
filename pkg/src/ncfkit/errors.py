"""Exception types shared across the package."""


class NcfkitError(Exception):
    """Base class for errors raised by this package."""


class ParseError(NcfkitError, ValueError):
    """A text input could not be parsed.

    Carries the character offset of the offending token so front ends can
    point at it.
    """

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"parse error at position {position}: {message}")


class CapExceededError(NcfkitError):
    """An operation was asked to run above its configured variable cap."""

    def __init__(self, operation: str, n: int, cap: int):
        self.operation = operation
        self.n = n
        self.cap = cap
        super().__init__(f"{operation}: n={n} exceeds cap {cap}")
