"""Exception hierarchy shared by the library and the CLI."""


class HanoiError(Exception):
    """Base class for every error raised by this package."""


class DomainError(HanoiError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class ConsistencyError(HanoiError, ArithmeticError):
    """An exact identity that must hold did not (an implementation bug)."""


class SingularOperatorError(HanoiError, ZeroDivisionError):
    """An integral operator met a surviving zero exponent."""


class ResourceError(HanoiError, RuntimeError):
    """A brute-force run would exceed the configured state cap."""

    def __init__(self, message: str, required: int, cap: int):
        super().__init__(message)
        self.required = required
        self.cap = cap
