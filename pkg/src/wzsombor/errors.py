"""Exceptions shared across the package."""


class GuardError(RuntimeError):
    """A size guard refused the request."""


class NotApplicableError(ValueError):
    """The requested quantity is undefined for this n (prime n)."""


class ConvergenceError(ArithmeticError):
    """The eigensolver hit its sweep cap."""
