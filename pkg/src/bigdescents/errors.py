"""Shared exception types.

Plain ``ValueError`` is used for malformed inputs throughout the package;
the classes here mark failure modes that callers may want to distinguish
(resource guards, domain violations, and arithmetic certificates).
"""


class BudgetError(RuntimeError):
    """An enumeration or expansion exceeded its configured size guard."""


class DomainViolationError(ValueError):
    """A bijection was applied to an object outside its declared domain."""


class InexactDivisionError(ArithmeticError):
    """A division that was expected to be exact left a remainder."""


class NonInvertibleError(ArithmeticError):
    """Division by a power series whose constant term is not a nonzero rational."""


class DivergenceError(ArithmeticError):
    """A fixed-point iteration or composition failed to stabilize order by order."""
