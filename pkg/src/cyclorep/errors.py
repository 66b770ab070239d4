"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceBudgetError(RuntimeError):
    """A request would exceed a configured memory or size budget."""


class ArithmeticConsistencyError(AssertionError):
    """Two computations that must agree did not; indicates a bug, never user error."""
