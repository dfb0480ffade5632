"""Shared exception types."""


class BudgetExceededError(Exception):
    """Raised when a construction would exceed the explicit enumeration budget.

    The CLI maps this to exit code 3.
    """


class HypothesisViolationError(ValueError):
    """Raised when an operation is called outside the range a theorem covers.

    Used instead of silently extrapolating, e.g. connectivity predictions for
    symmetric groups require degree >= 4.
    """
