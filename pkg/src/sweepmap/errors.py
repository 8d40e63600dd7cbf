class InvariantViolation(RuntimeError):
    """Internal state contradicts a proven property; always a bug, never bad input."""


class BudgetExceeded(ValueError):
    """An exhaustive check would enumerate more objects than allowed."""
