"""Shared exception types."""


class DomainError(ValueError):
    """An argument violates an operation's precondition."""
