"""Shared exception types."""


class DomainError(ValueError):
    """An operand lies outside the domain of a combinatorial map."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed (e.g. a supposedly integral coefficient
    came out fractional, or a bijection produced an invalid object).

    This always signals a bug, never bad user input.
    """
