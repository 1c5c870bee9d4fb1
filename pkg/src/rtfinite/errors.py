"""Exceptions shared across the package."""


class UsageError(ValueError):
    """A caller violated a documented precondition (bad level, color, index...)."""


class DivisionByZeroQuantumInteger(ArithmeticError):
    """A quantum integer in a denominator vanishes at the requested embedding.

    This signals a degenerate color outside the admissible range; it never
    happens for ratios built from admissible data.
    """
