"""Shared exception types, mapped to CLI exit codes by the cli module."""


class DomainError(ValueError):
    """Invalid input data (bad diagram, malformed rational, wrong context...)."""


class ConsistencyError(RuntimeError):
    """An internal cross-check that must hold by theory failed."""


class GuardExhausted(RuntimeError):
    """A resource guard (lattice scan size, search rectangle) was exceeded."""
