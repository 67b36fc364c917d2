"""Exception types raised by bwgeom."""


class BWGeomError(Exception):
    """Base class for all library errors."""


class ValidationError(BWGeomError, ValueError):
    """An input violates the invariant of its declared type.

    ``invariant`` is a short machine-readable tag such as ``"hermitian"``,
    ``"positive_definite"``, ``"unit_trace"``, ``"unit_norm"``,
    ``"invertible"``, ``"positive"``, ``"trace_free"`` or ``"shape"``.
    """

    def __init__(self, message, invariant):
        super().__init__(message)
        self.invariant = invariant


class DomainError(BWGeomError, ValueError):
    """A result would leave the open cone the geometry lives on."""

