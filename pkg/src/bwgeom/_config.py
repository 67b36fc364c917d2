"""Library-wide numerical tolerances.

Tolerances live in a context variable so that an override made with
:func:`tolerances` only affects the current thread / task.
"""
import contextlib
import contextvars
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Relative thresholds used when validating inputs.

    Attributes
    ----------
    tol_herm : float
        Allowed ``max|A - A*|`` relative to ``max|A|``.
    tol_pd : float
        Smallest eigenvalue must exceed ``tol_pd`` times the largest.
    tol_inv : float
        Smallest singular value must exceed ``tol_inv`` times the largest.
    tol_trace : float
        Allowed ``|tr(rho) - 1|`` before a density matrix is rejected
        (inputs inside the window are renormalised).
    tol_degenerate : float
        Eigenvalue gaps below ``tol_degenerate * max(eigenvalue)`` are treated
        as degenerate in divided differences.
    """

    tol_herm: float = 1e-12
    tol_pd: float = 1e-10
    tol_inv: float = 1e-12
    tol_trace: float = 1e-9
    tol_degenerate: float = 1e-12


_current = contextvars.ContextVar("bwgeom_tolerances", default=Tolerances())


def get_tolerances():
    return _current.get()


@contextlib.contextmanager
def tolerances(**overrides):
    """Temporarily override one or more tolerances.

    >>> with tolerances(tol_pd=1e-14):
    ...     pass
    """
    token = _current.set(replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)


def set_tolerances(**overrides):
    """Override tolerances for the rest of the current context (no reset)."""
    _current.set(replace(_current.get(), **overrides))
