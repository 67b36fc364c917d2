"""Classical information geometry on a finite sample space.

Positive measures are strictly positive weight vectors; probability vectors
additionally sum to one. Tangent vectors are given in the (m)-representation,
i.e. as signed weight vectors (summing to zero on the simplex).
"""
import numpy as np

from ._validate import as_positive_measure, as_prob_vector, as_real_vector
from .density import chord_angle
from .errors import ValidationError

__all__ = [
    "hellinger_distance",
    "fisher_metric",
    "fisher_distance",
    "e_representation",
    "sqrt_map_isometry_check",
    "SQUARE_MAP_CONSTANT",
]

# Euclidean metric scaled by this constant is carried onto the Fisher metric
# by the entrywise square map.
SQUARE_MAP_CONSTANT = 4.0


def _tangent(a, mu, name, on_simplex=False):
    a = as_real_vector(a, name)
    if a.shape != mu.shape:
        raise ValidationError(f"{name} has length {a.size}, expected {mu.size}", "shape")
    if on_simplex and abs(a.sum()) > 1e-12 * max(1.0, np.max(np.abs(a))):
        raise ValidationError(
            f"{name} must sum to zero to be tangent to the simplex", "trace_free"
        )
    return a


def hellinger_distance(mu, nu):
    """``sqrt(sum((sqrt(mu) - sqrt(nu))**2))`` for positive measures."""
    mu = as_positive_measure(mu, "mu")
    nu = as_positive_measure(nu, "nu")
    if mu.shape != nu.shape:
        raise ValidationError("mu and nu have different lengths", "shape")
    return float(np.linalg.norm(np.sqrt(mu) - np.sqrt(nu)))


def fisher_metric(mu, a, b, on_simplex=False):
    """Fisher information metric ``sum(a * b / mu)``.

    With ``on_simplex=True`` the tangents are required to sum to zero.
    """
    mu = as_positive_measure(mu, "mu")
    a = _tangent(a, mu, "a", on_simplex)
    b = _tangent(b, mu, "b", on_simplex)
    return float(np.sum(a * b / mu))


def fisher_distance(p, q):
    """Fisher (Bhattacharyya-angle) distance ``arccos(sum(sqrt(p * q)))``.

    Evaluated as the angle between the unit vectors ``sqrt(p)`` and
    ``sqrt(q)`` via their chord, which stays accurate for nearby inputs.
    """
    p = as_prob_vector(p, "p")
    q = as_prob_vector(q, "q")
    if p.shape != q.shape:
        raise ValidationError("p and q have different lengths", "shape")
    return chord_angle(np.linalg.norm(np.sqrt(p) - np.sqrt(q)))


def e_representation(mu, a):
    """Fisher (e)-representation ``a / mu`` of the tangent ``a`` at ``mu``."""
    mu = as_positive_measure(mu, "mu")
    return _tangent(a, mu, "a") / mu


def sqrt_map_isometry_check(mu, a, b):
    """Residual of the square-map isometry at ``mu``.

    The differential of ``mu -> mu**2`` is ``a -> 2 mu a``. Returns
    ``|4 <a, b> - g^F_{mu^2}(2 mu a, 2 mu b)|``, which vanishes identically.
    """
    mu = as_positive_measure(mu, "mu")
    a = _tangent(a, mu, "a")
    b = _tangent(b, mu, "b")
    lhs = SQUARE_MAP_CONSTANT * float(np.dot(a, b))
    rhs = float(np.sum((2 * mu * a) * (2 * mu * b) / mu ** 2))
    return abs(lhs - rhs)
