"""Bures-Wasserstein geometry on positive-definite Hermitian matrices.

P(n) is treated as the quotient of GL(n), with the Euclidean (Frobenius)
metric, by the right action of U(n); the projection is ``pi(M) = M M*``.
Tangent vectors on P(n) are plain Hermitian matrices, tangent vectors on
GL(n) arbitrary complex matrices.
"""
from dataclasses import dataclass, field

import numpy as np

from ._config import get_tolerances
from ._validate import (
    as_direction,
    as_hermitian,
    as_invertible,
    as_pd,
    as_pd_eig,
    same_shape,
)
from .errors import DomainError, ValidationError
from .matfun import _herm, _lyap_eig, _spectral, unitary_polar_factor

__all__ = [
    "submersion_pi",
    "submersion_differential",
    "horizontal_project",
    "vertical_part",
    "horizontal_lift",
    "bw_metric",
    "bw_norm",
    "bw_distance_pn",
    "GeodesicPN",
    "geodesic_pn",
    "exp_pn",
    "log_pn",
]

def submersion_pi(M):
    """``M M*``, the point of P(n) represented by ``M``."""
    M = as_invertible(M)
    return _herm(M @ M.conj().T)


def submersion_differential(M, A):
    """Differential of ``pi`` at ``M``: ``A M* + M A*`` (always Hermitian)."""
    M = as_invertible(M)
    A = as_direction(A, M)
    return _herm(A @ M.conj().T + M @ A.conj().T)


def horizontal_project(M, A):
    """Orthogonal projection of ``A`` onto the horizontal space at ``M``.

    Horizontal vectors are exactly those of the form ``H M`` with ``H``
    Hermitian. The coefficient is ``H = L_{MM*}(A M* + M A*)``, so that
    ``A - H M`` lies in the kernel of the differential.

    The result is a general complex matrix; it is not coerced to be Hermitian.
    """
    M = as_invertible(M)
    A = as_direction(A, M)
    w, V = np.linalg.eigh(_herm(M @ M.conj().T))
    H = _lyap_eig(w, V, _herm(A @ M.conj().T + M @ A.conj().T))
    return H @ M


def vertical_part(M, A):
    """``A`` minus its horizontal projection; of the form ``K (M^{-1})*`` with ``K`` skew."""
    return np.asarray(A, dtype=np.complex128) - horizontal_project(M, A)


def horizontal_lift(Sigma, H, M):
    """Horizontal vector at ``M`` that ``pi`` maps onto ``H``.

    Parameters
    ----------
    Sigma : array_like
        Base point in P(n).
    H : array_like
        Hermitian tangent vector at ``Sigma``.
    M : array_like
        A point of the fibre over ``Sigma``, i.e. ``M M* = Sigma``.

    Returns
    -------
    ndarray
        ``L_Sigma(H) M``.
    """
    Sigma, w, V = as_pd_eig(Sigma)
    M = as_invertible(M)
    H = as_hermitian(as_direction(H, Sigma, "H"), "H")
    same_shape("horizontal_lift", Sigma, M)
    mismatch = np.linalg.norm(M @ M.conj().T - Sigma) / np.linalg.norm(Sigma)
    if mismatch > 1e-10:
        raise ValidationError(
            f"M is not in the fibre of Sigma (relative |MM* - Sigma| = {mismatch:.3e})",
            "fibre",
        )
    return _lyap_eig(w, V, H) @ M


def _bw_metric_eig(w, V, H, K):
    return 0.5 * np.real(np.vdot(_lyap_eig(w, V, H), K))


def bw_metric(Sigma, H, K, form="lyapunov"):
    r"""Bures-Wasserstein inner product of two tangent vectors at ``Sigma``.

    .. math::
        g_\Sigma(H, K) = \tfrac12 \mathrm{Re}\,\mathrm{tr}(L_\Sigma(H) K)
                       = \mathrm{Re}\,\mathrm{tr}(L_\Sigma(H)\,\Sigma\,L_\Sigma(K))

    where :math:`L_\Sigma(H)` solves :math:`\Sigma X + X\Sigma = H`.

    Parameters
    ----------
    Sigma : array_like, shape (n, n)
        Base point, positive definite.
    H, K : array_like, shape (n, n)
        Hermitian tangent vectors.
    form : {"lyapunov", "sandwich"}
        Which of the two equal closed forms to evaluate.

    Returns
    -------
    float
    """
    Sigma, w, V = as_pd_eig(Sigma)
    H = as_hermitian(as_direction(H, Sigma, "H"), "H")
    K = as_hermitian(as_direction(K, Sigma, "K"), "K")
    if form == "lyapunov":
        return _bw_metric_eig(w, V, H, K)
    if form == "sandwich":
        X, Y = _lyap_eig(w, V, H), _lyap_eig(w, V, K)
        return float(np.real(np.trace(X @ Sigma @ Y)))
    raise ValueError(f"unknown form {form!r}")


def bw_norm(Sigma, H):
    """Length of ``H`` in the metric at ``Sigma``."""
    return float(np.sqrt(max(bw_metric(Sigma, H, H), 0.0)))


def canonical_pair(a, b):
    """Order two validated matrices so that symmetric functions are bit-exact."""
    return (b, a) if a.tobytes() > b.tobytes() else (a, b)


def _aligned_roots(Sigma1, Sigma2):
    """Square roots of both matrices, the second rotated onto the first.

    Returns ``(S1, S2 U)`` with ``S = Sigma^{1/2}`` and ``U`` the unitary polar
    factor of ``S2 S1``. Among all points of the two fibres this pair is
    closest in Frobenius norm.
    """
    S1 = _spectral(*np.linalg.eigh(Sigma1), np.sqrt)
    S2 = _spectral(*np.linalg.eigh(Sigma2), np.sqrt)
    return S1, S2 @ unitary_polar_factor(S2 @ S1)


def bw_distance_pn(Sigma, T):
    r"""Bures-Wasserstein distance between two positive-definite matrices.

    .. math::
        d(\Sigma, T) = \left[\mathrm{tr}\,\Sigma + \mathrm{tr}\,T
            - 2\,\mathrm{tr}\left((\Sigma^{1/2} T \Sigma^{1/2})^{1/2}\right)\right]^{1/2}

    This is also the 2-Wasserstein distance between the centred Gaussians
    with covariances ``Sigma`` and ``T``.

    The value is evaluated as :math:`\|\Sigma^{1/2} - T^{1/2}U\|_F` with
    ``U`` the optimal polar factor, which equals the expression above but
    avoids subtracting traces of nearly equal size. Round-off is then relative
    to the distance itself rather than to ``sqrt(eps * tr)``. Swapping the
    arguments gives a bit-identical result.
    """
    Sigma = as_pd(Sigma, "Sigma")
    T = as_pd(T, "T")
    same_shape("bw_distance_pn", Sigma, T)
    S, B = _aligned_roots(*canonical_pair(Sigma, T))
    return float(np.linalg.norm(S - B))


def _check_t(t):
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"geodesic parameter must lie in [0, 1], got {t}")
    return t


@dataclass(frozen=True)
class GeodesicPN:
    """Minimising geodesic between two points of P(n).

    The curve is ``pi(gamma(t))`` with the horizontal segment
    ``gamma(t) = (1 - t) sqrt_start + t rotated_sqrt_end`` in GL(n), where
    ``rotated_sqrt_end = Sigma2^{1/2} U`` and ``U`` is the unitary polar
    factor of ``Sigma2^{1/2} Sigma1^{1/2}``. The parametrisation has
    constant speed equal to the distance.
    """

    start: np.ndarray
    end: np.ndarray
    sqrt_start: np.ndarray
    rotated_sqrt_end: np.ndarray
    _step: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_step", self.rotated_sqrt_end - self.sqrt_start)

    def ambient(self, t):
        """The horizontal segment in GL(n) at parameter ``t``."""
        t = _check_t(t)
        return (1.0 - t) * self.sqrt_start + t * self.rotated_sqrt_end

    def __call__(self, t):
        g = self.ambient(t)
        return _herm(g @ g.conj().T)

    def velocity(self, t):
        """Hermitian tangent vector of the curve at ``t``."""
        g = self.ambient(t)
        D = self._step
        return _herm(D @ g.conj().T + g @ D.conj().T)

    @property
    def speed(self):
        return float(np.linalg.norm(self._step))

    @property
    def length(self):
        return self.speed

    def sample(self, steps):
        return [self(k / steps) for k in range(steps + 1)]


def geodesic_pn(Sigma1, Sigma2):
    """Build the geodesic from ``Sigma1`` to ``Sigma2``."""
    Sigma1 = as_pd(Sigma1, "Sigma1")
    Sigma2 = as_pd(Sigma2, "Sigma2")
    same_shape("geodesic_pn", Sigma1, Sigma2)
    return GeodesicPN(Sigma1, Sigma2, *_aligned_roots(Sigma1, Sigma2))


def exp_pn(Sigma, H):
    r"""Riemannian exponential at ``Sigma``.

    Pushes the straight horizontal line ``Sigma^{1/2} + t L_Sigma(H) Sigma^{1/2}``
    through ``pi`` and evaluates it at ``t = 1``:

    .. math:: \exp_\Sigma(H) = \Sigma + H + L_\Sigma(H)\,\Sigma\,L_\Sigma(H)

    Raises ``DomainError`` when the result is not positive definite.
    """
    Sigma, w, V = as_pd_eig(Sigma)
    H = as_hermitian(as_direction(H, Sigma, "H"), "H")
    X = _lyap_eig(w, V, H)
    out = _herm(Sigma + H + X @ Sigma @ X)
    ev = np.linalg.eigvalsh(out)
    if ev[-1] <= 0 or ev[0] <= get_tolerances().tol_pd * ev[-1]:
        raise DomainError(
            f"exp_pn leaves the positive-definite cone (smallest eigenvalue {ev[0]:.3e})"
        )
    return out


def log_pn(Sigma, Lam):
    """Riemannian logarithm: the initial velocity of the geodesic ``Sigma -> Lam``.

    With ``S = Sigma^{1/2}`` and ``B = Lam^{1/2} U`` (``U`` the polar factor of
    ``Lam^{1/2} S``) this is ``S B* + B S - 2 Sigma``.
    """
    return geodesic_pn(Sigma, Lam).velocity(0.0)
