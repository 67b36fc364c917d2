"""Quantum metrics on density and positive-definite matrices.

Covers the SLD (symmetric logarithmic derivative) Fisher metric, the
Bogoliubov-Kubo-Mori metric with their (e)-representations, the
Fubini-Study distance on pure states, the metric obtained by projecting
onto horizontal vectors in GL(n), and the Wigner-Yanase metric.

Constants, fixed by the maximally mixed state ``I/n``:

* ``Re g_SLD = 4 * g_BW``
* ``g_Bo`` pairs ``H^(e)`` and ``K^(m)`` with constant 1, ``g_SLD`` with 2.
"""
import numpy as np

from ._validate import (
    as_density_eig,
    as_direction,
    as_hermitian,
    as_invertible,
    as_pd,
    as_pd_eig,
    as_pure_state,
    as_trace_free,
    same_shape,
)
from .bw import _bw_metric_eig, canonical_pair, horizontal_project
from .density import chord_angle
from .errors import ValidationError
from .matfun import (
    _from_eigbasis,
    _herm,
    _lyap_eig,
    _to_eigbasis,
    log_divided_differences,
)

__all__ = [
    "sld_metric",
    "sld_e_rep",
    "sld_m_rep",
    "bogoliubov_e_to_m",
    "bogoliubov_m_to_e",
    "bogoliubov_metric",
    "fubini_study_distance",
    "pure_state_density",
    "horizontal_metric_gh",
    "square_map_isometry_residual",
    "wigner_yanase_metric",
    "wigner_yanase_isometry_residual",
    "lyapunov_horizontal_residual",
]


def _density_and_tangents(rho, *tangents):
    rho, w, V = as_density_eig(rho, "rho")
    out = [as_trace_free(as_direction(T, rho, name), name) for name, T in tangents]
    return rho, w, V, out


def sld_metric(rho, H, K):
    r"""SLD Fisher metric :math:`2\,\mathrm{tr}(L_\rho(H) K)` on trace-free tangents."""
    rho, w, V, (H, K) = _density_and_tangents(rho, ("H", H), ("K", K))
    return float(2.0 * np.real(np.vdot(_lyap_eig(w, V, H), K)))


def sld_e_rep(rho, H):
    """SLD (e)-representation ``L_rho(H)``."""
    rho, w, V, (H,) = _density_and_tangents(rho, ("H", H))
    return _lyap_eig(w, V, H)


def sld_m_rep(rho, E):
    """Inverse of :func:`sld_e_rep`: ``E rho + rho E``."""
    rho, _, _ = as_density_eig(rho, "rho")
    E = as_hermitian(as_direction(E, rho, "E"), "E")
    return _herm(E @ rho + rho @ E)


def _log_mean_kernel(w):
    # logarithmic mean (w_i - w_j) / (log w_i - log w_j), degenerate -> w_i
    return 1.0 / log_divided_differences(w)


def bogoliubov_e_to_m(rho, E):
    r"""Bogoliubov (m)-representation of the (e)-vector ``E``.

    Exact value of :math:`\int_0^1 \rho^\lambda E \rho^{1-\lambda} d\lambda`:
    in the eigenbasis of ``rho`` entry ``(i, j)`` is ``E_ij`` times the
    logarithmic mean of ``w_i`` and ``w_j``.
    """
    rho, w, V = as_density_eig(rho, "rho")
    E = as_hermitian(as_direction(E, rho, "E"), "E")
    return _from_eigbasis(V, _to_eigbasis(V, E) * _log_mean_kernel(w))


def bogoliubov_m_to_e(rho, H):
    """Bogoliubov (e)-representation: the derivative of ``log`` at ``rho`` along ``H``."""
    rho, w, V, (H,) = _density_and_tangents(rho, ("H", H))
    return _from_eigbasis(V, _to_eigbasis(V, H) * log_divided_differences(w))


def bogoliubov_metric(rho, H, K, form="m"):
    """Bogoliubov metric ``tr(dlog_rho(H) K)``.

    ``form="e"`` evaluates the same quantity from the (e)-representations,
    ``tr(H_e * integral(rho^l K_e rho^(1-l)))``.
    """
    rho, w, V, (H, K) = _density_and_tangents(rho, ("H", H), ("K", K))
    dd = log_divided_differences(w)
    He = _from_eigbasis(V, _to_eigbasis(V, H) * dd)
    if form == "m":
        return float(np.real(np.vdot(He, K)))
    if form == "e":
        Ke = _from_eigbasis(V, _to_eigbasis(V, K) * dd)
        Km = _from_eigbasis(V, _to_eigbasis(V, Ke) / dd)
        return float(np.real(np.vdot(He, Km)))
    raise ValueError(f"unknown form {form!r}")


def pure_state_density(phi):
    """Rank-one projector ``phi phi*`` of a unit vector."""
    phi = as_pure_state(phi)
    return np.outer(phi, phi.conj())


def fubini_study_distance(phi, psi):
    """Fubini-Study distance ``arccos(|<phi, psi>|)`` between unit vectors.

    Invariant under independent global phases; ranges over ``[0, pi/2]``.
    ``psi`` is first rotated by the phase that aligns it with ``phi``; the
    angle is then taken from the chord between the two vectors.
    """
    phi = as_pure_state(phi, "phi")
    psi = as_pure_state(psi, "psi")
    same_shape("fubini_study_distance", phi, psi)
    phi, psi = canonical_pair(phi, psi)
    overlap = np.vdot(psi, phi)
    if abs(overlap) > 0:
        psi = psi * (overlap / abs(overlap))
    return chord_angle(np.linalg.norm(phi - psi))


def _gh_projections(Sigma, H, K):
    Sigma = as_pd(Sigma)
    H = as_hermitian(as_direction(H, Sigma, "H"), "H")
    K = as_hermitian(as_direction(K, Sigma, "K"), "K")
    return Sigma, H, K, horizontal_project(Sigma, H), horizontal_project(Sigma, K)


def horizontal_metric_gh(Sigma, H, K):
    """Frobenius pairing of the horizontal parts of ``H`` and ``K`` at ``Sigma``.

    ``Sigma`` is viewed as a point of GL(n); the projections are general
    complex matrices and are not symmetrised.
    """
    _, _, _, Hh, Kh = _gh_projections(Sigma, H, K)
    return float(np.real(np.vdot(Kh, Hh)))


def square_map_isometry_residual(Sigma, H, K):
    """``|g^H_Sigma(H, K) - g^BW_{Sigma^2}(H Sigma + Sigma H, K Sigma + Sigma K)|``."""
    Sigma, H, K, Hh, Kh = _gh_projections(Sigma, H, K)
    gh = float(np.real(np.vdot(Kh, Hh)))
    Sigma2 = _herm(Sigma @ Sigma)
    w, V = np.linalg.eigh(Sigma2)
    rhs = _bw_metric_eig(w, V, _herm(H @ Sigma + Sigma @ H), _herm(K @ Sigma + Sigma @ K))
    return abs(gh - rhs)


def wigner_yanase_metric(Lam, A, B):
    r"""Wigner-Yanase metric :math:`\mathrm{Re}\,\mathrm{tr}(L_{\Lambda^{1/2}}(A)\,L_{\Lambda^{1/2}}(B))`.

    This is the metric that makes the square map ``Sigma -> Sigma^2`` an
    isometry from the Euclidean metric on positive-definite matrices.
    """
    Lam, w, V = as_pd_eig(Lam, "Lam")
    A = as_hermitian(as_direction(A, Lam, "A"), "A")
    B = as_hermitian(as_direction(B, Lam, "B"), "B")
    sw = np.sqrt(w)
    return float(np.real(np.vdot(_lyap_eig(sw, V, A), _lyap_eig(sw, V, B))))


def wigner_yanase_isometry_residual(Sigma, H, K):
    """``|Re tr(H K) - g^WY_{Sigma^2}(H Sigma + Sigma H, K Sigma + Sigma K)|``."""
    Sigma = as_pd(Sigma)
    H = as_hermitian(as_direction(H, Sigma, "H"), "H")
    K = as_hermitian(as_direction(K, Sigma, "K"), "K")
    lhs = float(np.real(np.vdot(H, K)))
    rhs = wigner_yanase_metric(
        _herm(Sigma @ Sigma), _herm(H @ Sigma + Sigma @ H), _herm(K @ Sigma + Sigma @ K)
    )
    return abs(lhs - rhs)


def lyapunov_horizontal_residual(M, A, tol=1e-9):
    """Frobenius norm of ``L_{MM*}(A M* + M A*) - A M^{-1}`` for horizontal ``A``.

    Raises ``ValidationError`` when ``A`` is not horizontal at ``M``, i.e.
    when ``A M^{-1}`` is not Hermitian to relative accuracy ``tol``.
    """
    M = as_invertible(M)
    A = as_direction(A, M)
    AMinv = np.linalg.solve(M.T, A.T).T
    if np.linalg.norm(AMinv - AMinv.conj().T) > tol * np.linalg.norm(AMinv):
        raise ValidationError("A is not horizontal at M (A M^-1 is not Hermitian)", "horizontal")
    w, V = np.linalg.eigh(_herm(M @ M.conj().T))
    X = _lyap_eig(w, V, _herm(A @ M.conj().T + M @ A.conj().T))
    return float(np.linalg.norm(X - AMinv))
