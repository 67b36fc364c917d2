"""Matrix functions of Hermitian matrices.

Everything here goes through the Hermitian eigendecomposition
``A = V diag(w) V*``: square roots, powers, logarithm, the Lyapunov solver
``Sigma X + X Sigma = H`` and the Frechet derivative of the logarithm.
The unitary polar factor is the exception and is taken from the SVD.
"""
from typing import NamedTuple

import numpy as np

from ._config import get_tolerances
from ._validate import (
    as_direction,
    as_hermitian,
    as_invertible,
    as_pd_eig,
)

__all__ = [
    "EigenDecomposition",
    "hermitian_eig",
    "matrix_sqrt",
    "matrix_power",
    "matrix_log",
    "matrix_exp",
    "lyapunov_solve",
    "unitary_polar_factor",
    "dlog_frechet",
    "log_divided_differences",
]


class EigenDecomposition(NamedTuple):
    """Eigenvalues in ascending order and the unitary matrix of eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self):
        V = self.eigenvectors
        return (V * self.eigenvalues) @ V.conj().T


def _herm(A):
    return 0.5 * (A + A.conj().T)


def _spectral(w, V, f):
    """``V diag(f(w)) V*``, symmetrised."""
    return _herm((V * f(w)) @ V.conj().T)


def _to_eigbasis(V, H):
    return V.conj().T @ H @ V


def _from_eigbasis(V, X):
    return _herm(V @ X @ V.conj().T)


def _lyap_eig(w, V, H):
    return _from_eigbasis(V, _to_eigbasis(V, H) / (w[:, None] + w[None, :]))


def _psd_sqrt(A):
    """Square root of a matrix known to be PSD up to round-off.

    No validation: used on intermediate products such as
    ``Sigma^{1/2} T Sigma^{1/2}`` whose conditioning may exceed ``tol_pd``.
    """
    w, V = np.linalg.eigh(_herm(A))
    return _spectral(w, V, lambda x: np.sqrt(np.clip(x, 0.0, None)))


def hermitian_eig(A):
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    A : array_like, shape (n, n)
        Hermitian matrix; asymmetry beyond ``tol_herm`` is rejected, smaller
        asymmetry is symmetrised away.

    Returns
    -------
    EigenDecomposition
        Real eigenvalues in ascending order and unitary eigenvectors
        (columns), so that ``A = V diag(w) V*``.
    """
    A = as_hermitian(A)
    w, V = np.linalg.eigh(A)
    return EigenDecomposition(w, V)


def matrix_sqrt(Sigma):
    """Principal square root of a positive-definite matrix.

    Raises ``ValidationError`` naming the smallest eigenvalue when ``Sigma``
    is not positive definite.
    """
    _, w, V = as_pd_eig(Sigma)
    return _spectral(w, V, np.sqrt)


def matrix_power(Sigma, p):
    """Real power ``Sigma**p`` of a positive-definite matrix."""
    _, w, V = as_pd_eig(Sigma)
    return _spectral(w, V, lambda x: x ** p)


def matrix_log(Sigma):
    """Principal logarithm of a positive-definite matrix (Hermitian result)."""
    _, w, V = as_pd_eig(Sigma)
    return _spectral(w, V, np.log)


def matrix_exp(H):
    """Exponential of a Hermitian matrix (positive-definite result)."""
    w, V = np.linalg.eigh(as_hermitian(H, "H"))
    return _spectral(w, V, np.exp)


def lyapunov_solve(Sigma, H):
    r"""Solve :math:`\Sigma X + X \Sigma = H` for Hermitian ``X``.

    The solution exists and is unique whenever ``Sigma`` is positive
    definite. In the eigenbasis of ``Sigma`` it reads
    :math:`\tilde X_{ij} = \tilde H_{ij} / (\lambda_i + \lambda_j)`.

    Parameters
    ----------
    Sigma : array_like, shape (n, n)
        Positive-definite matrix.
    H : array_like, shape (n, n)
        Hermitian right-hand side.

    Returns
    -------
    X : ndarray, shape (n, n)
        The Hermitian solution, often written ``L_Sigma(H)``.
    """
    Sigma, w, V = as_pd_eig(Sigma)
    H = as_hermitian(as_direction(H, Sigma, "H"), "H")
    return _lyap_eig(w, V, H)


def unitary_polar_factor(M):
    """Unitary factor ``U`` of the polar decomposition ``M = (M M*)^{1/2} U``.

    Computed from the SVD ``M = W S Q*`` as ``U = W Q*``, which avoids
    forming ``(M M*)^{-1/2}``. Among all unitaries ``V``, ``V = U*``
    maximises ``Re tr(V M)``.
    """
    M = as_invertible(M)
    W, _, Qh = np.linalg.svd(M)
    return W @ Qh


def log_divided_differences(w, tol=None):
    r"""Matrix of first divided differences of ``log`` at eigenvalues ``w``.

    Entry ``(i, j)`` is :math:`(\log w_i - \log w_j)/(w_i - w_j)`, replaced by
    :math:`1/w_i` when :math:`|w_i - w_j| \le` ``tol * max(w)``.
    """
    w = np.asarray(w, dtype=np.float64)
    if tol is None:
        tol = get_tolerances().tol_degenerate
    lo = np.minimum(w[:, None], w[None, :])
    hi = np.maximum(w[:, None], w[None, :])
    gap = hi - lo
    degenerate = gap <= tol * np.max(w)
    safe_gap = np.where(degenerate, 1.0, gap)
    # log1p of the relative gap avoids the cancellation in log(hi) - log(lo)
    dd = np.log1p(safe_gap / lo) / safe_gap
    return np.where(degenerate, 1.0 / w[:, None] + 0.0 * w[None, :], dd)


def dlog_frechet(rho, H):
    r"""Frechet derivative of the matrix logarithm at ``rho`` in direction ``H``.

    In the eigenbasis of ``rho`` the result is the Hadamard product of
    :math:`\tilde H` with the divided differences of ``log`` (Daleckii-Krein).
    """
    rho, w, V = as_pd_eig(rho, "rho")
    H = as_hermitian(as_direction(H, rho, "H"), "H")
    return _from_eigbasis(V, _to_eigbasis(V, H) * log_divided_differences(w))
