"""Input coercion and invariant checks shared by every module.

Every ``as_*`` helper returns a fresh complex (or float, for vectors) array
that satisfies the invariant of its type, or raises ``ValidationError``.
"""
import numpy as np

from ._config import get_tolerances
from .errors import ValidationError


def as_square(A, name="A"):
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise ValidationError(
            f"{name} must be a non-empty square matrix, got shape {A.shape}", "shape"
        )
    if not np.all(np.isfinite(A)):
        raise ValidationError(f"{name} has non-finite entries", "finite")
    return A.astype(np.complex128)


def as_hermitian(A, name="A"):
    """Symmetrise ``A`` if it is Hermitian up to round-off, else reject."""
    A = as_square(A, name)
    scale = np.max(np.abs(A))
    asym = np.max(np.abs(A - A.conj().T))
    if asym > get_tolerances().tol_herm * scale:
        raise ValidationError(
            f"{name} is not Hermitian (max |A - A*| = {asym:.3e})", "hermitian"
        )
    return 0.5 * (A + A.conj().T)


def _check_spectrum(w, name):
    tol = get_tolerances().tol_pd
    if w[-1] <= 0 or w[0] <= tol * w[-1]:
        raise ValidationError(
            f"{name} is not positive definite: smallest eigenvalue {w[0]:.6e} "
            f"(largest {w[-1]:.6e}, relative threshold {tol:g})",
            "positive_definite",
        )


def as_pd(A, name="Sigma"):
    A = as_hermitian(A, name)
    _check_spectrum(np.linalg.eigvalsh(A), name)
    return A


def as_pd_eig(A, name="Sigma"):
    """Validate a PD matrix and return it along with its eigendecomposition."""
    A = as_hermitian(A, name)
    w, V = np.linalg.eigh(A)
    _check_spectrum(w, name)
    return A, w, V


def normalize_trace(A, name="rho"):
    tr = np.trace(A).real
    if abs(tr - 1.0) > get_tolerances().tol_trace:
        raise ValidationError(f"{name} does not have unit trace (tr = {tr:.12g})", "unit_trace")
    return A / tr


def as_density(A, name="rho"):
    return normalize_trace(as_pd(A, name), name)


def as_density_eig(A, name="rho"):
    A, w, V = as_pd_eig(A, name)
    tr = np.trace(A).real
    A = normalize_trace(A, name)
    return A, w / tr, V


def as_trace_free(H, name="H"):
    """Hermitian tangent to the trace-one slice."""
    H = as_hermitian(H, name)
    tr = np.trace(H)
    if abs(tr) > 1e-12 * max(1.0, np.max(np.abs(H))):
        raise ValidationError(
            f"{name} is not trace-free (tr = {tr.real:.3e}); tangents to the "
            "density matrices must have zero trace",
            "trace_free",
        )
    return H


def as_invertible(M, name="M"):
    M = as_square(M, name)
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] == 0 or s[-1] <= get_tolerances().tol_inv * s[0]:
        raise ValidationError(
            f"{name} is singular to working precision: smallest singular value "
            f"{s[-1]:.6e}, largest {s[0]:.6e}",
            "invertible",
        )
    return M


def as_direction(A, like, name="A"):
    A = as_square(A, name)
    if A.shape != like.shape:
        raise ValidationError(f"{name} has shape {A.shape}, expected {like.shape}", "shape")
    return A


def same_shape(name, *arrays):
    shapes = {a.shape for a in arrays}
    if len(shapes) != 1:
        raise ValidationError(f"{name}: dimension mismatch {sorted(shapes)}", "shape")


def as_real_vector(x, name="x"):
    x = np.asarray(x)
    if np.iscomplexobj(x):
        if np.any(x.imag != 0):
            raise ValidationError(f"{name} must be real", "real")
        x = x.real
    x = x.astype(np.float64)
    if x.ndim != 1 or x.size < 1:
        raise ValidationError(f"{name} must be a non-empty vector, got shape {x.shape}", "shape")
    if not np.all(np.isfinite(x)):
        raise ValidationError(f"{name} has non-finite entries", "finite")
    return x


def as_positive_measure(mu, name="mu"):
    mu = as_real_vector(mu, name)
    # 1e-300 keeps strictly-positive weights away from underflow
    if np.any(mu <= 1e-300):
        raise ValidationError(f"{name} must have strictly positive weights", "positive")
    return mu


def as_prob_vector(p, name="p"):
    p = as_positive_measure(p, name)
    s = p.sum()
    if abs(s - 1.0) > 1e-12:
        raise ValidationError(f"{name} does not sum to one (sum = {s:.15g})", "unit_sum")
    return p / s


def as_pure_state(phi, name="phi"):
    phi = np.asarray(phi)
    if phi.ndim != 1 or phi.size < 1:
        raise ValidationError(f"{name} must be a non-empty vector", "shape")
    phi = phi.astype(np.complex128)
    nrm = np.linalg.norm(phi)
    if abs(nrm - 1.0) > 1e-12:
        raise ValidationError(f"{name} is not a unit vector (norm = {nrm:.15g})", "unit_norm")
    return phi
