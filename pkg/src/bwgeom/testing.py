"""Random samplers for the spaces used in the library.

Used by the test-suite; all take a ``numpy.random.Generator``.
"""
import numpy as np


def random_unitary(rng, n, size=None):
    """Haar-distributed unitary matrices (QR of a complex Ginibre matrix)."""
    shape = (n, n) if size is None else (size, n, n)
    Z = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    d = np.diagonal(R, axis1=-2, axis2=-1)
    return Q * (d / np.abs(d))[..., None, :]


def random_hermitian(rng, n, scale=1.0):
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * 0.5 * (Z + Z.conj().T)


def random_trace_free(rng, n, scale=1.0):
    H = random_hermitian(rng, n, scale)
    return H - np.trace(H).real / n * np.eye(n)


def random_spectrum(rng, n, cond=1e2):
    """Eigenvalues in ``[1, cond]``, log-uniform, with both ends attained when n > 1."""
    if n == 1:
        return np.ones(1)
    w = np.exp(rng.uniform(0.0, np.log(cond), n))
    w[0], w[1] = 1.0, cond
    return np.sort(w)


def random_pd(rng, n, cond=1e2, scale=1.0):
    U = random_unitary(rng, n)
    w = random_spectrum(rng, n, cond) * scale / cond ** 0.5
    A = (U * w) @ U.conj().T
    return 0.5 * (A + A.conj().T)


def random_density(rng, n, cond=1e2):
    rho = random_pd(rng, n, cond)
    return rho / np.trace(rho).real


def random_invertible(rng, n, cond=1e2):
    W, Q = random_unitary(rng, n), random_unitary(rng, n)
    s = np.sqrt(random_spectrum(rng, n, cond))
    return (W * s) @ Q.conj().T


def random_measure(rng, n, low=0.05, high=2.0):
    return rng.uniform(low, high, n)


def random_prob(rng, n):
    p = rng.dirichlet(np.full(n, 2.0))
    p = np.clip(p, 1e-6, None)
    return p / p.sum()


def random_pure_state(rng, n):
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return z / np.linalg.norm(z)
