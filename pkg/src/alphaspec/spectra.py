"""Dense alpha-weighted spectra.

The working matrix is ``alpha * D + (1 - alpha) * A`` for a simple graph
with degree diagonal D and adjacency A.  Graphs here never exceed 62
vertices, so a dense symmetric eigensolve is always the right tool; the
solver is a cyclic Jacobi iteration (see :mod:`alphaspec._kernels`) chosen
for its determinism -- fixed sweep order, no pivot searches -- rather than
raw speed.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import NumericError, ParameterError
from .graphs import Graph


def _check_alpha(alpha: float) -> float:
    if isinstance(alpha, bool) or not isinstance(alpha, numbers.Real):
        raise ParameterError(f"alpha must be a real number, got {alpha!r}")
    alpha = float(alpha)
    if not (0.0 <= alpha <= 1.0) or alpha != alpha:
        raise ParameterError(f"alpha must lie in [0, 1], got {alpha!r}")
    return alpha


def alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    """Dense float64 matrix alpha*D + (1-alpha)*A for ``g``."""
    alpha = _check_alpha(alpha)
    n = g.n
    m = np.zeros((n, n), dtype=np.float64)
    w = 1.0 - alpha
    for i in range(n):
        m[i, i] = alpha * g.degree(i)
        row = g.rows[i]
        for j in range(n):
            if (row >> j) & 1:
                m[i, j] = w
    return m


@dataclass(frozen=True)
class SpectralResult:
    """Largest eigenvalue with its unit eigenvector and iteration count."""

    radius: float
    vector: tuple[float, ...]
    iterations: int

    def to_json(self, alpha: float) -> dict:
        return {
            "rho": self.radius,
            "vector": list(self.vector),
            "alpha": float(alpha),
        }


def _jacobi(m: np.ndarray, want_vectors: bool) -> tuple[np.ndarray, np.ndarray, int]:
    a = np.array(m, dtype=np.float64, order="C", copy=True)
    n = a.shape[0]
    v = np.empty((n, n) if want_vectors else (1, 1), dtype=np.float64)
    sweeps, converged = _kernels.jacobi_cyclic(a, v, want_vectors)
    if not converged:
        raise NumericError(
            f"Jacobi iteration did not converge within "
            f"{_kernels.JACOBI_MAX_SWEEPS} sweeps on an order-{n} matrix",
            best_estimate=float(np.max(np.diag(a))),
        )
    return a, v, sweeps


def largest_eigenpair(g: Graph, alpha: float) -> SpectralResult:
    """Largest eigenvalue and a unit eigenvector of the alpha matrix.

    For a connected graph this is the Perron pair and the vector is
    entrywise positive.  Sign convention: the entry of largest magnitude
    (lowest index on ties) is made positive, so repeated calls agree to
    the bit.
    """
    a, v, sweeps = _jacobi(alpha_matrix(g, alpha), want_vectors=True)
    diag = np.diag(a)
    idx = int(np.argmax(diag))
    vec = np.array(v[:, idx], dtype=np.float64)
    pivot = int(np.argmax(np.abs(vec)))
    if vec[pivot] < 0.0:
        vec = -vec
    nrm = float(np.linalg.norm(vec))
    if nrm > 0.0:
        vec = vec / nrm
    return SpectralResult(
        radius=float(diag[idx]),
        vector=tuple(float(x) for x in vec),
        iterations=sweeps,
    )


def spectral_radius(g: Graph, alpha: float) -> float:
    """Largest eigenvalue of the alpha matrix of ``g``."""
    a, _, _ = _jacobi(alpha_matrix(g, alpha), want_vectors=False)
    return float(np.max(np.diag(a)))


def full_spectrum(g: Graph, alpha: float) -> tuple[float, ...]:
    """All eigenvalues of the alpha matrix, descending."""
    a, _, _ = _jacobi(alpha_matrix(g, alpha), want_vectors=False)
    vals = sorted((float(x) for x in np.diag(a)), reverse=True)
    return tuple(vals)


def symmetric_eigenvalues(m: np.ndarray) -> tuple[float, ...]:
    """All eigenvalues of an arbitrary symmetric matrix, descending."""
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ParameterError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] and not np.allclose(m, m.T, atol=1e-12, rtol=0.0):
        raise ParameterError("matrix is not symmetric")
    a, _, _ = _jacobi(m, want_vectors=False)
    return tuple(sorted((float(x) for x in np.diag(a)), reverse=True))


def rayleigh_quotient(g: Graph, alpha: float, vec) -> float:
    """x^T M x / x^T x for the alpha matrix; a lower bound on the radius."""
    m = alpha_matrix(g, alpha)
    x = np.asarray(vec, dtype=np.float64)
    if x.shape != (g.n,):
        raise ParameterError(
            f"vector has shape {x.shape}, expected ({g.n},)")
    denom = float(x @ x)
    if denom == 0.0:
        raise ParameterError("Rayleigh quotient of the zero vector")
    return float(x @ m @ x) / denom
