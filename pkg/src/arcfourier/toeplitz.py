"""Lower-triangular Toeplitz operators on polynomials of degree <= n.

The operator with first column ``t`` acts on ``q`` as the truncated product
``(t * q) mod z^(n+1)``.  For an analytic symbol f this is the compression of
multiplication by f; its norm is 1 exactly when the symbol can be a finite
Blaschke product of order <= n.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import EmptyEigenspace, NoConvergence
from .polynomial import Polynomial

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


def jacobi_eigh(a, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(w, V)`` with eigenvalues ``w`` sorted in decreasing order and
    orthonormal eigenvectors in the columns of ``V``.  Sweeps stop when the
    off-diagonal Frobenius norm drops below ``tol * max(1, ||a||_F)``.
    """
    A = np.array(a, dtype=complex)
    size = A.shape[0]
    if A.shape != (size, size):
        raise ValueError("matrix must be square")
    A = 0.5 * (A + A.conj().T)
    V = np.eye(size, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(A)))
    offdiag = ~np.eye(size, dtype=bool)

    for sweep in itertools.count():
        off = math.sqrt(float(np.sum(np.abs(A[offdiag]) ** 2)))
        if off < tol * scale:
            break
        if sweep == max_sweeps:
            raise NoConvergence(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = A[p, q]
                r = abs(apq)
                if r < 1e-300:
                    continue
                phase = apq / r
                theta = (A[q, q].real - A[p, p].real) / (2.0 * r)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                G = np.array([[c, s * phase], [-s * phase.conjugate(), c]])
                idx = [p, q]
                A[:, idx] = A[:, idx] @ G
                A[idx, :] = G.conj().T @ A[idx, :]
                A[p, q] = A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
                V[:, idx] = V[:, idx] @ G

    w = A.diagonal().real.copy()
    order = np.argsort(-w, kind="stable")
    return w[order], V[:, order]


@dataclass(frozen=True, eq=False)
class LowerToeplitz:
    col: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "col", np.asarray(self.col, dtype=complex).reshape(-1))

    @property
    def n(self) -> int:
        return self.col.size - 1

    @cached_property
    def matrix(self) -> np.ndarray:
        size = self.col.size
        j, k = np.indices((size, size))
        return np.where(j >= k, self.col[np.clip(j - k, 0, None)], 0.0)

    @cached_property
    def gram_eigen(self):
        """Jacobi eigenpairs of ``M* M`` (eigenvalues decreasing)."""
        M = self.matrix
        return jacobi_eigh(M.conj().T @ M)

    def __matmul__(self, q):
        return apply(self, q)


def from_first_column(t) -> LowerToeplitz:
    return LowerToeplitz(t)


def apply(M: LowerToeplitz, q) -> Polynomial:
    """``(Mq)[j] = sum_{k<=j} t[j-k] q[k]``; q is zero-padded to length n+1."""
    qv = q.padded(M.col.size) if isinstance(q, Polynomial) else Polynomial(q).padded(M.col.size)
    return Polynomial(np.convolve(M.col, qv)[: M.col.size])


def operator_norm(M: LowerToeplitz) -> float:
    """Largest singular value, via the top Jacobi eigenvalue of ``M* M``."""
    w, _ = M.gram_eigen
    return math.sqrt(max(w[0], 0.0))


def norm_preserving_subspace(M: LowerToeplitz, tol_eig: float = 1e-8) -> np.ndarray:
    """Orthonormal basis (columns) of the eigenvalue-1 eigenspace of ``M* M``."""
    w, V = M.gram_eigen
    sel = np.abs(w - 1.0) <= tol_eig
    if not sel.any():
        raise EmptyEigenspace(
            f"no eigenvalue of M*M within {tol_eig:g} of 1 (largest is {w[0]!r})"
        )
    return V[:, sel]


def norm_preserving_min_degree_vector(M: LowerToeplitz, tol_eig: float = 1e-8) -> Polynomial:
    """A unit vector q of least degree with ``||Mq|| = ||q||``.

    The eigenvalue-1 eigenspace of ``M* M`` consists of the multiples
    ``q_min * s`` with ``deg s <= n - d``, where d is the order of the symbol,
    so its dimension m fixes ``d = n + 1 - m``.  Writing ``q = B x`` for an
    eigenbasis B, the least-degree element is the unique direction with
    ``deg q <= d`` and ``deg Mq <= d``; x is the smallest right singular
    vector of the stacked rows ``B[d+1:]`` and ``(MB)[d+1:]``.  Requiring
    ``deg Mq <= d`` as well matters when a zero of the symbol lies near the
    origin: tails of size ``|a|^n`` drop below rounding and the numerical
    eigenspace then contains spurious low-degree vectors.

    The result has unit norm and a positive real leading coefficient.

    Raises
    ------
    EmptyEigenspace
        No eigenvalue within ``tol_eig`` of 1, or the selected q fails
        ``| ||Mq|| - 1 | <= sqrt(tol_eig)``.
    """
    B = norm_preserving_subspace(M, tol_eig)
    size, m = B.shape
    d = size - m
    if m == 1:
        q = B[:, 0].copy()
    else:
        constraints = np.vstack([B[d + 1 :], (M.matrix @ B)[d + 1 :]])
        _, _, vh = np.linalg.svd(constraints)
        q = B @ vh[-1].conj()
        q[d + 1 :] = 0.0
    q /= np.linalg.norm(q)
    lead = q[Polynomial(q).degree()]
    q *= abs(lead) / lead

    gain = float(np.linalg.norm(M.matrix @ q))
    if abs(gain - 1.0) > math.sqrt(tol_eig):
        raise EmptyEigenspace(f"least-degree candidate has ||Mq|| = {gain!r}, not 1")
    return Polynomial(q)
