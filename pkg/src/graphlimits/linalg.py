"""Cyclic Jacobi eigenvalues for small symmetric matrices, and a PSD test."""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import DomainError

OFFDIAG_TOL = 1e-13
PSD_TOL = 1e-9


def jacobi_eigenvalues(M, tol: float = OFFDIAG_TOL, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.

    Sweeps over all off-diagonal pairs until the off-diagonal Frobenius norm
    drops below ``tol * max(1, ||M||_F)``.
    """
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    scale = max(np.linalg.norm(A), 1.0)
    for _ in range(max_sweeps):
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                h = float(A[q, q] - A[p, p])
                if abs(apq) < 1e-150 * abs(h):
                    t = apq / h
                else:
                    theta = h / (2.0 * apq)
                    # smaller root of t^2 + 2 theta t - 1 = 0
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                Ap, Aq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * Ap - s * Aq
                A[:, q] = s * Ap + c * Aq
                Ap, Aq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * Ap - s * Aq
                A[q, :] = s * Ap + c * Aq
                A[p, q] = A[q, p] = 0.0
    else:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    return np.sort(np.diag(A))


class PSDCheck(NamedTuple):
    psd: bool
    min_eigenvalue: float
    eigenvalues: np.ndarray

    def __bool__(self) -> bool:
        return self.psd


def is_psd(M, tol: float = PSD_TOL) -> PSDCheck:
    """Positive semidefiniteness up to ``tol`` on the smallest eigenvalue."""
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {A.shape}")
    if np.abs(A - A.T).max(initial=0.0) > tol:
        raise DomainError("matrix is not symmetric")
    eig = jacobi_eigenvalues((A + A.T) / 2)
    lo = float(eig[0]) if len(eig) else 0.0
    return PSDCheck(lo >= -tol, lo, eig)
