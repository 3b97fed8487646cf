"""Dense matrix helpers: pseudoinverse and least-squares solves.

Matrices are plain 2-d float64 numpy arrays. Every public function validates
shape and finiteness of its inputs and guarantees a finite result.
"""

from __future__ import annotations

import numpy as np

__all__ = ["as_matrix", "pseudoinverse", "lstsq_solve"]


def as_matrix(values, name: str = "matrix") -> np.ndarray:
    """Coerce ``values`` to a finite 2-d float64 array with rows and columns."""
    m = np.asarray(values, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got ndim={m.ndim}")
    if m.shape[0] == 0 or m.shape[1] == 0:
        raise ValueError("empty matrix")
    if not np.isfinite(m).all():
        raise ValueError("non-finite input")
    return m


def pseudoinverse(m, rcond: float = 1e-12) -> np.ndarray:
    """Moore-Penrose pseudoinverse computed via SVD.

    Singular values at or below ``rcond * sigma_max`` are treated as zero,
    so the result stays stable on rank-deficient input. The returned matrix
    satisfies the four Penrose conditions up to floating-point error.
    """
    a = as_matrix(m)
    if rcond < 0:
        raise ValueError("rcond must be nonnegative")
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    cutoff = rcond * (s[0] if s.size else 0.0)
    inv = np.zeros_like(s)
    keep = s > cutoff
    inv[keep] = 1.0 / s[keep]
    result = (vt.T * inv) @ u.T
    if not np.isfinite(result).all():
        raise ValueError("non-finite result")
    return result


def lstsq_solve(h, t, ridge: float = 0.0, rcond: float = 1e-12) -> np.ndarray:
    """Solve ``min_beta ||h @ beta - t||`` for an N x L design matrix ``h``.

    With ``ridge == 0`` this is the minimum-norm least-squares solution
    ``pinv(h) @ t``; with ``ridge > 0`` it solves the regularized normal
    equations ``(h.T h + ridge I) beta = h.T t``.
    """
    hm = as_matrix(h, "h")
    tm = as_matrix(t, "t")
    if hm.shape[0] != tm.shape[0]:
        raise ValueError("incompatible shapes")
    if ridge < 0:
        raise ValueError("ridge must be nonnegative")
    if ridge == 0.0:
        beta = pseudoinverse(hm, rcond) @ tm
    else:
        gram = hm.T @ hm + ridge * np.eye(hm.shape[1])
        beta = np.linalg.solve(gram, hm.T @ tm)
    if not np.isfinite(beta).all():
        raise ValueError("non-finite result")
    return beta
