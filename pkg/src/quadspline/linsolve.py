"""Dense solves, determinants, and real-eigenvalue search by determinant roots.

Matrices are plain 2-D float arrays. The solver is LU with partial pivoting,
written out here (rather than delegated) because the contract fixes the
pivot-underflow threshold and the determinant needs sign-tracked elimination
that degrades to 0 instead of raising; numpy.linalg serves as the oracle in
the tests. Sizes stay small (collocation on a few dozen nodes), so there is
nothing to gain from LAPACK anyway.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

PIVOT_RTOL = 1e-13


class SingularMatrixError(ArithmeticError):
    """A pivot underflowed PIVOT_RTOL times the matrix inf-norm."""


def _inf_norm(A: np.ndarray) -> float:
    return float(np.max(np.sum(np.abs(A), axis=1))) if A.size else 0.0


def _pivoted_solve(A: np.ndarray, b: np.ndarray, pivot_floor) -> np.ndarray:
    """Forward elimination + back substitution with partial pivoting.

    pivot_floor=None raises on an underflowing pivot; a float clamps the
    pivot to that magnitude instead (the classic inverse-iteration device
    for solving against an intentionally near-singular matrix).
    """
    A = np.array(A, dtype=float)
    b = np.array(b, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n) or b.shape != (n,):
        raise ValueError(f"shape mismatch: A {A.shape}, b {b.shape}")
    norm = _inf_norm(A)
    for k in range(n):
        p = k + int(np.argmax(np.abs(A[k:, k])))
        if abs(A[p, k]) <= PIVOT_RTOL * norm:
            if pivot_floor is None:
                raise SingularMatrixError(f"pivot {A[p, k]!r} at column {k}")
            A[p, k] = pivot_floor if A[p, k] >= 0 else -pivot_floor
        if p != k:
            A[[k, p]] = A[[p, k]]
            b[[k, p]] = b[[p, k]]
        m = A[k + 1:, k] / A[k, k]
        A[k + 1:, k + 1:] -= np.outer(m, A[k, k + 1:])
        b[k + 1:] -= m * b[k]
    x = np.empty(n)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - A[k, k + 1:] @ x[k + 1:]) / A[k, k]
    return x


def solve_dense(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve A x = b by LU with partial pivoting.

    Raises SingularMatrixError when a pivot falls below
    PIVOT_RTOL * ||A||_inf.
    """
    return _pivoted_solve(A, b, None)


def determinant(A: np.ndarray) -> float:
    """Determinant via pivoted elimination with sign tracking.

    No pivot threshold here: the eigenvalue scan needs det to pass smoothly
    through zero, so an exactly-zero pivot returns 0 and anything else is
    eliminated as-is.
    """
    A = np.array(A, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError(f"matrix not square: {A.shape}")
    det = 1.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(A[k:, k])))
        if A[p, k] == 0.0:
            return 0.0
        if p != k:
            A[[k, p]] = A[[p, k]]
            det = -det
        det *= A[k, k]
        m = A[k + 1:, k] / A[k, k]
        A[k + 1:, k + 1:] -= np.outer(m, A[k, k + 1:])
    return float(det)


@dataclass(frozen=True)
class EigenResult:
    """A real characteristic value with its max-norm-1 null vector.

    residual = ||(I - lambda*alpha) v||_inf; reported results satisfy
    residual <= 1e-8 * ||alpha||_inf.
    """

    value: float
    vector: np.ndarray = field(repr=False)
    residual: float


def _char_det(alpha: np.ndarray, lam: float) -> float:
    return determinant(np.eye(alpha.shape[0]) - lam * alpha)


def _bisect_root(alpha, lo, hi, glo, tol=1e-10):
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        gm = _char_det(alpha, mid)
        if gm == 0.0:
            return mid
        if glo * gm < 0:
            hi = mid
        else:
            lo, glo = mid, gm
    return 0.5 * (lo + hi)


def _refine_min(alpha, lo, hi, tol=1e-10):
    # golden-section search on |det(I - lam*alpha)|
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1 = abs(_char_det(alpha, x1))
    f2 = abs(_char_det(alpha, x2))
    while hi - lo > tol:
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = abs(_char_det(alpha, x1))
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = abs(_char_det(alpha, x2))
    return 0.5 * (lo + hi)


def _null_vector(alpha: np.ndarray, lam: float, seed: int = 20240901):
    """Inverse iteration on (I - lam*alpha): 3 solves from a random start.

    The matrix is near-singular on purpose; underflowing pivots are clamped
    rather than rejected, which keeps the iteration working even exactly at
    (multiple) roots.
    """
    n = alpha.shape[0]
    eye = np.eye(n)
    shifted = eye - lam * alpha
    floor = max(PIVOT_RTOL * _inf_norm(shifted), 1e-300)
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(n)
    for _ in range(3):
        v = _pivoted_solve(shifted, v, floor)
        v = v / np.max(np.abs(v))
    residual = float(np.max(np.abs(shifted @ v)))
    return v, residual


def find_real_eigenvalues(
    alpha: np.ndarray, lo: float, hi: float, scan_points: int = 2000
) -> list[EigenResult]:
    """All real roots of det(I - lambda*alpha) in [lo, hi].

    Scans a uniform mesh for sign changes (bisected to 1e-10) and refines
    every strict local minimum of |det| as well, keeping those whose refined
    value drops below 1e-8 of the scan maximum: near-double roots need not
    produce a sign change on the mesh. Each root is paired with a null
    vector from inverse iteration; candidates whose residual exceeds
    1e-8 * ||alpha||_inf are discarded as spurious.
    """
    alpha = np.asarray(alpha, dtype=float)
    if alpha.ndim != 2 or alpha.shape[0] != alpha.shape[1]:
        raise ValueError(f"matrix not square: {alpha.shape}")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if scan_points < 10:
        raise ValueError(f"need scan_points >= 10, got {scan_points}")

    lams = np.linspace(lo, hi, scan_points)
    g = np.array([_char_det(alpha, lam) for lam in lams])
    gmax = float(np.max(np.abs(g)))
    if gmax == 0.0:
        return []

    candidates: list[float] = []
    for i in range(scan_points - 1):
        if g[i] == 0.0:
            candidates.append(float(lams[i]))
        elif g[i] * g[i + 1] < 0:
            candidates.append(_bisect_root(alpha, lams[i], lams[i + 1], g[i]))
    if g[-1] == 0.0:
        candidates.append(float(lams[-1]))

    ag = np.abs(g)
    for i in range(1, scan_points - 1):
        if ag[i] < ag[i - 1] and ag[i] < ag[i + 1]:
            lam = _refine_min(alpha, lams[i - 1], lams[i + 1])
            if abs(_char_det(alpha, lam)) <= 1e-8 * gmax:
                candidates.append(lam)

    roots: list[float] = []
    for lam in sorted(candidates):
        if not any(abs(lam - r) <= 1e-6 * (1.0 + abs(r)) for r in roots):
            roots.append(lam)

    tol = 1e-8 * _inf_norm(alpha)
    results = []
    for lam in roots:
        vector, residual = _null_vector(alpha, lam)
        if residual <= tol:
            vector.setflags(write=False)
            results.append(EigenResult(float(lam), vector, residual))
    return results
