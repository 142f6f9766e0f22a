"""Small numeric helpers shared across modules."""

import numpy as np
import scipy.sparse as sp

# Floor applied to degenerate (all-zero column) Lipschitz constants so that
# greedy ratio rules stay finite.  Such coordinates have identically zero
# gradients and are never selected.
LIPSCHITZ_FLOOR = 1e-12


def power_iteration_max_eig(mat, tol=1e-10, max_iter=None, seed=0):
    """Largest eigenvalue of a symmetric PSD matrix by power iteration.

    Uses a deterministic seeded start vector so repeated calls agree bitwise.
    ``mat`` may be a dense array, a sparse matrix, or a callable matvec paired
    with a dimension via the tuple ``(matvec, n)``.
    """
    if isinstance(mat, tuple):
        matvec, n = mat
    elif sp.issparse(mat):
        matvec, n = (lambda v: mat @ v), mat.shape[0]
    else:
        mat = np.asarray(mat, dtype=float)
        matvec, n = (lambda v: mat @ v), mat.shape[0]
    if n == 0:
        return 0.0
    if n == 1:
        return float(matvec(np.ones(1))[0])
    if max_iter is None:
        max_iter = max(10 * n, 50)
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(max_iter):
        w = matvec(v)
        norm_w = np.linalg.norm(w)
        if norm_w == 0.0:
            return 0.0
        lam_new = float(v @ w)
        v = w / norm_w
        if abs(lam_new - lam) <= tol * max(1.0, abs(lam_new)):
            lam = lam_new
            break
        lam = lam_new
    return abs(lam)


def _splitmix64(z):
    """SplitMix64 finalizer; maps uint64 -> well-mixed uint64."""
    z = (z + np.uint64(0x9E3779B97F4A7C15)) & np.uint64(0xFFFFFFFFFFFFFFFF)
    z = ((z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)) & np.uint64(0xFFFFFFFFFFFFFFFF)
    z = ((z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)) & np.uint64(0xFFFFFFFFFFFFFFFF)
    return z ^ (z >> np.uint64(31))


def block_hash(indices):
    """Order-independent 64-bit hash of a set of coordinate indices."""
    if len(indices) == 0:
        return 0
    with np.errstate(over="ignore"):
        mixed = _splitmix64(np.asarray(indices, dtype=np.uint64))
        acc = np.uint64(0)
        for m in mixed:
            acc ^= m
    return int(acc)


def check_indices(indices, n):
    """Validate a coordinate index set: distinct, sorted, within [0, n)."""
    idx = np.asarray(indices, dtype=np.int64)
    if idx.ndim != 1:
        raise ValueError("block indices must be one-dimensional")
    if idx.size and (idx.min() < 0 or idx.max() >= n):
        raise ValueError(f"block indices out of range [0, {n})")
    if np.any(np.diff(idx) <= 0):
        raise ValueError("block indices must be strictly increasing")
    return idx
