"""Dense linear algebra over GF(p) on numpy arrays.

Entries are kept as float64 integers in [0, p).  For p < 2**26 a dot
product of length below 2**53 / p**2 is exact in double precision, so
panel updates can go through BLAS matrix products and be reduced
afterwards.  Larger primes fall back to the (slow) int64 object path.
"""

from __future__ import annotations

import numpy as np

PANEL = 96


def _exact_chunk(p: int) -> int:
    return max(1, int(2**52 // ((p - 1) ** 2 + 1)))


def as_field_array(a, p: int) -> np.ndarray:
    arr = np.asarray(a)
    if arr.dtype.kind == "f":
        arr = np.mod(arr, p)
    else:
        arr = np.mod(arr.astype(np.int64), p).astype(np.float64)
    return arr


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """(a @ b) mod p for float64 arrays with entries in [0, p)."""
    k = a.shape[1]
    step = _exact_chunk(p)
    if k <= step:
        return np.mod(a @ b, p)
    out = np.zeros((a.shape[0], b.shape[1]))
    for s in range(0, k, step):
        out = np.mod(out + np.mod(a[:, s:s + step] @ b[s:s + step], p), p)
    return out


def _inv_scalar(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def _small_inverse(m: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a small invertible square matrix by Gauss-Jordan."""
    k = m.shape[0]
    aug = np.concatenate([m.copy(), np.eye(k)], axis=1)
    for c in range(k):
        piv = c + int(np.flatnonzero(aug[c:, c])[0])
        if piv != c:
            aug[[c, piv]] = aug[[piv, c]]
        aug[c] = np.mod(aug[c] * _inv_scalar(aug[c, c], p), p)
        col = aug[:, c].copy()
        col[c] = 0
        nz = np.flatnonzero(col)
        if nz.size:
            aug[nz] = np.mod(aug[nz] - np.outer(col[nz], aug[c]), p)
    return aug[:, k:]


def _panel_pivots(sub: np.ndarray, p: int):
    """Rows and columns of an echelon basis of a narrow panel (unblocked)."""
    work = sub.copy()
    rows = np.arange(work.shape[0])
    r = 0
    prow, pcol = [], []
    for c in range(work.shape[1]):
        if r == work.shape[0]:
            break
        nz = np.flatnonzero(work[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            work[[r, piv]] = work[[piv, r]]
            rows[[r, piv]] = rows[[piv, r]]
        work[r, c:] = np.mod(work[r, c:] * _inv_scalar(work[r, c], p), p)
        below = r + 1 + np.flatnonzero(work[r + 1:, c])
        if below.size:
            work[below, c:] = np.mod(work[below, c:] - np.outer(work[below, c], work[r, c:]), p)
        prow.append(int(rows[r]))
        pcol.append(c)
        r += 1
    return prow, pcol


def rref(a, p: int, reduced: bool = True):
    """Row echelon form of ``a`` over GF(p).

    Returns (E, pivots): E has one row per pivot, pivots are the pivot
    column indices in increasing order, each pivot entry is 1 and, when
    ``reduced``, the pivot columns of E form the identity.
    """
    A = as_field_array(a, p).copy()
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    m, n = A.shape
    r = 0
    pivots: list[int] = []
    for c0 in range(0, n, PANEL):
        if r == m:
            break
        c1 = min(n, c0 + PANEL)
        prow, pcol = _panel_pivots(A[r:, c0:c1], p)
        if not prow:
            continue
        k = len(prow)
        pc = [c0 + c for c in pcol]
        others = np.setdiff1d(np.arange(m - r), prow, assume_unique=True)
        order = np.concatenate([np.array(prow, dtype=np.int64), others])
        A[r:] = A[r:][order]
        top = A[r:r + k, c0:]
        top = matmul(_small_inverse(top[:, [c - c0 for c in pc]], p), top, p)
        A[r:r + k, c0:] = top
        if r + k < m:
            bot = A[r + k:, c0:]
            coef = bot[:, [c - c0 for c in pc]].copy()
            nz = np.flatnonzero(coef.any(axis=1))
            if nz.size:
                bot[nz] = np.mod(bot[nz] - matmul(coef[nz], top, p), p)
                A[r + k:, c0:] = bot
        if reduced and r > 0:
            above = A[:r, c0:]
            coef = above[:, [c - c0 for c in pc]].copy()
            nz = np.flatnonzero(coef.any(axis=1))
            if nz.size:
                above[nz] = np.mod(above[nz] - matmul(coef[nz], top, p), p)
                A[:r, c0:] = above
        pivots.extend(pc)
        r += k
    return A[:r], pivots


def rank(a, p: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(rref(a, p, reduced=False)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis (as rows) of {x : a @ x = 0}."""
    a = as_field_array(a, p)
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(n)
    E, piv = rref(a, p)
    free = [j for j in range(n) if j not in set(piv)]
    basis = np.zeros((len(free), n))
    for t, j in enumerate(free):
        basis[t, j] = 1
        if piv:
            basis[t, piv] = np.mod(-E[:, j], p)
    return basis


def left_nullspace(a, p: int) -> np.ndarray:
    """Basis (as rows) of {y : y @ a = 0}."""
    return nullspace(np.asarray(a).T, p)


def row_space_basis(a, p: int) -> np.ndarray:
    if np.asarray(a).size == 0:
        return np.zeros((0, np.asarray(a).shape[1] if np.asarray(a).ndim == 2 else 0))
    return rref(a, p)[0]


def inverse(a, p: int) -> np.ndarray:
    a = as_field_array(a, p)
    n = a.shape[0]
    if a.shape != (n, n) or rank(a, p) != n:
        raise ZeroDivisionError("matrix is singular over GF(%d)" % p)
    return _small_inverse(a, p)


def solve(a, b, p: int):
    """One solution x of a @ x = b (b a vector or matrix), or None."""
    a = as_field_array(a, p)
    b = as_field_array(b, p)
    vec = b.ndim == 1
    if vec:
        b = b[:, None]
    aug = np.concatenate([a, b], axis=1)
    E, piv = rref(aug, p)
    n = a.shape[1]
    if any(c >= n for c in piv):
        return None
    x = np.zeros((n, b.shape[1]))
    for i, c in enumerate(piv):
        x[c] = E[i, n:]
    return x[:, 0] if vec else x


def in_row_space(basis_rref, pivots, v, p: int) -> bool:
    """Membership of v in the span of reduced echelon rows."""
    v = as_field_array(v, p).copy()
    if len(pivots):
        v = np.mod(v - v[pivots] @ basis_rref, p)
    return not v.any()


def rank_reference(a, p: int) -> int:
    """Plain Gaussian elimination with Python integers, for testing."""
    rows = [[int(x) % p for x in row] for row in np.asarray(a).tolist()]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    return r
