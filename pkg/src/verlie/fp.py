"""Exact linear algebra over the prime field F_p.

Matrices and vectors are plain numpy int64 arrays with entries reduced to
[0, p).  Every routine is deterministic: pivots are taken in the leftmost
column first, smallest row index first, and free variables are set to zero,
so outputs are reproducible bit for bit.
"""

from __future__ import annotations

import numpy as np

from .errors import NotNilpotent

Array = np.ndarray


def normalize(a, p: int) -> Array:
    """Coerce to an int64 array with entries reduced mod p."""
    return np.asarray(a, dtype=np.int64) % p


def inv_scalar(a: int, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod p")
    return pow(a, p - 2, p)


def matmul(a: Array, b: Array, p: int) -> Array:
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def rref(m, p: int) -> tuple[Array, list[int]]:
    """Reduced row echelon form over F_p.

    Returns (R, pivot_columns).  Zero rows are moved to the bottom; pivot
    entries are scaled to 1 and are the only nonzero entries in their column.
    """
    a = normalize(m, p).copy()
    if a.ndim != 2:
        raise ValueError("rref expects a matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * inv_scalar(a[r, c], p)) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m, p: int) -> int:
    _, pivots = rref(m, p)
    return len(pivots)


def kernel_basis(m, p: int) -> Array:
    """Basis of the right kernel of m, one vector per row.

    Deterministic: each basis vector has a 1 in one free column (ascending),
    zeros in the other free columns, and pivot entries filled by back
    substitution.
    """
    a = normalize(m, p)
    rows, cols = a.shape
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, fc]) % p
    return basis


def solve(m, b, p: int) -> Array | None:
    """One solution x of m @ x = b, or None if the system is inconsistent.

    Free variables are set to 0 under the fixed pivot order.
    """
    a = normalize(m, p)
    vec = normalize(b, p)
    if vec.shape != (a.shape[0],):
        raise ValueError(f"rhs has length {vec.shape}, expected {a.shape[0]}")
    aug = np.hstack([a, vec.reshape(-1, 1)])
    r, pivots = rref(aug, p)
    n = a.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, n]
    return x


def solve_many(m, bs, p: int) -> Array:
    """Solve m @ X = bs (bs columns are right-hand sides); raises if any is inconsistent."""
    a = normalize(m, p)
    rhs = normalize(bs, p)
    aug = np.hstack([a, rhs])
    r, pivots = rref(aug, p)
    n = a.shape[1]
    if any(pc >= n for pc in pivots):
        raise ValueError("inconsistent system")
    x = np.zeros((n, rhs.shape[1]), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, n:]
    return x


def inverse(m, p: int) -> Array:
    a = normalize(m, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse expects a square matrix")
    aug = np.hstack([a, np.eye(n, dtype=np.int64)])
    r, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return r[:, n:]


def _power(m: Array, k: int, p: int) -> Array:
    result = np.eye(m.shape[0], dtype=np.int64)
    base = m % p
    while k:
        if k & 1:
            result = (result @ base) % p
        base = (base @ base) % p
        k >>= 1
    return result


def nilpotency_degree(m, p: int) -> int:
    """Smallest k with m^k = 0; raises NotNilpotent if m^dim != 0.

    The zero matrix has degree 1 (m^0 is the identity, nonzero for dim > 0).
    """
    a = normalize(m, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("nilpotency_degree expects a square matrix")
    if n == 0:
        return 0
    if _power(a, n, p).any():
        raise NotNilpotent(f"m^{n} != 0")
    # Binary search for the degree: powers of a nilpotent matrix only lose rank.
    lo, hi = 0, n  # m^lo != 0 (treat m^0 = I), m^hi = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _power(a, mid, p).any():
            lo = mid
        else:
            hi = mid
    return hi
