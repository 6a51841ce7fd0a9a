"""Exact linear algebra over a prime field F_p with int64 numpy arrays.

Entries are kept in ``[0, p)`` with ``p < 2**31`` so that a single product
fits in int64; matrix products split one factor into 16-bit limbs.
"""

from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 2_147_483_647


def check_prime(p: int) -> int:
    if not 2 <= p < 2**31:
        raise ValueError(f"prime must lie in [2, 2**31), got {p}")
    if p > 3 and any(p % k == 0 for k in (2, 3)):
        raise ValueError(f"{p} is not prime")
    k = 5
    while k * k <= p:
        if p % k == 0 or p % (k + 2) == 0:
            raise ValueError(f"{p} is not prime")
        k += 6
    return p


def as_field(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a = as_field(a, p)
    b = as_field(b, p)
    if a.shape[-1] == 0:
        return np.zeros(a.shape[:-1] + b.shape[-1:], dtype=np.int64)
    lo = b & 0xFFFF
    hi = b >> 16
    # each partial product < 2**47; inner dims up to 2**16 stay below 2**63
    return ((a @ hi % p) * 0x10000 + a @ lo % p) % p


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = as_field(a, p).copy()
    if m.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = m[r] * pow(int(m[r, c]), p - 2, p) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            m[hit] = (m[hit] - col[hit, None] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def row_basis(a, p: int, ncols: int | None = None) -> np.ndarray:
    """Rows forming a basis of the row space (reduced echelon form)."""
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return np.zeros((0, a.shape[1] if a.ndim == 2 else (ncols or 0)), dtype=np.int64)
    m, piv = rref(a, p)
    return m[: len(piv)]


def nullspace(a, p: int, ncols: int | None = None) -> np.ndarray:
    """Rows spanning ``{x : a @ x = 0}``."""
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] == 0:
        n = a.shape[1] if a.ndim == 2 else ncols
        return np.eye(n, dtype=np.int64)
    n = a.shape[1]
    m, piv = rref(a, p)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(piv):
            basis[i, pc] = (-m[r, f]) % p
    return basis


def nullity(a, p: int, ncols: int | None = None) -> int:
    a = np.asarray(a)
    n = a.shape[1] if a.ndim == 2 else ncols
    return n - rank(a, p)
