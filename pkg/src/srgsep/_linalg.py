"""Linear algebra over prime fields GF(p) on numpy integer arrays."""

from __future__ import annotations

import numpy as np


def rref_mod_p(m, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p) and the pivot columns."""
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_mod_p(m, p: int) -> int:
    return len(rref_mod_p(m, p)[1])


def nullspace_mod_p(m, p: int) -> np.ndarray:
    """Basis (as rows) of {x : m x = 0} over GF(p)."""
    a, piv = rref_mod_p(m, p)
    n = np.asarray(m).shape[1]
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = (-a[i, f]) % p
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), n)


def all_vectors(n: int, q: int) -> np.ndarray:
    """All q**n vectors over {0..q-1}, lexicographic, first coordinate slowest."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    idx = np.arange(q**n, dtype=np.int64)
    w = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // w[None, :]) % q


def encode(vectors, q: int) -> np.ndarray:
    """Integer index of each vector (row) in the ordering of all_vectors."""
    v = np.asarray(vectors, dtype=np.int64)
    n = v.shape[-1]
    w = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return v @ w
