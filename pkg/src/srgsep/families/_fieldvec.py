"""Vectorised vector-space helpers over a small field GF(q).

Field elements are the integer encodings used by :class:`srgsep.gf.GF`;
vectors are rows of int64 arrays.  Everything goes through dense q x q
addition and multiplication tables, which is fine for q <= 256.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .._linalg import all_vectors, encode
from ..gf import GF
from ..graph import DenseGraph


class VecSpace:
    def __init__(self, f: GF):
        if f.q > 4096:
            raise ValueError("vector helpers are meant for small fields")
        self.f = f
        self.q = f.q
        x = np.arange(f.q)
        self.add = f.add_arr(x[:, None], x[None, :])
        self.mul = f.mul_arr(x[:, None], x[None, :])
        self.neg = f.neg_arr(x)
        self.inv = np.zeros(f.q, dtype=np.int64)
        self.inv[1:] = [f.inv(int(a)) for a in range(1, f.q)]

    # -- vector arithmetic ------------------------------------------------
    def vadd(self, a, b):
        return self.add[a, b]

    def vsub(self, a, b):
        return self.add[a, self.neg[b]]

    def scale(self, c, v):
        return self.mul[c, v]

    def normalize(self, v):
        """Scale rows so the first nonzero coordinate is 1 (zero rows unchanged)."""
        v = np.asarray(v, dtype=np.int64)
        nz = v != 0
        first = np.argmax(nz, axis=-1)
        lead = np.take_along_axis(v, first[..., None], axis=-1)[..., 0]
        lead = np.where(nz.any(axis=-1), lead, 1)
        return self.mul[self.inv[lead][..., None], v]

    # -- point sets -------------------------------------------------------
    def all_vectors(self, n: int) -> np.ndarray:
        return all_vectors(n, self.q)

    def projective_points(self, n: int) -> np.ndarray:
        """Normalised nonzero vectors of GF(q)^n in lexicographic order."""
        blocks = []
        for i in range(n - 1, -1, -1):
            tail = all_vectors(n - i - 1, self.q)
            head = np.zeros((len(tail), i + 1), dtype=np.int64)
            head[:, i] = 1
            blocks.append(np.hstack([head, tail]))
        return np.vstack(blocks)

    def encode(self, v) -> np.ndarray:
        return encode(v, self.q)

    # -- forms --------------------------------------------------------------
    def pair_form(self, x, y, terms) -> np.ndarray:
        """sum c * x_i * y_j over terms (i, j, c), for every row pair: shape (len(x), len(y))."""
        out = np.zeros((len(x), len(y)), dtype=np.int64)
        for i, j, c in terms:
            prod = self.mul[x[:, i][:, None], y[:, j][None, :]]
            if c != 1:
                prod = self.mul[c, prod]
            out = self.add[out, prod]
        return out

    def row_form(self, x, terms) -> np.ndarray:
        """sum c * x_i * x_j over terms, one value per row."""
        out = np.zeros(len(x), dtype=np.int64)
        for i, j, c in terms:
            prod = self.mul[x[:, i], x[:, j]]
            if c != 1:
                prod = self.mul[c, prod]
            out = self.add[out, prod]
        return out

    def conj(self, x, e: int):
        """Coordinatewise x -> x^e (e.g. the involution x -> x^sqrt(q))."""
        table = self.f.pow_arr(np.arange(self.q), e)
        return table[x]

    # -- Cayley graphs ------------------------------------------------------
    def cayley_graph(self, n: int, connection, label: str = "") -> DenseGraph:
        """Cayley graph on GF(q)^n, vertex i = i-th vector in lexicographic order."""
        verts = all_vectors(n, self.q)
        N = len(verts)
        conn = np.unique(self.encode(np.asarray(connection, dtype=np.int64).reshape(-1, n)))
        cvecs = verts[conn]
        adj = np.zeros((N, N), dtype=bool)
        idx = np.arange(N)
        for c in cvecs:
            adj[idx, self.encode(self.add[verts, c])] = True
        return DenseGraph(adj, label=label)


@lru_cache(maxsize=8)
def vecspace(f: GF) -> VecSpace:
    return VecSpace(f)


def lines_from_collinear(vs: VecSpace, points: np.ndarray, collinear: np.ndarray):
    """Projective lines spanned by collinear point pairs, as sorted index tuples.

    Only pairs marked in `collinear` are spanned; every point on each spanned
    line must itself be in `points` (true for singular lines of a polar space
    and for all lines of a projective space).
    """
    index = {int(c): i for i, c in enumerate(vs.encode(points))}
    iu, ju = np.nonzero(np.triu(collinear, 1))
    lines = set()
    seen = np.zeros(collinear.shape, dtype=bool)
    q = vs.q
    for a, b in zip(iu.tolist(), ju.tolist()):
        if seen[a, b]:
            continue
        pa, pb = points[a], points[b]
        combos = vs.add[pa[None, :], vs.mul[np.arange(q)[:, None], pb[None, :]]]
        on = [a] + [index[int(c)] for c in vs.encode(vs.normalize(combos[1:]))] + [b]
        line = tuple(sorted(set(on)))
        for u in line:
            for w in line:
                seen[u, w] = True
        lines.add(line)
    return sorted(lines)


def incidence_graph_of_lines(lines, npoints: int, meet: int = 1, label: str = "") -> DenseGraph:
    """Lines as vertices, adjacent when they share exactly `meet` points."""
    inc = np.zeros((len(lines), npoints), dtype=np.float32)
    for i, line in enumerate(lines):
        inc[i, list(line)] = 1
    common = np.rint(inc @ inc.T).astype(np.int64)
    adj = common == meet
    np.fill_diagonal(adj, False)
    return DenseGraph(adj, label=label, check=False)
