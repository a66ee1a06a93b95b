"""Golay codes, the Witt design S(3,6,22) and coset graphs of linear codes.

Generator matrices come from cyclic codes (generator polynomials below) and
are checked exhaustively on first use rather than trusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._linalg import all_vectors, encode, nullspace_mod_p, rank_mod_p
from .errors import WrongCode
from .gf import GF, make_field
from .graph import DenseGraph

# coefficients low degree first
BINARY_GOLAY_POLY = (1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1)  # x^11+x^10+x^6+x^5+x^4+x^2+1
TERNARY_GOLAY_POLY = (2, 0, 1, 2, 1, 1)  # x^5+x^4+2x^3+x^2+2


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: GF
    length: int
    dimension: int
    generator: np.ndarray
    min_distance: int | None = None
    name: str = ""

    @property
    def p(self) -> int:
        return self.field.p

    def codewords(self) -> np.ndarray:
        msgs = all_vectors(self.dimension, self.p)
        return (msgs @ self.generator) % self.p

    def weight_distribution(self) -> dict[int, int]:
        w = np.count_nonzero(self.codewords(), axis=1)
        vals, counts = np.unique(w, return_counts=True)
        return {int(a): int(b) for a, b in zip(vals, counts)}

    def minimum_weight(self) -> int:
        return min(w for w in self.weight_distribution() if w > 0)

    @property
    def parity_check(self) -> np.ndarray:
        return nullspace_mod_p(self.generator, self.p)

    def syndrome(self, vectors) -> np.ndarray:
        return (np.asarray(vectors, dtype=np.int64) @ self.parity_check.T) % self.p


def cyclic_generator_matrix(poly, n: int, p: int) -> np.ndarray:
    """Rows are the n-deg(poly) cyclic shifts of the generator polynomial."""
    deg = len(poly) - 1
    k = n - deg
    g = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        g[i, i : i + deg + 1] = poly
    return g % p


def _validated(code: LinearCode) -> LinearCode:
    if rank_mod_p(code.generator, code.p) != code.dimension:
        raise WrongCode(f"{code.name}: generator rows are dependent")
    if code.min_distance is not None and code.minimum_weight() != code.min_distance:
        raise WrongCode(f"{code.name}: minimum distance is not {code.min_distance}")
    return code


@lru_cache(maxsize=None)
def golay_binary_extended() -> LinearCode:
    """The [24,12,8] code: cyclic [23,12,7] quadratic-residue code plus parity."""
    g23 = cyclic_generator_matrix(BINARY_GOLAY_POLY, 23, 2)
    parity = g23.sum(axis=1, keepdims=True) % 2
    g = np.hstack([g23, parity])
    g.setflags(write=False)
    return _validated(LinearCode(make_field(2), 24, 12, g, 8, "binary Golay [24,12,8]"))


@lru_cache(maxsize=None)
def golay_ternary() -> LinearCode:
    """The perfect [11,6,5] code over GF(3)."""
    g = cyclic_generator_matrix(TERNARY_GOLAY_POLY, 11, 3)
    g.setflags(write=False)
    return _validated(LinearCode(make_field(3), 11, 6, g, 5, "ternary Golay [11,6,5]"))


@dataclass(frozen=True)
class BlockDesign:
    v: int
    k: int
    blocks: tuple[tuple[int, ...], ...]

    def replication(self) -> list[int]:
        r = [0] * self.v
        for b in self.blocks:
            for x in b:
                r[x] += 1
        return r

    def t_coverage(self, t: int) -> dict[int, int]:
        """Histogram of how many blocks contain each t-subset of points."""
        count: dict[tuple[int, ...], int] = {}
        for b in self.blocks:
            for s in itertools.combinations(b, t):
                count[s] = count.get(s, 0) + 1
        hist: dict[int, int] = {}
        total = 0
        for c in count.values():
            hist[c] = hist.get(c, 0) + 1
            total += 1
        missing = _binom(self.v, t) - total
        if missing:
            hist[0] = missing
        return hist


def _binom(n, k):
    from math import comb

    return comb(n, k)


@lru_cache(maxsize=None)
def witt_s_3_6_22() -> BlockDesign:
    """Hexads of S(3,6,22): octads through coordinates 22 and 23, with those removed."""
    words = golay_binary_extended().codewords()
    octads = words[words.sum(axis=1) == 8]
    through = octads[(octads[:, 22] == 1) & (octads[:, 23] == 1)]
    blocks = sorted(tuple(int(i) for i in np.flatnonzero(w[:22])) for w in through)
    d = BlockDesign(22, 6, tuple(blocks))
    if len(blocks) != 77 or set(d.t_coverage(3)) != {1}:
        raise AssertionError("octad derivation did not give S(3,6,22)")
    return d


def weight_one_vectors(n: int, p: int) -> np.ndarray:
    """All nonzero scalar multiples of unit vectors, in lexicographic order."""
    out = []
    for i in range(n):
        for c in range(1, p):
            v = np.zeros(n, dtype=np.int64)
            v[i] = c
            out.append(v)
    return np.array(sorted(out, key=lambda v: tuple(v)), dtype=np.int64)


def coset_graph(code: LinearCode, generators=None) -> DenseGraph:
    """Graph on the cosets of `code`, adjacent when they differ by a generator coset.

    Vertices are indexed by syndrome (the base-p integer of the syndrome
    vector), so vertex 0 is the code itself.  By default the generators are
    the weight-1 vectors, which requires minimum distance at least 3 so that
    they lie in distinct nonzero cosets.
    """
    p = code.p
    if code.field.k != 1:
        raise WrongCode("coset graphs are implemented over prime fields only")
    if generators is None:
        if code.minimum_weight() < 3:
            raise WrongCode("weight-1 vectors must lie in distinct cosets (need d >= 3)")
        generators = weight_one_vectors(code.length, p)
    r = code.length - code.dimension
    conn = encode(code.syndrome(generators), p)
    if (conn == 0).any():
        raise WrongCode("a generator lies in the code")
    syn = all_vectors(r, p)
    nu = p**r
    adj = np.zeros((nu, nu), dtype=bool)
    idx = np.arange(nu)
    for c in np.unique(conn):
        cvec = syn[c]
        nbr = encode((syn + cvec) % p, p)
        adj[idx, nbr] = True
    return DenseGraph(adj, label=f"coset graph of {code.name}")
