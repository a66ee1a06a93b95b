"""Immutable dense graphs and exact strong-regularity checks."""

from __future__ import annotations

import hashlib
import io
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import (
    InvalidParams,
    CompleteGraph,
    Disconnected,
    IndexOutOfRange,
    NotRegular,
    NotStronglyRegular,
)


@dataclass(frozen=True, order=True)
class SrgParams:
    nu: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        nu, k, lam, mu = self.nu, self.k, self.lam, self.mu
        if not (0 <= lam <= k and 0 <= mu <= k and k < nu):
            raise InvalidParams(f"parameters out of range: {self.astuple()}")
        if k * (k - lam - 1) != (nu - k - 1) * mu:
            raise InvalidParams(f"k(k-lambda-1) != (nu-k-1)mu for {self.astuple()}")

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.nu, self.k, self.lam, self.mu)

    def complement(self) -> SrgParams:
        nu, k, lam, mu = self.astuple()
        return SrgParams(nu, nu - k - 1, nu - 2 - 2 * k + mu, nu - 2 * k + lam)

    def __str__(self):
        return str(self.astuple())


class DenseGraph:
    """Simple undirected graph on vertices 0..nu-1 stored as a dense matrix.

    The boolean matrix is read-only; bitset rows (Python ints, bit j of row i
    set iff i ~ j) are derived lazily for the clique solver.
    """

    def __init__(self, adjacency, label: str = "", check: bool = True):
        a = np.array(adjacency, dtype=bool, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError("adjacency must be a non-empty square matrix")
        if check:
            if a.diagonal().any():
                raise ValueError("graph has loops")
            if not np.array_equal(a, a.T):
                raise ValueError("adjacency is not symmetric")
        a.setflags(write=False)
        self._adj = a
        self.label = label

    # -- constructors ----------------------------------------------------
    @classmethod
    def from_edges(cls, nu: int, edges: Iterable[tuple[int, int]], label: str = "") -> DenseGraph:
        a = np.zeros((nu, nu), dtype=bool)
        for u, v in edges:
            if not (0 <= u < nu and 0 <= v < nu):
                raise IndexOutOfRange(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError("loops are not allowed")
            a[u, v] = a[v, u] = True
        return cls(a, label, check=False)

    @classmethod
    def from_rows(cls, rows: list[int], label: str = "") -> DenseGraph:
        nu = len(rows)
        a = np.zeros((nu, nu), dtype=bool)
        for i, r in enumerate(rows):
            bits = np.frombuffer(r.to_bytes((nu + 7) // 8, "little"), dtype=np.uint8)
            a[i] = np.unpackbits(bits, bitorder="little")[:nu].astype(bool)
        return cls(a, label)

    # -- basic access ----------------------------------------------------
    @property
    def nu(self) -> int:
        return self._adj.shape[0]

    def __len__(self):
        return self.nu

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self._adj[v])

    @cached_property
    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1)

    @property
    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self._adj, 1))
        return list(zip(iu.tolist(), ju.tolist()))

    @cached_property
    def rows(self) -> tuple[int, ...]:
        packed = np.packbits(self._adj, axis=1, bitorder="little")
        return tuple(int.from_bytes(r.tobytes(), "little") for r in packed)

    def __eq__(self, other):
        return isinstance(other, DenseGraph) and np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash(self.checksum())

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"<DenseGraph{tag} nu={self.nu} edges={self.edge_count}>"

    # -- derived graphs --------------------------------------------------
    def complement(self) -> DenseGraph:
        a = ~self._adj
        np.fill_diagonal(a, False)
        label = self.label[:-len(" (complement)")] if self.label.endswith(" (complement)") \
            else (self.label + " (complement)" if self.label else "")
        return DenseGraph(a, label, check=False)

    def induced_subgraph(self, vertices) -> DenseGraph:
        vs = self._check_indices(vertices)
        return DenseGraph(self._adj[np.ix_(vs, vs)], check=False)

    def is_connected(self) -> bool:
        seen = np.zeros(self.nu, dtype=bool)
        seen[0] = True
        frontier = seen.copy()
        while frontier.any():
            nxt = self._adj[frontier].any(axis=0) & ~seen
            seen |= nxt
            frontier = nxt
        return bool(seen.all())

    def _check_indices(self, vertices) -> list[int]:
        vs = [int(v) for v in vertices]
        for v in vs:
            if not 0 <= v < self.nu:
                raise IndexOutOfRange(f"vertex {v} not in 0..{self.nu - 1}")
        return vs

    def is_clique(self, vertices) -> bool:
        vs = sorted(set(self._check_indices(vertices)))
        sub = self._adj[np.ix_(vs, vs)]
        return bool(sub.sum() == len(vs) * (len(vs) - 1))

    def is_coclique(self, vertices) -> bool:
        vs = sorted(set(self._check_indices(vertices)))
        return not self._adj[np.ix_(vs, vs)].any()

    # -- identity / IO ---------------------------------------------------
    def checksum(self) -> str:
        """Hash of the edge set; independent of how edges were listed."""
        tri = self._adj[np.triu_indices(self.nu, 1)]
        h = hashlib.sha256()
        h.update(self.nu.to_bytes(8, "little"))
        h.update(np.packbits(tri).tobytes())
        return h.hexdigest()[:16]

    def to_dimacs(self, target=None, comment: str | None = None) -> str | None:
        """DIMACS ascii edge format: 'p edge nu m' then 1-indexed 'e u v' lines."""
        buf = io.StringIO()
        for line in (comment or self.label or "").splitlines():
            buf.write(f"c {line}\n")
        edges = self.edges()
        buf.write(f"p edge {self.nu} {len(edges)}\n")
        for u, v in edges:
            buf.write(f"e {u + 1} {v + 1}\n")
        text = buf.getvalue()
        if target is None:
            return text
        if isinstance(target, (str, os.PathLike)):
            with open(target, "w") as fh:
                fh.write(text)
        else:
            target.write(text)
        return None

    @classmethod
    def from_dimacs(cls, source) -> DenseGraph:
        if isinstance(source, (str, os.PathLike)) and os.path.exists(source):
            with open(source) as fh:
                text = fh.read()
        elif hasattr(source, "read"):
            text = source.read()
        else:
            text = str(source)
        nu, expected, edges, comments = None, None, [], []
        for raw in text.splitlines():
            parts = raw.split()
            if not parts:
                continue
            if parts[0] == "c":
                comments.append(raw[2:])
            elif parts[0] == "p":
                if len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise ValueError(f"bad problem line: {raw!r}")
                nu, expected = int(parts[2]), int(parts[3])
            elif parts[0] == "e":
                if nu is None:
                    raise ValueError("edge line before problem line")
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise ValueError(f"unrecognised DIMACS line: {raw!r}")
        if nu is None:
            raise ValueError("missing 'p edge' line")
        g = cls.from_edges(nu, edges, label="\n".join(comments))
        if g.edge_count != expected:
            raise ValueError(f"header announces {expected} edges, found {g.edge_count}")
        return g


def _counts_matrix(a: np.ndarray) -> np.ndarray:
    """Exact common-neighbour counts A @ A.

    float32 sums of 0/1 products are exact while every partial sum stays below
    2**24, which holds for nu < 2**24.
    """
    f = a.astype(np.float32)
    return np.rint(f @ f).astype(np.int64)


def verify_srg(g: DenseGraph) -> SrgParams:
    """Return (nu, k, lambda, mu) if g is a connected, non-complete SRG."""
    a = g.adjacency
    nu = g.nu
    deg = g.degrees
    if nu == 1 or deg.min() == nu - 1:
        raise CompleteGraph("complete graphs are excluded")
    if (deg != deg[0]).any():
        v = int(np.flatnonzero(deg != deg[0])[0])
        raise NotRegular(f"vertex {v} has degree {int(deg[v])}, vertex 0 has {int(deg[0])}")
    if not g.is_connected():
        raise Disconnected("graph is disconnected")
    k = int(deg[0])
    c = _counts_matrix(a)
    off = ~np.eye(nu, dtype=bool)
    adj_vals = c[a]
    non = off & ~a
    non_vals = c[non]
    lam = int(adj_vals[0])
    mu = int(non_vals[0])
    bad = a & (c != lam)
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise NotStronglyRegular(
            f"adjacent pair ({i}, {j}) has {int(c[i, j])} common neighbours, expected {lam}", (i, j)
        )
    bad = non & (c != mu)
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise NotStronglyRegular(
            f"non-adjacent pair ({i}, {j}) has {int(c[i, j])} common neighbours, expected {mu}", (i, j)
        )
    return SrgParams(nu, k, lam, mu)


def srg_identity_holds(g: DenseGraph, p: SrgParams) -> bool:
    """A^2 == k I + lambda A + mu (J - I - A), checked entrywise in integers."""
    a = g.adjacency.astype(np.int64)
    nu = g.nu
    rhs = p.k * np.eye(nu, dtype=np.int64) + p.lam * a + p.mu * (1 - np.eye(nu, dtype=np.int64) - a)
    return bool(np.array_equal(_counts_matrix(g.adjacency), rhs))


def cycle_graph(n: int) -> DenseGraph:
    return DenseGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], label=f"C{n}")
