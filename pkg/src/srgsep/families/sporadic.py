"""Small sporadic graphs: Hoffman-Singleton and the Witt-design graphs."""

from __future__ import annotations

import numpy as np

from ..designs import coset_graph, golay_ternary, witt_s_3_6_22
from ..graph import DenseGraph


def hoffman_singleton() -> DenseGraph:
    """Robertson's construction: pentagons P_h and pentagrams Q_i, h, i, j mod 5.

    Vertex 5h + j is P_h[j]; vertex 25 + 5i + j is Q_i[j].  P_h[j] ~ P_h[j +- 1],
    Q_i[j] ~ Q_i[j +- 2] and P_h[j] ~ Q_i[h i + j].
    """
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
            for i in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return DenseGraph.from_edges(50, edges, label="Hoffman-Singleton")


def _blocks_matrix(blocks, v=22):
    inc = np.zeros((len(blocks), v), dtype=np.int64)
    for i, b in enumerate(blocks):
        inc[i, list(b)] = 1
    return inc


def m22_graph() -> DenseGraph:
    """The 77 hexads of S(3,6,22), adjacent when disjoint."""
    inc = _blocks_matrix(witt_s_3_6_22().blocks)
    adj = (inc @ inc.T) == 0
    return DenseGraph(adj, label="M22 graph on 77 hexads")


def gewirtz() -> DenseGraph:
    """Hexads missing point 0, adjacent when disjoint."""
    blocks = [b for b in witt_s_3_6_22().blocks if 0 not in b]
    inc = _blocks_matrix(blocks)
    adj = (inc @ inc.T) == 0
    return DenseGraph(adj, label="Gewirtz")


def higman_sims() -> DenseGraph:
    """Vertex 0 = infinity, 1..22 = points, 23..99 = hexads."""
    inc = _blocks_matrix(witt_s_3_6_22().blocks)
    a = np.zeros((100, 100), dtype=bool)
    a[0, 1:23] = a[1:23, 0] = True
    a[1:23, 23:] = inc.T.astype(bool)
    a[23:, 1:23] = inc.astype(bool)
    a[23:, 23:] = (inc @ inc.T) == 0
    return DenseGraph(a, label="Higman-Sims")


def bvls() -> DenseGraph:
    g = coset_graph(golay_ternary())
    g.label = "Berlekamp-van Lint-Seidel"
    return g
