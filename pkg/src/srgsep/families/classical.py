"""Combinatorial and cyclotomic families, and subspace graphs."""

from __future__ import annotations

import itertools

import numpy as np

from ..gf import field_of_order, make_field, subfield_elements
from ..graph import DenseGraph
from ._fieldvec import incidence_graph_of_lines, lines_from_collinear, vecspace


def triangular(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    arr = np.array(pairs)
    share = (arr[:, None, 0] == arr[None, :, 0]) | (arr[:, None, 0] == arr[None, :, 1]) \
        | (arr[:, None, 1] == arr[None, :, 0]) | (arr[:, None, 1] == arr[None, :, 1])
    np.fill_diagonal(share, False)
    g = DenseGraph(share, label=f"T({n})")
    clique = tuple(i for i, (a, _) in enumerate(pairs) if a == 0)
    coclique = tuple(pairs.index((2 * i, 2 * i + 1)) for i in range(n // 2))
    return g, clique, coclique


def grid(n: int):
    r, c = np.divmod(np.arange(n * n), n)
    adj = (r[:, None] == r[None, :]) ^ (c[:, None] == c[None, :])
    g = DenseGraph(adj, label=f"{n}x{n} grid")
    clique = tuple(range(n))
    coclique = tuple(i * n + i for i in range(n))
    return g, clique, coclique


def cyclotomic(q: int, connection, label: str) -> DenseGraph:
    """Cayley graph on GF(q) with the given connection set (vertex = encoding)."""
    f = field_of_order(q)
    return vecspace(f).cayley_graph(1, np.asarray(sorted(connection)).reshape(-1, 1), label=label)


def paley(q: int):
    f = field_of_order(q)
    squares = {f.pow(x, 2) for x in range(1, q)}
    g = cyclotomic(q, squares, f"Paley({q})")
    clique = coclique = None
    if f.k % 2 == 0:
        sub = subfield_elements(f, f.k // 2)
        clique = tuple(sub)
        coclique = tuple(sorted(f.mul(f.primitive, x) for x in sub))
    return g, clique, coclique


def peisert(p: int, t: int):
    f = make_field(p, 2 * t)
    g0 = f.primitive
    conn = {f.pow(g0, j) for j in range(f.q - 1) if j % 4 in (0, 1)}
    g = cyclotomic(f.q, conn, f"Peisert({p}^{2 * t})")
    clique = coclique = None
    if t % 2 == 1:
        sub = subfield_elements(f, t)
        clique = tuple(sub)
        g2 = f.mul(g0, g0)
        coclique = tuple(sorted(f.mul(g2, x) for x in sub))
    return g, clique, coclique


def van_lint_schrijver(p: int, e: int, t: int):
    f = make_field(p, (e - 1) * t)
    powers = {f.pow(x, e) for x in range(1, f.q)}
    g = cyclotomic(f.q, powers, f"vLS({p},{e},{t})")
    clique = coclique = None
    if t % 2 == 1:
        sub = subfield_elements(f, f.k // 2)
        clique = tuple(sub)
        coclique = tuple(sorted(f.mul(f.primitive, x) for x in sub))
    return g, clique, coclique


def grassmann(q: int, n: int):
    """2-subspaces of GF(q)^n, adjacent when they meet in a point.

    Vertices are ordered by the sorted tuple of indices of their points, with
    points in lexicographic order of normalised coordinates.
    """
    f = field_of_order(q)
    vs = vecspace(f)
    pts = vs.projective_points(n)
    everything = np.ones((len(pts), len(pts)), dtype=bool)
    np.fill_diagonal(everything, False)
    lines = lines_from_collinear(vs, pts, everything)
    g = incidence_graph_of_lines(lines, len(pts), 1, label=f"J_{q}({n},2)")
    clique = tuple(i for i, line in enumerate(lines) if 0 in line)
    coclique = None
    if n % 2 == 0 and f.k == 1:
        coclique = _desarguesian_spread(q, n, pts, lines)
    return g, clique, coclique


def _desarguesian_spread(p: int, n: int, pts, lines):
    """Lines {x * GF(p^2)} of GF(p^n) viewed as GF(p)^n via polynomial coefficients."""
    big = make_field(p, n)
    vs = vecspace(make_field(p))
    sub = [y for y in subfield_elements(big, 2) if y]
    index = {int(c): i for i, c in enumerate(vs.encode(pts))}
    line_index = {line: i for i, line in enumerate(lines)}
    covered, spread = set(), []
    for x in range(1, big.q):
        if x in covered:
            continue
        elems = [big.mul(x, y) for y in sub]
        covered.update(elems)
        # coordinates are listed high degree first to match lexicographic vectors
        coords = np.array([big.coeffs(z)[::-1] for z in elems])
        idx = sorted({index[int(c)] for c in vs.encode(vs.normalize(coords))})
        spread.append(line_index[tuple(idx)])
    return tuple(sorted(spread))


def bilinear_forms(q: int, m: int):
    """2 x m matrices over GF(q) (row-major vectors), adjacent iff the difference has rank 1."""
    f = field_of_order(q)
    vs = vecspace(f)
    # rank-1 matrices: u^T v with u a projective point of GF(q)^2, v nonzero
    us = vs.projective_points(2)
    vv = vs.all_vectors(m)[1:]
    conn = [np.concatenate([vs.mul[u[0], vv], vs.mul[u[1], vv]], axis=1) for u in us]
    g = vs.cayley_graph(2 * m, np.concatenate(conn), label=f"H_{q}(2,{m})")
    vecs_n = q**m
    clique = tuple(range(0, q ** (2 * m), vecs_n))  # second row zero
    coclique = None
    if f.k == 1:
        coclique = _gabidulin_coclique(q, m)
    return g, clique, coclique


def _gabidulin_coclique(p: int, m: int):
    """{[x; a x] : x in GF(p^m)} with a a primitive element: differences have rank 2."""
    big = make_field(p, m)
    a = big.primitive
    w = p ** np.arange(m - 1, -1, -1)
    out = []
    for x in range(big.q):
        top = np.array(big.coeffs(x)[::-1])
        bot = np.array(big.coeffs(big.mul(a, x))[::-1])
        out.append(int(top @ w) * p**m + int(bot @ w))
    return tuple(sorted(out))


def golay_dual_weight_graph():
    """Cayley graph on GF(3)^5: u ~ v iff (u - v) H has weight 9, H the Golay parity check."""
    from ..designs import golay_ternary

    code = golay_ternary()
    H = code.parity_check
    vs = vecspace(make_field(3))
    u = vs.all_vectors(5)
    words = (u @ H) % 3
    conn = u[np.count_nonzero(words, axis=1) == 9]
    return vs.cayley_graph(5, conn, label="Golay dual weight-9 graph")


def even_weight_quotient_graph():
    """Even-weight words of length 10 modulo the all-ones word; adjacent iff they differ in 2 places."""
    reps = [x for x in range(1 << 9) if bin(x).count("1") % 2 == 0]
    arr = np.array(reps)
    diff = arr[:, None] ^ arr[None, :]
    w = np.vectorize(lambda z: bin(int(z)).count("1"))(diff)
    adj = (w == 2) | (w == 8)  # weight 8 on 9 coordinates plus coordinate 10 = complement of a pair
    return DenseGraph(adj, label="halved 10-cube quotient")
