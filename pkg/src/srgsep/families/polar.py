"""Graphs from forms: polar collinearity graphs, NO, NU, VO and VSz.

Standard form shapes (coordinates 0..N-1):
  symplectic   sum x_{2i} y_{2i+1} - x_{2i+1} y_{2i}
  hyperbolic   Q = sum x_{2i} x_{2i+1}
  parabolic    Q = x_0^2 + sum x_{2i-1} x_{2i}
  elliptic     Q = hyperbolic on the first N-2 coordinates + x^2 + x y + c y^2
               on the last two, with t^2 + t + c irreducible
  Hermitian    H(x, y) = sum x_i y_i^r over GF(r^2)
"""

from __future__ import annotations

import numpy as np

from ..errors import InvalidParams
from ..gf import GF, field_of_order, make_field
from ..graph import DenseGraph
from ._fieldvec import VecSpace, incidence_graph_of_lines, lines_from_collinear, vecspace


# ---------------------------------------------------------------------------
# quadratic and bilinear forms as term lists (i, j, c)

def elliptic_constant(f: GF) -> int:
    """Smallest c (encoded) with t^2 + t + c irreducible over f."""
    vs = vecspace(f)
    values = {int(vs.add[vs.mul[t, t], t]) for t in range(f.q)}
    for c in range(f.q):
        if vs.neg[c] not in values:
            return c
    raise AssertionError("no irreducible quadratic found")


def quadratic_terms(kind: str, N: int, f: GF) -> list[tuple[int, int, int]]:
    """Terms of the standard quadratic form of the given kind on GF(q)^N."""
    if kind == "plus":
        if N % 2:
            raise InvalidParams("hyperbolic form needs even dimension")
        return [(2 * i, 2 * i + 1, 1) for i in range(N // 2)]
    if kind == "parabolic":
        if N % 2 == 0:
            raise InvalidParams("parabolic form needs odd dimension")
        return [(0, 0, 1)] + [(2 * i - 1, 2 * i, 1) for i in range(1, (N - 1) // 2 + 1)]
    if kind == "minus":
        if N % 2 or N < 2:
            raise InvalidParams("elliptic form needs even dimension")
        c = elliptic_constant(f)
        terms = [(2 * i, 2 * i + 1, 1) for i in range(N // 2 - 1)]
        terms += [(N - 2, N - 2, 1), (N - 2, N - 1, 1)]
        if c:
            terms.append((N - 1, N - 1, c))
        return terms
    raise InvalidParams(f"unknown quadratic form kind {kind!r}")


def polar_terms(qterms, f: GF) -> list[tuple[int, int, int]]:
    """Bilinear form B(x, y) = Q(x + y) - Q(x) - Q(y) as terms."""
    vs = vecspace(f)
    out = []
    for i, j, c in qterms:
        if i == j:
            c2 = int(vs.add[c, c])
            if c2:
                out.append((i, i, c2))
        else:
            out.append((i, j, c))
            out.append((j, i, c))
    return out


def symplectic_terms(N: int, f: GF) -> list[tuple[int, int, int]]:
    vs = vecspace(f)
    minus_one = int(vs.neg[1])
    out = []
    for i in range(N // 2):
        out.append((2 * i, 2 * i + 1, 1))
        out.append((2 * i + 1, 2 * i, minus_one))
    return out


def hermitian_gram(vs: VecSpace, x, y, r: int) -> np.ndarray:
    """H(x_a, y_b) = sum_i x_ai * y_bi^r for all row pairs."""
    yc = vs.conj(y, r)
    N = x.shape[1]
    return vs.pair_form(x, yc, [(i, i, 1) for i in range(N)])


# ---------------------------------------------------------------------------
# polar collinearity graphs

def polar_points(polar_type: str, n: int, q: int):
    """(field, singular points, Gram-type matrix function) for a polar space."""
    N = n + 1
    if polar_type == "H":
        f = field_of_order(q * q)
        vs = vecspace(f)
        pts = vs.projective_points(N)
        norms = vs.row_form(np.concatenate([pts, vs.conj(pts, q)], axis=1), [(i, i + N, 1) for i in range(N)])
        pts = pts[norms == 0]
        return f, pts, hermitian_gram(vs, pts, pts, q)
    f = field_of_order(q)
    vs = vecspace(f)
    pts = vs.projective_points(N)
    if polar_type == "W":
        if N % 2:
            raise InvalidParams("symplectic space needs odd projective dimension")
        gram = vs.pair_form(pts, pts, symplectic_terms(N, f))
        return f, pts, gram
    kind = {"Q": "parabolic", "Qplus": "plus", "Qminus": "minus"}[polar_type]
    qt = quadratic_terms(kind, N, f)
    sing = vs.row_form(pts, qt) == 0
    pts = pts[sing]
    gram = vs.pair_form(pts, pts, polar_terms(qt, f))
    return f, pts, gram


def polar_collinearity_graph(polar_type: str, n: int, q: int, dual: bool = False) -> DenseGraph:
    f, pts, gram = polar_points(polar_type, n, q)
    collinear = gram == 0
    np.fill_diagonal(collinear, False)
    order = q * q if polar_type == "H" else q
    label = f"{polar_type}({n},{order})"
    if not dual:
        return DenseGraph(collinear, label=label)
    lines = lines_from_collinear(vecspace(f), pts, collinear)
    return incidence_graph_of_lines(lines, len(pts), 1, label=label + "^D")


# ---------------------------------------------------------------------------
# NO, NU

# Adjacency rule per (parity of dimension, q), selected by matching the
# parameter formulas at the smallest admissible size; see select_rule().
NO_RULES = {
    ("even", 2): "perp",
    ("even", 3): "perp",
    ("odd", 3): "nonperp",
    ("odd", 4): "tangent",
    ("odd", 8): "tangent",
}
NU_RULE = "nonperp"

NO_CANDIDATES = {
    ("even", 2): ("perp", "nonperp"),
    ("even", 3): ("perp", "nonperp"),
    ("odd", 3): ("perp", "nonperp"),
    ("odd", 4): ("tangent", "secant"),
    ("odd", 8): ("tangent", "secant"),
}


def _no_vertices_even(eps: int, N: int, q: int):
    f = make_field(q)
    vs = vecspace(f)
    qt = quadratic_terms("plus" if eps == 1 else "minus", N, f)
    pts = vs.projective_points(N)
    vals = vs.row_form(pts, qt)
    # over GF(2) and GF(3) the nonzero values 1 (and 2 for q = 3 with
    # projective points) are treated uniformly by taking Q(x) = 1
    pts = pts[vals == 1]
    return f, vs, pts, polar_terms(qt, f)


def _no_vertices_odd_q(eps: int, N: int, q: int):
    f = make_field(q)
    vs = vecspace(f)
    qt = quadratic_terms("parabolic", N, f)
    pts = vs.projective_points(N)
    vals = vs.row_form(pts, qt)
    square = np.array([f.is_square(int(v)) for v in range(q)])
    keep = (vals != 0) & (square[vals] if eps == 1 else ~square[vals])
    return f, vs, pts[keep], polar_terms(qt, f)


def no_graph(eps: int, N: int, q: int, rule: str | None = None) -> DenseGraph:
    parity = "even" if N % 2 == 0 else "odd"
    rule = rule or NO_RULES[(parity, q)]
    label = f"NO{'+' if eps == 1 else '-'}({N},{q})"
    if parity == "even":
        f, vs, pts, bt = _no_vertices_even(eps, N, q)
        perp = vs.pair_form(pts, pts, bt) == 0
        adj = perp if rule == "perp" else ~perp
    elif q % 2 == 1:
        f, vs, pts, bt = _no_vertices_odd_q(eps, N, q)
        perp = vs.pair_form(pts, pts, bt) == 0
        adj = perp if rule == "perp" else ~perp
    else:
        adj = _no_odd_even_q(eps, N, q, rule)
    np.fill_diagonal(adj, False)
    return DenseGraph(adj, label=label)


def _no_odd_even_q(eps: int, N: int, q: int, rule: str) -> np.ndarray:
    """Hyperplanes x_0 = a.x' of the parabolic quadric in even characteristic.

    The section by the hyperplane for a is the quadric Q0(x') + (a.x')^2 on
    GF(q)^(N-1) whose type is read off from the absolute trace of Q0(a).  Two
    sections meet in a degenerate (tangent) space iff Q0(a-b) + B0(a,b)^2 = 0.
    """
    f = make_field(2, {4: 2, 8: 3}[q])
    vs = vecspace(f)
    M = N - 1
    qt = quadratic_terms("plus", M, f)
    vecs = vs.all_vectors(M)
    tr = np.array([f.trace(int(v)) for v in range(q)])
    keep = tr[vs.row_form(vecs, qt)] == (0 if eps == 1 else 1)
    a = vecs[keep]
    b0 = vs.pair_form(a, a, polar_terms(qt, f))
    qa = vs.row_form(a, qt)
    # Q0(a - b) = Q0(a) + Q0(b) + B0(a, b) in characteristic 2
    qdiff = vs.add[vs.add[qa[:, None], qa[None, :]], b0]
    tangent = vs.add[qdiff, vs.mul[b0, b0]] == 0
    return tangent if rule == "tangent" else ~tangent


def nu_graph(m: int, rule: str | None = None) -> DenseGraph:
    rule = rule or NU_RULE
    f = make_field(2, 2)
    vs = vecspace(f)
    pts = vs.projective_points(m)
    h = hermitian_gram(vs, pts, pts, 2)
    keep = np.diagonal(h) != 0
    h = h[np.ix_(keep, keep)]
    adj = (h != 0) if rule == "nonperp" else (h == 0)
    np.fill_diagonal(adj, False)
    return DenseGraph(adj, label=f"NU({m},2)")


def select_rule(family: str, key, build, target) -> str:
    """Return the unique candidate rule whose graph has the target parameters."""
    from ..graph import verify_srg
    from ..errors import SrgSepError

    matches = []
    for rule in (NO_CANDIDATES[key] if family == "NO" else ("perp", "nonperp")):
        try:
            if verify_srg(build(rule)) == target:
                matches.append(rule)
        except SrgSepError:
            continue
    if len(matches) != 1:
        raise AssertionError(f"{family} {key}: candidate rules matching {target}: {matches}")
    return matches[0]


def self_test_rules() -> dict:
    """Re-run the rule selection at the smallest sizes; returns the selections."""
    from ..catalog import params_for
    from .spec import Family, FamilySpec

    chosen = {}
    smallest = {("even", 2): 6, ("even", 3): 6, ("odd", 3): 5, ("odd", 4): 5, ("odd", 8): 5}
    for (parity, q), N in smallest.items():
        for eps in (1, -1):
            target = params_for(FamilySpec(Family.NO, n=N, q=q, epsilon=eps))
            rule = select_rule("NO", (parity, q), lambda r: no_graph(eps, N, q, r), target)
            prev = chosen.setdefault((parity, q), rule)
            if prev != rule:
                raise AssertionError(f"NO {(parity, q)}: epsilon-dependent rule")
    target = params_for(FamilySpec(Family.NU, m=4))
    chosen["NU"] = select_rule("NU", None, lambda r: nu_graph(4, r), target)
    return chosen


# ---------------------------------------------------------------------------
# affine polar graphs and VSz

def vo_graph(eps: int, m: int, q: int) -> tuple[DenseGraph, tuple[int, ...] | None]:
    f = field_of_order(q)
    vs = vecspace(f)
    N = 2 * m
    qt = quadratic_terms("plus" if eps == 1 else "minus", N, f)
    vecs = vs.all_vectors(N)
    conn = vecs[(vs.row_form(vecs, qt) == 0) & (vecs != 0).any(axis=1)]
    g = vs.cayley_graph(N, conn, label=f"VO{'+' if eps == 1 else '-'}({N},{q})")
    clique = None
    if eps == 1:
        # totally singular subspace: all odd coordinates zero
        clique = tuple(int(i) for i in np.flatnonzero((vecs[:, 1::2] == 0).all(axis=1)))
    return g, clique


def suzuki_tits_ovoid(f: GF) -> np.ndarray:
    """Representatives {(0,0,0,1)} and (1, a, b, ab + a^(sigma+2) + b^sigma)."""
    q = f.q
    h = f.k
    if f.p != 2 or h % 2 == 0 or h < 3:
        raise InvalidParams("Suzuki-Tits ovoid needs q = 2^(2e+1), e >= 1")
    sigma = 2 ** ((h + 1) // 2)  # sigma^2 = 2 on exponents: x -> x^(2^(e+1))
    vs = vecspace(f)
    a, b = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
    a, b = a.ravel(), b.ravel()
    pw = f.pow_arr
    last = vs.add[vs.add[vs.mul[a, b], pw(a, sigma + 2)], pw(b, sigma)]
    pts = np.stack([np.ones_like(a), a, b, last], axis=1)
    return np.vstack([np.array([[0, 0, 0, 1]]), pts])


def vsz_graph(q: int) -> DenseGraph:
    f = field_of_order(q)
    vs = vecspace(f)
    ov = suzuki_tits_ovoid(f)
    conn = np.concatenate([vs.mul[c, ov] for c in range(1, q)])
    return vs.cayley_graph(4, conn, label=f"VSz({q})")
