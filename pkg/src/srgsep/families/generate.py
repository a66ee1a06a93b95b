"""Dispatch from a FamilySpec to its explicit construction."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidParams, NotConstructible, TooLarge
from ..graph import DenseGraph, verify_srg
from . import classical, polar, sporadic
from .spec import CONSTRUCTIBLE_ROWS, Family, FamilySpec, WitnessHint

DEFAULT_MAX_NU = 20_000

CATALOG_ONLY = {Family.DualPolarHalf5, Family.E6, Family.AltForms, Family.VD55}


@dataclass(frozen=True)
class Generated:
    graph: DenseGraph
    hint: WitnessHint
    order: str

    def __iter__(self):
        # allows `graph, hint = generate(spec)`
        return iter((self.graph, self.hint))


def is_constructible(spec: FamilySpec) -> bool:
    if spec.family in CATALOG_ONLY:
        return False
    if spec.family is Family.CatalogRow:
        return spec.table_row in CONSTRUCTIBLE_ROWS
    return True


def _build(spec: FamilySpec):
    F = Family
    f = spec.family
    if f is F.Triangular:
        return (*classical.triangular(spec.n), "2-subsets in lexicographic order")
    if f is F.Grid:
        return (*classical.grid(spec.n), "pairs (row, column), row-major")
    if f is F.Paley:
        return (*classical.paley(spec.q), "field elements by integer encoding")
    if f is F.Peisert:
        return (*classical.peisert(spec.p, spec.t), "field elements by integer encoding")
    if f is F.VanLintSchrijver:
        return (*classical.van_lint_schrijver(spec.p, spec.e, spec.t), "field elements by integer encoding")
    if f is F.Grassmann:
        return (*classical.grassmann(spec.q, spec.n), "2-spaces by sorted point-index tuple")
    if f is F.BilinearForms:
        return (*classical.bilinear_forms(spec.q, spec.m), "2 x m matrices, row-major lexicographic")
    if f is F.PolarCollinearity:
        g = polar.polar_collinearity_graph(spec.polar_type, spec.n, spec.q, spec.dual)
        order = "singular lines by sorted point tuple" if spec.dual else "singular points, lexicographic"
        return g, None, None, order
    if f is F.NO:
        return polar.no_graph(spec.epsilon, spec.n, spec.q), None, None, "points/hyperplanes, lexicographic"
    if f is F.NU:
        return polar.nu_graph(spec.m), None, None, "non-isotropic points, lexicographic"
    if f in (F.VOplus, F.VOminus):
        g, clique = polar.vo_graph(1 if f is F.VOplus else -1, spec.m, spec.q)
        return g, clique, None, "vectors, lexicographic"
    if f is F.VSz:
        return polar.vsz_graph(spec.q), None, None, "vectors, lexicographic"
    if f is F.HoffmanSingleton:
        return sporadic.hoffman_singleton(), None, None, "pentagons then pentagrams"
    if f is F.Gewirtz:
        return sporadic.gewirtz(), None, None, "hexads avoiding point 0, sorted"
    if f is F.M22_77:
        return sporadic.m22_graph(), None, None, "hexads, sorted"
    if f is F.HigmanSims:
        return sporadic.higman_sims(), None, None, "infinity, 22 points, 77 hexads"
    if f is F.BvLS:
        return sporadic.bvls(), None, None, "cosets by syndrome"
    if f is F.CatalogRow:
        row = spec.table_row
        builders = {
            3: lambda: _build(FamilySpec(F.HoffmanSingleton)),
            4: lambda: _build(FamilySpec(F.Gewirtz)),
            5: lambda: _build(FamilySpec(F.M22_77)),
            6: lambda: _build(FamilySpec(F.HigmanSims)),
            12: lambda: _build(FamilySpec(F.BvLS)),
            13: lambda: (classical.golay_dual_weight_graph(), None, None, "syndromes, lexicographic"),
            15: lambda: (classical.even_weight_quotient_graph(), None, None, "even 9-bit words"),
            16: lambda: _build(FamilySpec(F.BilinearForms, q=2, m=4)),
        }
        if row not in builders:
            raise NotConstructible(f"table row {row} has no explicit construction")
        return builders[row]()
    raise NotConstructible(f"{f.value} is available as parameters only")


def generate(spec: FamilySpec, max_nu: int = DEFAULT_MAX_NU, verify: bool = True) -> Generated:
    """Build the graph for `spec` with validated witness hints.

    With verify=True the graph's parameters are checked against the catalog
    formula and a mismatch raises AssertionError (a construction bug).
    """
    from ..catalog import params_for

    if not is_constructible(spec):
        raise NotConstructible(f"{spec} is available as parameters only")
    target = params_for(spec)
    if target.nu > max_nu:
        raise TooLarge(f"{spec} has {target.nu} vertices, above the cap {max_nu}")
    g, clique, coclique, order = _build(spec)
    if verify:
        got = verify_srg(g)
        if got != target:
            raise AssertionError(f"{spec}: constructed {got}, formula gives {target}")
    if clique is not None and not g.is_clique(clique):
        raise AssertionError(f"{spec}: clique hint fails")
    if coclique is not None and not g.is_coclique(coclique):
        raise AssertionError(f"{spec}: coclique hint fails")
    prov = _hint_provenance(spec, clique, coclique)
    hint = WitnessHint(clique, coclique, prov)
    return Generated(g, hint, order)


def _hint_provenance(spec, clique, coclique) -> str:
    if clique is None and coclique is None:
        return ""
    F = Family
    return {
        F.Triangular: "pairs through a point / a perfect matching",
        F.Grid: "a row / the diagonal",
        F.Paley: "subfield / nonsquare multiple of subfield",
        F.Peisert: "subfield / g^2 times subfield",
        F.VanLintSchrijver: "subfield / non-e-th-power multiple of subfield",
        F.Grassmann: "lines through a point / Desarguesian spread",
        F.BilinearForms: "matrices with zero second row / rank-distance-2 code",
        F.VOplus: "totally singular subspace",
    }.get(spec.family, "")


def sweep_specs(max_nu: int = 2000) -> list[FamilySpec]:
    """Every constructible spec with at most max_nu vertices, in a fixed order."""
    from .._arith import is_prime, is_prime_power
    from ..catalog import params_for
    from .spec import polar_rank

    out: list[FamilySpec] = []

    def add(family, **kw):
        try:
            s = FamilySpec(family, **kw)
        except InvalidParams:
            return
        if is_constructible(s) and params_for(s).nu <= max_nu:
            out.append(s)

    F = Family
    n = 4
    while n * (n - 1) // 2 <= max_nu:
        add(F.Triangular, n=n)
        n += 1
    n = 2
    while n * n <= max_nu:
        add(F.Grid, n=n)
        n += 1
    for q in range(5, max_nu + 1):
        if q % 4 == 1 and is_prime_power(q):
            add(F.Paley, q=q)
    for p in (3, 7, 11, 19, 23, 31, 43):
        for t in range(1, 6):
            if p ** (2 * t) <= max_nu:
                add(F.Peisert, p=p, t=t)
    for e in (3, 5, 7, 11, 13):
        for p in range(2, 50):
            if not is_prime(p):
                continue
            for t in range(1, 12):
                if p ** ((e - 1) * t) > max_nu:
                    break
                add(F.VanLintSchrijver, p=p, e=e, t=t)
    for q in range(2, 50):
        if not is_prime_power(q):
            continue
        for n in range(4, 12):
            add(F.Grassmann, q=q, n=n)
        for m in range(2, 12):
            add(F.BilinearForms, q=q, m=m)
            add(F.VOplus, q=q, m=m)
            add(F.VOminus, q=q, m=m)
        if q >= 3:
            add(F.VOplus, q=q, m=1)
        for pt in ("W", "Q", "Qplus", "Qminus", "H"):
            for dim in range(3, 12):
                add(F.PolarCollinearity, polar_type=pt, n=dim, q=q)
                if polar_rank(pt, dim) == 2 and q <= 16:
                    add(F.PolarCollinearity, polar_type=pt, n=dim, q=q, dual=True)
    for eps in (1, -1):
        for q in (2, 3, 4, 8):
            for n in range(5, 14):
                add(F.NO, epsilon=eps, n=n, q=q)
    for m in range(4, 10):
        add(F.NU, m=m)
    for q in (8, 32):
        add(F.VSz, q=q)
    for fam in (F.HoffmanSingleton, F.Gewirtz, F.M22_77, F.HigmanSims, F.BvLS):
        add(fam)
    for row in sorted(CONSTRUCTIBLE_ROWS):
        add(F.CatalogRow, table_row=row)
    return out
