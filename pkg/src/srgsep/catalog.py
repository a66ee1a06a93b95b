"""Parameter formulas for every family and the stored table of sporadic rows.

Several families are described by (nu, k, s) alone; lambda and mu then follow
from the eigenvalue relations r + s = lambda - mu and r s = mu - k, with r fixed
by the trace condition.  See :func:`params_from_nks`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from ._arith import qbinom
from .bounds import ExactScalar, bound_report
from .errors import CorruptTableData, InvalidParams, UnknownFamily
from .families.spec import Family, FamilySpec, polar_rank
from .graph import SrgParams

TABLE_SCHEMA = "srgsep-table2/1"


class Provenance(str, Enum):
    PaperTable = "PaperTable"
    PaperProse = "PaperProse"
    SolverDerived = "SolverDerived"


@dataclass(frozen=True)
class Known:
    value: int
    provenance: Provenance
    note: str = ""
    exact: bool = True  # False: value is only an upper bound


@dataclass(frozen=True)
class CatalogEntry:
    spec: FamilySpec
    params: SrgParams
    name: str = ""
    known_omega: Known | None = None
    known_alpha: Known | None = None
    source: str = ""
    stored: dict | None = None  # raw stored columns for table rows


# ---------------------------------------------------------------------------
# parameter recovery

def params_from_nks(nu: int, k: int, s) -> SrgParams:
    """Recover (nu, k, lambda, mu) from nu, k and the negative eigenvalue s.

    Uses f r + g s = -k and f + g = nu - 1 together with (k - r)(k - s) = nu mu
    eliminated to r = -k (nu - k + s) / (k + s (nu - 1)).
    """
    s = Fraction(s)
    r = Fraction(-k) * (nu - k + s) / (k + s * (nu - 1))
    mu = k + r * s
    lam = mu + r + s
    if mu.denominator != 1 or lam.denominator != 1:
        raise InvalidParams(f"(nu, k, s) = ({nu}, {k}, {s}) does not give integral parameters")
    return SrgParams(nu, k, int(lam), int(mu))


def params_from_nkmu(nu: int, k: int, mu: int) -> SrgParams:
    num = k * (k - 1) - (nu - k - 1) * mu
    if num % k:
        raise InvalidParams(f"(nu, k, mu) = ({nu}, {k}, {mu}) gives non-integral lambda")
    return SrgParams(nu, k, num // k, mu)


# ---------------------------------------------------------------------------
# family formulas

def vls_params(p: int, e: int, t: int) -> SrgParams | None:
    """van Lint-Schrijver cyclotomic graph, or None when degenerate."""
    q = p ** ((e - 1) * t)
    root = p ** ((e - 1) * t // 2)
    k = (q - 1) // e
    if t % 2 == 0:
        s = Fraction(-1 - (e - 1) * root, e)
        r = Fraction(-1 + root, e)
    else:
        s = Fraction(-1 - root, e)
        r = Fraction(-1 + (e - 1) * root, e)
    mu = k + r * s
    lam = mu + r + s
    if mu.denominator != 1 or lam.denominator != 1 or mu <= 0 or k >= q - 1:
        return None
    try:
        return SrgParams(q, k, int(lam), int(mu))
    except InvalidParams:
        return None


def vls_degenerate(p: int, e: int, t: int) -> bool:
    return vls_params(p, e, t) is None


def polar_collinearity_params(polar_type: str, n: int, q: int, dual: bool = False) -> SrgParams:
    """Collinearity graph of a classical polar space of rank d >= 2.

    With b the number of points on a line minus one and c the number of lines
    on a point of a maximal singular subspace... expressed via b and b**e:
    W, Q: b**e = b; Q+: 1; Q-: b**2; H(odd): sqrt(b); H(even): b**1.5.
    """
    d = polar_rank(polar_type, n)
    if polar_type == "H":
        b = q * q
        be = q if n % 2 == 1 else q**3
    else:
        b = q
        be = {"W": q, "Q": q, "Qplus": 1, "Qminus": q * q}[polar_type]
    if dual:
        # rank 2: generalized quadrangle of order (b, be); dual has order (be, b)
        s_, t_ = be, b
        return SrgParams((s_ + 1) * (s_ * t_ + 1), s_ * (t_ + 1), s_ - 1, t_ + 1)
    v = (b**d - 1) * (b ** (d - 1) * be + 1) // (b - 1)
    k = b * (b ** (d - 1) - 1) * (b ** (d - 2) * be + 1) // (b - 1)
    if d >= 3:
        lam = b * b * (b ** (d - 2) - 1) * (b ** (d - 3) * be + 1) // (b - 1) + b - 1
    else:
        lam = b - 1
    mu = (b ** (d - 1) - 1) * (b ** (d - 2) * be + 1) // (b - 1)
    return SrgParams(v, k, lam, mu)


def nu_count(n: int) -> int:
    """Number of non-isotropic points of the Hermitian form on GF(4)^n."""
    return 2 ** (n - 1) * (2**n - (-1) ** n) // 3


def _no_params(eps: int, n: int, q: int) -> SrgParams:
    if n % 2 == 0:
        m = n // 2
        if q == 2:
            nu = 2 ** (2 * m - 1) - eps * 2 ** (m - 1)
            k = 2 ** (2 * m - 2) - 1
            s = -(2 ** (m - 1)) - 1 if eps == 1 else -(2 ** (m - 2)) - 1
        else:
            nu = 3 ** (m - 1) * (3**m - eps) // 2
            k = 3 ** (m - 1) * (3 ** (m - 1) - eps) // 2
            s = -(3 ** (m - 2)) if eps == 1 else -(3 ** (m - 1))
    else:
        m = (n - 1) // 2
        nu = q**m * (q**m + eps) // 2
        k = (q ** (m - 1) + eps) * (q**m - eps)
        s = -(q ** (m - 1)) - 1 if eps == 1 else -(q - 2) * q ** (m - 1) - 1
    return params_from_nks(nu, k, s)


def params_for(spec: FamilySpec) -> SrgParams:
    F = Family
    f = spec.family
    if f is F.Triangular:
        n = spec.n
        return SrgParams(n * (n - 1) // 2, 2 * (n - 2), n - 2, 4)
    if f is F.Grid:
        n = spec.n
        return SrgParams(n * n, 2 * (n - 1), n - 2, 2)
    if f in (F.Paley, F.Peisert):
        q = spec.q if f is F.Paley else spec.p ** (2 * spec.t)
        return SrgParams(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4)
    if f is F.VanLintSchrijver:
        p = vls_params(spec.p, spec.e, spec.t)
        if p is None:
            raise InvalidParams("degenerate van Lint-Schrijver parameters")
        return p
    if f is F.Grassmann:
        q, n = spec.q, spec.n
        return params_from_nkmu(qbinom(n, 2, q), q * (q + 1) * qbinom(n - 2, 1, q), (q + 1) ** 2)
    if f is F.BilinearForms:
        q, m = spec.q, spec.m
        return params_from_nkmu(q ** (2 * m), (q + 1) * (q**m - 1), q * (q + 1))
    if f is F.PolarCollinearity:
        return polar_collinearity_params(spec.polar_type, spec.n, spec.q, spec.dual)
    if f is F.NO:
        return _no_params(spec.epsilon, spec.n, spec.q)
    if f is F.NU:
        m = spec.m
        perp = SrgParams(nu_count(m), nu_count(m - 1), nu_count(m - 2), 4 * nu_count(m - 3))
        return perp.complement()
    if f in (F.VOplus, F.VOminus):
        q, m = spec.q, spec.m
        eps = 1 if f is F.VOplus else -1
        k = (q**m - eps) * (q ** (m - 1) + eps)
        s = -(q ** (m - 1)) - 1 if eps == 1 else -(q - 1) * q ** (m - 1) - 1
        return params_from_nks(q ** (2 * m), k, s)
    if f is F.VSz:
        q = spec.q
        return SrgParams(q**4, (q - 1) * (q * q + 1), q - 2, q * (q - 1))
    if f is F.E6:
        q = spec.q
        nu = (q**12 - 1) * (q**9 - 1) // ((q**4 - 1) * (q - 1))
        k = (q**3 + 1) * sum(q**i for i in range(1, 9))
        return params_from_nks(nu, k, -(q**3) - 1)
    if f is F.DualPolarHalf5:
        q = spec.q
        nu = (q**4 + 1) * (q**3 + 1) * (q**2 + 1) * (q + 1)
        k = q * (q * q + 1) * (q**5 - 1) // (q - 1)
        return params_from_nks(nu, k, -(q**2) - 1)
    if f is F.AltForms:
        q = spec.q
        return params_from_nkmu(q**10, (q * q + 1) * (q**5 - 1), q * q * (q * q + 1))
    if f is F.VD55:
        q = spec.q
        return params_from_nks(q**16, (q**8 - 1) * (q**3 + 1), -(q**3) - 1)
    if f is F.HoffmanSingleton:
        return SrgParams(50, 7, 0, 1)
    if f is F.Gewirtz:
        return SrgParams(56, 10, 0, 2)
    if f is F.M22_77:
        return SrgParams(77, 16, 0, 4)
    if f is F.HigmanSims:
        return SrgParams(100, 22, 0, 6)
    if f is F.BvLS:
        return SrgParams(243, 22, 1, 2)
    if f is F.CatalogRow:
        return table2_entry(spec.table_row).params
    raise UnknownFamily(f"no parameter formula for {f}")


# ---------------------------------------------------------------------------
# stored table

@lru_cache(maxsize=None)
def _raw_table() -> dict:
    text = resources.files("srgsep.data").joinpath("table2.json").read_text()
    data = json.loads(text)
    if data.get("schema") != TABLE_SCHEMA:
        raise CorruptTableData(f"unexpected table schema {data.get('schema')!r}")
    return data


def _known(v, prov=Provenance.PaperTable, note=""):
    return None if v is None else Known(int(v), prov, note)


def _entry_from_row(row) -> CatalogEntry:
    rid, name, params, s, r, dels, hoff, omega, alpha, shade = row
    p = SrgParams(*params)
    stored = {"s": s, "r": r, "delsarte": dels, "hoffman": hoff, "shade": shade}
    rep = bound_report(p)
    got = {"s": str(rep.s), "r": str(rep.r), "delsarte": str(rep.delsarte), "hoffman": str(rep.hoffman)}
    for key, val in got.items():
        if ExactScalar.parse(stored[key]) != ExactScalar.parse(val):
            raise CorruptTableData(f"row {rid}: stored {key}={stored[key]} but recomputed {val}")
    for label, val, bound in (("omega", omega, rep.delsarte), ("alpha", alpha, rep.hoffman)):
        if val is not None and val > bound:
            raise CorruptTableData(f"row {rid}: {label}={val} exceeds its bound {bound}")
    if omega is not None and alpha is not None and omega * alpha > p.nu:
        raise CorruptTableData(f"row {rid}: omega*alpha exceeds nu")
    spec = FamilySpec(Family.CatalogRow, table_row=rid)
    return CatalogEntry(spec, p, name, _known(omega), _known(alpha), f"table row {rid}", stored)


@lru_cache(maxsize=None)
def table2_rows() -> tuple[CatalogEntry, ...]:
    """All 53 rows, revalidated against freshly computed spectra and bounds."""
    rows = tuple(_entry_from_row(r) for r in _raw_table()["rows"])
    if [e.spec.table_row for e in rows] != list(range(1, 54)):
        raise CorruptTableData("table rows must be numbered 1..53")
    return rows


def table2_entry(row: int) -> CatalogEntry:
    rows = table2_rows()
    if not 1 <= row <= len(rows):
        raise InvalidParams(f"no table row {row}")
    return rows[row - 1]


@dataclass(frozen=True)
class Table6Row:
    row: int
    params: SrgParams
    omega: int
    alpha: int


@lru_cache(maxsize=None)
def table6_rows() -> tuple[Table6Row, ...]:
    out = []
    for rid, params, omega, alpha in _raw_table()["table6"]:
        p = SrgParams(*params)
        if table2_entry(rid).params != p:
            raise CorruptTableData(f"Table6 row {rid} parameters disagree with Table2")
        out.append(Table6Row(rid, p, omega, alpha))
    return tuple(out)


def separating_rows() -> frozenset[int]:
    return frozenset(_raw_table()["separating_rows"])


def oa_rows() -> frozenset[int]:
    return frozenset(_raw_table()["oa_rows"])


def known_values(row: int) -> tuple[Known | None, Known | None]:
    """Best known (omega, alpha) for a table row, merging the later search results."""
    e = table2_entry(row)
    omega, alpha = e.known_omega, e.known_alpha
    for t6 in table6_rows():
        if t6.row == row:
            omega = omega or Known(t6.omega, Provenance.PaperTable, "search table")
            alpha = alpha or Known(t6.alpha, Provenance.PaperTable, "search table")
    if row in oa_rows():
        q = e.stored and int(ExactScalar.parse(e.stored["delsarte"]))
        omega = Known(q, Provenance.PaperProse, "line of a chosen parallel class")
        alpha = Known(q, Provenance.PaperProse, "line of an unchosen parallel class")
    return omega, alpha


# ---------------------------------------------------------------------------
# family-level clique and coclique numbers

# alpha(NO^+_{2m}(2)) by exhaustive search (m = 5 takes a few minutes)
NO_PLUS_EVEN_2_ALPHA = {3: 7, 4: 8, 5: 9}

NAMED_ROWS = {
    Family.HoffmanSingleton: 3,
    Family.Gewirtz: 4,
    Family.M22_77: 5,
    Family.HigmanSims: 6,
    Family.BvLS: 12,
}


def _isqrt_exact(q: int) -> int | None:
    r = int(round(q**0.5))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c * c == q:
            return c
    return None


def family_known_values(spec: FamilySpec) -> tuple[Known | None, Known | None]:
    """Known (omega, alpha) for a family member, from the literature or search.

    Entries with ``exact=False`` are upper bounds only.  Families whose
    verdict follows from bound integrality or ovoid existence return what
    little is known (often nothing).
    """
    F = Family
    f = spec.family
    prose = Provenance.PaperProse
    if f is F.Triangular:
        n = spec.n
        return Known(n - 1, prose, "pairs through a point"), Known(n // 2, prose, "a maximal matching")
    if f is F.Grid:
        n = spec.n
        return Known(n, prose, "a row"), Known(n, prose, "a transversal")
    if f is F.Paley:
        r = _isqrt_exact(spec.q)
        if r is None:
            return None, None
        return Known(r, prose, "subfield"), Known(r, prose, "self-complementary")
    if f is F.Peisert:
        if spec.t % 2 == 0:
            return None, None
        v = spec.p**spec.t
        return Known(v, prose, "subfield"), Known(v, prose, "subfield multiple")
    if f is F.VanLintSchrijver:
        if spec.t % 2 == 0:
            return None, None
        v = spec.p ** ((spec.e - 1) * spec.t // 2)
        return Known(v, prose, "subfield"), Known(v, prose, "non-e-th-power multiple of subfield")
    if f is F.Grassmann:
        q, n = spec.q, spec.n
        omega = Known(qbinom(n - 1, 1, q), prose, "lines through a point")
        if n % 2 == 0:
            alpha = Known((q**n - 1) // (q * q - 1), prose, "a line spread")
        else:
            alpha = Known((q**n - q**3) // (q * q - 1) + 1, prose, "partial spread")
        return omega, alpha
    if f is F.BilinearForms:
        v = spec.q**spec.m
        return Known(v, prose, "matrices with a fixed zero row"), Known(v, prose, "maximum rank-distance code")
    if f is F.NO:
        return _no_known(spec.epsilon, spec.n, spec.q)
    if f is F.NU:
        return None, Known(spec.m, prose, "the complements form a tower")
    if f is F.VOplus:
        return Known(spec.q**spec.m, prose, "totally singular subspace"), None
    if f is F.E6:
        q = spec.q
        return Known(sum(q**i for i in range(6)), prose, "maximal clique size"), None
    if f is F.VD55:
        return Known(spec.q**4, prose, "maximal clique size"), None
    if f is F.AltForms:
        q = spec.q
        return Known(q**4, prose, "maximal clique size"), Known(q**5, prose, "maximal coclique size")
    if f in NAMED_ROWS:
        return known_values(NAMED_ROWS[f])
    if f is F.CatalogRow:
        return known_values(spec.table_row)
    return None, None


def _no_known(eps: int, n: int, q: int) -> tuple[Known | None, Known | None]:
    prose = Provenance.PaperProse
    if n % 2 == 0:
        m = n // 2
        if q == 2 and eps == -1 and m == 3:
            return Known(4, prose), Known(5, prose)
        if q == 2 and eps == 1:
            omega = Known(2 ** (m - 1), prose, "meets the clique bound")
            if m in NO_PLUS_EVEN_2_ALPHA:
                return omega, Known(NO_PLUS_EVEN_2_ALPHA[m], Provenance.SolverDerived, "exhaustive search")
            bound = m // 2 + 1  # the quoted case formula, largest branch rounded down
            return omega, Known(bound, prose, "quoted coclique formula, unverified", exact=False)
        if q == 3 and eps == 1:
            return Known(2 * m, prose, "tower bound", exact=False), None
        if q == 3 and eps == -1 and m == 3:
            return Known(6, prose, "by computer"), Known(15, prose, "by computer")
        return None, None
    m = (n - 1) // 2
    if eps == 1 and q in (4, 8):
        return Known(q**m, prose, "maximal clique size"), None
    if eps == 1 and q == 3:
        alpha = 2 * m + 1 if m % 2 == 0 else 2 * m
        return Known(3**m, prose, "meets the clique bound"), Known(alpha, prose, "tower sizes")
    return None, None
