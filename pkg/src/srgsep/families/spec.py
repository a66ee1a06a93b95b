"""Family identifiers, parameter validation and witness hints."""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from enum import Enum

from .._arith import is_prime, is_prime_power, multiplicative_order, prime_power
from ..errors import InvalidParams, UnknownFamily


class Family(str, Enum):
    Triangular = "Triangular"
    Grid = "Grid"
    Paley = "Paley"
    Peisert = "Peisert"
    VanLintSchrijver = "VanLintSchrijver"
    Grassmann = "Grassmann"
    BilinearForms = "BilinearForms"
    PolarCollinearity = "PolarCollinearity"
    NO = "NO"
    NU = "NU"
    VOplus = "VOplus"
    VOminus = "VOminus"
    VSz = "VSz"
    BvLS = "BvLS"
    HoffmanSingleton = "HoffmanSingleton"
    Gewirtz = "Gewirtz"
    M22_77 = "M22_77"
    HigmanSims = "HigmanSims"
    DualPolarHalf5 = "DualPolarHalf5"
    E6 = "E6"
    AltForms = "AltForms"
    VD55 = "VD55"
    CatalogRow = "CatalogRow"


# short names accepted on the command line
ALIASES = {
    "triangular": Family.Triangular,
    "grid": Family.Grid,
    "paley": Family.Paley,
    "peisert": Family.Peisert,
    "vls": Family.VanLintSchrijver,
    "grassmann": Family.Grassmann,
    "bilinear": Family.BilinearForms,
    "polar": Family.PolarCollinearity,
    "no": Family.NO,
    "nu": Family.NU,
    "voplus": Family.VOplus,
    "vominus": Family.VOminus,
    "vsz": Family.VSz,
    "bvls": Family.BvLS,
    "hoffman-singleton": Family.HoffmanSingleton,
    "hoffmansingleton": Family.HoffmanSingleton,
    "gewirtz": Family.Gewirtz,
    "m22": Family.M22_77,
    "m22_77": Family.M22_77,
    "higman-sims": Family.HigmanSims,
    "higmansims": Family.HigmanSims,
    "dualpolarhalf5": Family.DualPolarHalf5,
    "e6": Family.E6,
    "alt": Family.AltForms,
    "altforms": Family.AltForms,
    "vd55": Family.VD55,
    "row": Family.CatalogRow,
    "catalogrow": Family.CatalogRow,
}

POLAR_TYPES = ("W", "Q", "Qplus", "Qminus", "H")

# Table rows for which an explicit construction exists.
CONSTRUCTIBLE_ROWS = {3, 4, 5, 6, 12, 13, 15, 16}


def resolve_family(name) -> Family:
    if isinstance(name, Family):
        return name
    key = str(name).strip()
    if key in Family.__members__:
        return Family[key]
    try:
        return ALIASES[key.lower()]
    except KeyError:
        raise UnknownFamily(f"unknown family {name!r}") from None


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus the parameters that select one graph in it.

    Polar spaces are named by projective dimension ``n`` as in W(n, q),
    Q^+(n, q) or H(n, q^2); for the Hermitian type ``q`` is the square root of
    the field order.  NO graphs use ``n`` for the vector-space dimension.
    """

    family: Family
    n: int | None = None
    q: int | None = None
    p: int | None = None
    e: int | None = None
    t: int | None = None
    m: int | None = None
    epsilon: int | None = None
    polar_type: str | None = None
    dual: bool = False
    table_row: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", resolve_family(self.family))
        validate(self)

    @classmethod
    def make(cls, family, **params) -> FamilySpec:
        return cls(resolve_family(family), **params)

    def params(self) -> dict:
        out = {}
        for f in fields(self):
            if f.name == "family":
                continue
            v = getattr(self, f.name)
            if v is not None and not (f.name == "dual" and v is False):
                out[f.name] = v
        return out

    def with_(self, **changes) -> FamilySpec:
        return replace(self, **changes)

    def __str__(self):
        body = " ".join(f"{k}={_fmt(v)}" for k, v in self.params().items())
        return f"{self.family.value}({body})" if body else self.family.value

    @property
    def polar_name(self) -> str:
        """Conventional name such as W(5,3), Q^-(5,2) or H(3,4)."""
        if self.family is not Family.PolarCollinearity:
            raise InvalidParams("not a polar space spec")
        sym = {"W": "W", "Q": "Q", "Qplus": "Q+", "Qminus": "Q-", "H": "H"}[self.polar_type]
        order = self.q**2 if self.polar_type == "H" else self.q
        return f"{sym}({self.n},{order})" + ("^D" if self.dual else "")

    @property
    def rank(self) -> int | None:
        if self.family is not Family.PolarCollinearity:
            return None
        return polar_rank(self.polar_type, self.n)


def _fmt(v):
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def polar_rank(polar_type: str, n: int) -> int:
    """Witt index of the polar space of projective dimension n."""
    if polar_type in ("W", "Qplus"):
        return (n + 1) // 2
    if polar_type == "Q":
        return n // 2
    if polar_type == "Qminus":
        return (n - 1) // 2
    return (n + 1) // 2  # Hermitian: floor((n+1)/2)


def _need(spec, *names):
    for nm in names:
        if getattr(spec, nm) is None:
            raise InvalidParams(f"{spec.family.value}: parameter '{nm}' is required")


def _check(cond: bool, family: Family, msg: str):
    if not cond:
        raise InvalidParams(f"{family.value}: constraint violated: {msg}")


def _prime_power(family, q, name="q"):
    _check(q is not None and q >= 2 and is_prime_power(q), family, f"{name}={q} is a prime power")


def validate(spec: FamilySpec) -> None:
    f = spec.family
    F = Family
    if f is F.Triangular:
        _need(spec, "n")
        _check(spec.n >= 4, f, "n >= 4")
    elif f is F.Grid:
        _need(spec, "n")
        _check(spec.n >= 2, f, "n >= 2")
    elif f is F.Paley:
        _need(spec, "q")
        _prime_power(f, spec.q)
        _check(spec.q % 4 == 1, f, "q = 1 mod 4")
    elif f is F.Peisert:
        _need(spec, "p", "t")
        _check(is_prime(spec.p), f, "p prime")
        _check(spec.p % 4 == 3, f, "p = 3 mod 4")
        _check(spec.t >= 1, f, "t >= 1")
    elif f is F.VanLintSchrijver:
        _need(spec, "p", "e", "t")
        _check(is_prime(spec.p), f, "p prime")
        _check(is_prime(spec.e) and spec.e % 2 == 1, f, "e an odd prime")
        _check(spec.p % spec.e != 0 and multiplicative_order(spec.p, spec.e) == spec.e - 1, f,
               "p primitive mod e")
        _check(spec.t >= 1, f, "t >= 1")
        from ..catalog import vls_degenerate

        _check(not vls_degenerate(spec.p, spec.e, spec.t), f, "mu > 0 and the graph is not complete")
    elif f is F.Grassmann:
        _need(spec, "q", "n")
        _prime_power(f, spec.q)
        _check(spec.n >= 4, f, "n >= 4")
    elif f is F.BilinearForms:
        _need(spec, "q", "m")
        _prime_power(f, spec.q)
        _check(spec.m >= 2, f, "m >= 2")
    elif f is F.PolarCollinearity:
        _need(spec, "polar_type", "n", "q")
        _check(spec.polar_type in POLAR_TYPES, f, f"polar_type in {POLAR_TYPES}")
        _prime_power(f, spec.q)
        pt, n = spec.polar_type, spec.n
        parity_ok = {"W": n % 2 == 1, "Qplus": n % 2 == 1, "Qminus": n % 2 == 1, "Q": n % 2 == 0,
                     "H": True}[pt]
        _check(parity_ok, f, f"projective dimension {n} has the right parity for type {pt}")
        _check(polar_rank(pt, n) >= 2, f, "rank >= 2")
        if spec.dual:
            _check(polar_rank(pt, n) == 2, f, "duals only for rank 2")
    elif f is F.NO:
        _need(spec, "epsilon", "n", "q")
        _check(spec.epsilon in (1, -1), f, "epsilon = +1 or -1")
        if spec.n % 2 == 0:
            _check(spec.q in (2, 3), f, "q in {2, 3} for even dimension")
            _check(spec.n >= 6, f, "n = 2m with m >= 3")
        else:
            _check(spec.q in (3, 4, 8), f, "q in {3, 4, 8} for odd dimension")
            _check(spec.n >= 5, f, "n = 2m+1 with m >= 2")
    elif f is F.NU:
        _need(spec, "m")
        _check(spec.m >= 4, f, "m >= 4")
        _check(spec.q in (None, 2), f, "q = 2")
    elif f is F.VOplus:
        _need(spec, "m", "q")
        _prime_power(f, spec.q)
        _check(spec.m >= 2 or (spec.m == 1 and spec.q >= 3), f, "m >= 2 (or m = 1, q >= 3)")
    elif f is F.VOminus:
        _need(spec, "m", "q")
        _prime_power(f, spec.q)
        _check(spec.m >= 2, f, "m >= 2")
    elif f is F.VSz:
        _need(spec, "q")
        _check(spec.q >= 8 and is_prime_power(spec.q) and prime_power(spec.q)[0] == 2
               and prime_power(spec.q)[1] % 2 == 1, f, "q = 2^(2e+1) with e >= 1")
    elif f in (F.DualPolarHalf5, F.E6, F.AltForms, F.VD55):
        _need(spec, "q")
        _prime_power(f, spec.q)
    elif f is F.CatalogRow:
        _need(spec, "table_row")
        _check(1 <= spec.table_row <= 53, f, "1 <= table_row <= 53")
    # sporadics take no parameters


@dataclass(frozen=True)
class WitnessHint:
    clique: tuple[int, ...] | None = None
    coclique: tuple[int, ...] | None = None
    provenance: str = ""
    notes: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        return {
            "clique": list(self.clique) if self.clique is not None else None,
            "coclique": list(self.coclique) if self.coclique is not None else None,
            "provenance": self.provenance,
        }


def parse_spec(text: str) -> FamilySpec:
    """Parse 'family=vls p=2 e=3 t=3' (or 'vls p=2 e=3 t=3')."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise InvalidParams("empty family spec")
    family = None
    params: dict = {}
    for tok in tokens:
        if "=" not in tok:
            if family is not None:
                raise InvalidParams(f"unexpected token {tok!r}")
            family = tok
            continue
        k, v = tok.split("=", 1)
        k = k.strip().lstrip("-").replace("-", "_")
        if k == "family":
            family = v
        else:
            params[k] = coerce_param(k, v)
    if family is None:
        raise InvalidParams("family not given")
    return FamilySpec.make(family, **params)


_INT_PARAMS = {"n", "q", "p", "e", "t", "m", "table_row"}


def coerce_param(name: str, value):
    if name == "table_row" or name == "row":
        return int(value)
    if name in _INT_PARAMS:
        return int(value)
    if name == "epsilon":
        v = str(value).strip()
        if v in ("+", "plus"):
            return 1
        if v in ("-", "minus"):
            return -1
        return int(v)
    if name == "dual":
        return str(value).lower() in ("1", "true", "yes", "d")
    if name == "polar_type":
        return str(value)
    raise InvalidParams(f"unknown parameter {name!r}")
