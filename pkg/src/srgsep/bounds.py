"""Exact spectral bounds for strongly regular graphs.

All arithmetic happens in Q[sqrt(D)] so that the integrality test deciding
separation is exact.  Conference graphs (e.g. Paley graphs of non-square
order) have irrational eigenvalues and therefore irrational bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from ._arith import square_free_split
from .errors import BoundViolated
from .graph import SrgParams


class ExactScalar:
    """The number a + b*sqrt(D) with a, b rational and D squarefree (or 0)."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a=0, b=0, D: int = 0):
        a, b = Fraction(a), Fraction(b)
        if D < 0:
            raise ValueError("D must be nonnegative")
        if D or b:
            f, d = square_free_split(D)
            b *= f
            D = d
        if D in (0, 1):
            a, b, D = a + b * D, Fraction(0), 0
        if b == 0:
            D = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "D", D)

    def __setattr__(self, *_):
        raise AttributeError("ExactScalar is immutable")

    @classmethod
    def sqrt(cls, n: int) -> ExactScalar:
        return cls(0, 1, n) if n else cls(0)

    # -- coercion ----------------------------------------------------------
    def _coerce(self, other) -> ExactScalar:
        if isinstance(other, ExactScalar):
            if self.D and other.D and self.D != other.D:
                raise ValueError(f"cannot mix sqrt({self.D}) and sqrt({other.D})")
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar(other)
        raise TypeError(f"unsupported operand {other!r}")

    def _D(self, other):
        return self.D or other.D

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        return ExactScalar(self.a + o.a, self.b + o.b, self._D(o))

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.a, -self.b, self.D)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        D = self._D(o)
        return ExactScalar(self.a * o.a + self.b * o.b * D, self.a * o.b + self.b * o.a, D)

    __rmul__ = __mul__

    def conjugate(self) -> ExactScalar:
        return ExactScalar(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.D

    def __truediv__(self, other):
        o = self._coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        num = self * o.conjugate()
        return ExactScalar(num.a / n, num.b / n, num.D)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    # -- comparison ------------------------------------------------------
    def sign(self) -> int:
        a, b, D = self.a, self.b, self.D
        if b == 0:
            return (a > 0) - (a < 0)
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 D
        diff = a * a - b * b * D
        s = (diff > 0) - (diff < 0)
        return s if a > 0 else -s

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self - o).sign() == 0

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    # -- queries -----------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def floor(self) -> int:
        if self.b == 0:
            return math.floor(self.a)
        # |b| sqrt(D) lies in [t, t + 1); start from an exact bracket, not a float
        sq = self.b * self.b * self.D
        t = math.isqrt(sq.numerator * sq.denominator) // sq.denominator
        n = math.floor(self.a + (t if self.b > 0 else -t - 1))
        while self < n:
            n -= 1
        while self >= n + 1:
            n += 1
        return n

    def __int__(self):
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return int(self.a)

    def __str__(self):
        def frac(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        if self.b == 0:
            return frac(self.a)
        sign = "+" if self.b > 0 else "-"
        return f"({frac(self.a)} {sign} {frac(abs(self.b))}√{self.D})"

    def __repr__(self):
        return f"ExactScalar({self})"

    @classmethod
    def parse(cls, text: str) -> ExactScalar:
        """Inverse of str(): accepts 'n', 'n/d' or '(a ± b√D)'."""
        t = text.strip()
        if t.startswith("(") and t.endswith(")"):
            body = t[1:-1]
            for sep in (" + ", " - "):
                if sep in body:
                    left, right = body.split(sep, 1)
                    coef, D = right.split("√")
                    b = Fraction(coef)
                    return cls(Fraction(left), b if sep == " + " else -b, int(D))
            raise ValueError(f"cannot parse {text!r}")
        return cls(Fraction(t))


def eigenvalues(p: SrgParams) -> tuple[ExactScalar, ExactScalar]:
    """The restricted eigenvalues (r, s), r > s, of an SRG with parameters p."""
    d = p.lam - p.mu
    disc = d * d + 4 * (p.k - p.mu)
    root = ExactScalar.sqrt(disc)
    r = (root + d) / 2
    s = (-root + d) / 2
    return r, s


def delsarte_bound(p: SrgParams) -> ExactScalar:
    """Clique bound 1 - k/s."""
    _, s = eigenvalues(p)
    return 1 - ExactScalar(p.k) / s


def hoffman_bound(p: SrgParams) -> ExactScalar:
    """Coclique bound nu*s/(s-k)."""
    _, s = eigenvalues(p)
    return (s * p.nu) / (s - p.k)


def clique_coclique_check(omega: int, alpha: int, nu: int) -> Literal["Strict", "Equal"]:
    if omega < 1 or alpha < 1:
        raise ValueError("omega and alpha must be positive")
    if omega * alpha > nu:
        raise BoundViolated(f"omega*alpha = {omega * alpha} exceeds nu = {nu}")
    return "Equal" if omega * alpha == nu else "Strict"


@dataclass(frozen=True)
class BoundReport:
    params: SrgParams
    r: ExactScalar
    s: ExactScalar
    delsarte: ExactScalar
    hoffman: ExactScalar

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def delsarte_integral(self) -> bool:
        return self.delsarte.is_integer

    @property
    def hoffman_integral(self) -> bool:
        return self.hoffman.is_integer

    @property
    def clique_target(self) -> int:
        return self.delsarte.floor()

    @property
    def coclique_target(self) -> int:
        return self.hoffman.floor()

    def as_dict(self) -> dict:
        return {
            "params": list(self.params.astuple()),
            "s": str(self.s),
            "r": str(self.r),
            "delsarte": str(self.delsarte),
            "hoffman": str(self.hoffman),
            "delsarte_integral": self.delsarte_integral,
            "hoffman_integral": self.hoffman_integral,
        }


def bound_report(p: SrgParams) -> BoundReport:
    r, s = eigenvalues(p)
    d = 1 - ExactScalar(p.k) / s
    h = (s * p.nu) / (s - p.k)
    return BoundReport(p, r, s, d, h)


@dataclass(frozen=True)
class QuickVerdict:
    """Outcome of the integrality test on the two spectral bounds.

    ``kind`` is ``"Separating"`` when a bound is fractional or irrational, in
    which case ``which`` lists the offending bounds; otherwise ``"NeedsSearch"``
    with the two integer targets.
    """

    kind: Literal["Separating", "NeedsSearch"]
    which: tuple[str, ...] = ()
    irrational: bool = False
    clique_target: int | None = None
    coclique_target: int | None = None

    @property
    def reason(self) -> str | None:
        if self.kind != "Separating":
            return None
        if self.irrational:
            return "IrrationalBounds"
        return "FractionalDelsarte" if "delsarte" in self.which else "FractionalHoffman"


def quick_verdict(p: SrgParams) -> QuickVerdict:
    rep = bound_report(p)
    which = tuple(
        name for name, val in (("delsarte", rep.delsarte), ("hoffman", rep.hoffman)) if not val.is_integer
    )
    if which:
        irr = not (rep.delsarte.is_rational and rep.hoffman.is_rational)
        return QuickVerdict("Separating", which, irr)
    return QuickVerdict("NeedsSearch", (), False, int(rep.delsarte), int(rep.hoffman))


def multiplicities(p: SrgParams) -> tuple[ExactScalar, ExactScalar]:
    """Multiplicities (f, g) of r and s from tr A = 0 and tr A^2 = nu k."""
    r, s = eigenvalues(p)
    # f + g = nu - 1 ; f r + g s = -k
    g = (r * (p.nu - 1) + p.k) / (r - s)
    f = ExactScalar(p.nu - 1) - g
    return f, g


def feasibility(p) -> bool:
    """Standard integrality check: counting identity and integral multiplicities."""
    nu, k, lam, mu = p.astuple() if isinstance(p, SrgParams) else tuple(p)
    if not (0 <= lam <= k and 0 <= mu <= k and 0 < k < nu - 1):
        return False
    if k * (k - lam - 1) != (nu - k - 1) * mu:
        return False
    sp = SrgParams(nu, k, lam, mu)
    f, g = multiplicities(sp)
    return f.is_integer and g.is_integer and int(f) >= 0 and int(g) >= 0
