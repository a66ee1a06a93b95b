from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from srgsep.bounds import (
    ExactScalar,
    bound_report,
    clique_coclique_check,
    delsarte_bound,
    eigenvalues,
    feasibility,
    hoffman_bound,
    multiplicities,
    quick_verdict,
)
from srgsep.errors import BoundViolated
from srgsep.graph import SrgParams, cycle_graph

S5 = ExactScalar.sqrt(5)


@st.composite
def srg_params(draw):
    k = draw(st.integers(2, 80))
    lam = draw(st.integers(0, k - 2))
    mu = draw(st.integers(1, k))
    assume(k * (k - lam - 1) % mu == 0)
    nu = k + 1 + k * (k - lam - 1) // mu
    assume(nu > k + 1)
    return SrgParams(nu, k, lam, mu)


def test_eigenvalue_examples():
    assert eigenvalues(SrgParams(36, 14, 4, 6)) == (ExactScalar(2), ExactScalar(-4))
    assert eigenvalues(SrgParams(50, 7, 0, 1)) == (ExactScalar(2), ExactScalar(-3))
    r, s = eigenvalues(SrgParams(5, 2, 0, 1))
    assert r == (S5 - 1) / 2 and s == (-S5 - 1) / 2
    spec = np.linalg.eigvalsh(cycle_graph(5).adjacency.astype(float))
    assert np.isclose(spec.min(), float(s)) and np.isclose(sorted(spec)[-2], float(r))


def test_bound_examples():
    assert delsarte_bound(SrgParams(36, 14, 4, 6)) == Fraction(9, 2)
    assert hoffman_bound(SrgParams(36, 14, 4, 6)) == 8
    assert delsarte_bound(SrgParams(100, 22, 0, 6)) == Fraction(15, 4)
    assert hoffman_bound(SrgParams(100, 22, 0, 6)) == Fraction(80, 3)
    assert hoffman_bound(SrgParams(243, 22, 1, 2)) == 45
    assert delsarte_bound(SrgParams(5, 2, 0, 1)) == S5


def test_clique_coclique_check():
    assert clique_coclique_check(5, 3, 15) == "Equal"
    assert clique_coclique_check(2, 5, 16) == "Strict"
    assert clique_coclique_check(3, 3, 9) == "Equal"
    with pytest.raises(BoundViolated):
        clique_coclique_check(4, 4, 15)
    with pytest.raises(ValueError):
        clique_coclique_check(0, 4, 15)


def test_quick_verdict_examples():
    v = quick_verdict(SrgParams(50, 7, 0, 1))
    assert v.kind == "Separating" and "delsarte" in v.which and v.reason == "FractionalDelsarte"
    v = quick_verdict(SrgParams(100, 36, 14, 12))
    assert v.kind == "NeedsSearch" and (v.clique_target, v.coclique_target) == (10, 10)
    v = quick_verdict(SrgParams(13, 6, 2, 3))
    assert v.kind == "Separating" and v.irrational and v.reason == "IrrationalBounds"


def test_feasibility_examples():
    assert feasibility(SrgParams(36, 14, 4, 6))
    assert feasibility(SrgParams(50, 7, 0, 1))
    assert not feasibility((10, 4, 1, 1))


def test_exact_scalar_arithmetic():
    x = ExactScalar(1, 2, 8)  # 1 + 4 sqrt 2
    assert (x.a, x.b, x.D) == (1, 4, 2)
    assert ExactScalar(3, 1, 9) == 6
    assert (S5 * S5) == 5
    assert (1 / S5) * S5 == 1
    assert S5.conjugate() == -S5
    assert S5 > 2 and S5 < 3 and S5.floor() == 2
    assert (-S5).floor() == -3
    assert ExactScalar(Fraction(7, 2)).floor() == 3
    with pytest.raises(ValueError):
        S5 + ExactScalar.sqrt(3)
    with pytest.raises(AttributeError):
        x.a = 2


@settings(max_examples=200, deadline=None)
@given(
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
    st.integers(0, 60),
)
def test_exact_scalar_str_round_trip_and_floor(a, b, d):
    x = ExactScalar(a, b, d)
    assert ExactScalar.parse(str(x)) == x
    fl = x.floor()
    assert fl <= x < fl + 1


@settings(max_examples=300, deadline=None)
@given(srg_params())
def test_bound_invariants(p):
    rep = bound_report(p)
    r, s = rep.r, rep.s
    assert r + s == p.lam - p.mu
    assert r * s == p.mu - p.k
    assert s < 0 <= r < p.k
    assert rep.delsarte * rep.hoffman == p.nu
    assert rep.delsarte == 1 - ExactScalar(p.k) / s
    qv = quick_verdict(p)
    if not (rep.delsarte.is_rational and rep.hoffman.is_rational):
        assert qv.kind == "Separating"
    if qv.kind == "NeedsSearch":
        assert qv.clique_target * qv.coclique_target == p.nu
    else:
        assert rep.clique_target <= rep.delsarte < rep.clique_target + 1


@settings(max_examples=200, deadline=None)
@given(srg_params())
def test_multiplicities_sum(p):
    f, g = multiplicities(p)
    assert f + g == p.nu - 1
    r, s = eigenvalues(p)
    assert p.k + f * r + g * s == 0
