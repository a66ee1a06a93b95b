import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srgsep.bounds import bound_report
from srgsep.errors import BoundViolated, EmptyGraph, IndexOutOfRange
from srgsep.families import generate, parse_spec, sweep_specs
from srgsep.graph import DenseGraph, cycle_graph, verify_srg
from srgsep.solver import Budget, SolveStatus, max_clique, max_coclique, seed_search, verify_witness

from conftest import brute_force_clique, random_graph

ONE = Budget(threads=1)


def gen(text):
    return generate(parse_spec(text))


def test_c5():
    g = cycle_graph(5)
    r = max_clique(g, budget=ONE)
    assert (r.value, r.status) == (2, SolveStatus.Exact)
    assert max_coclique(g, budget=ONE).value == 2


def test_hoffman_singleton():
    g, _ = gen("hoffman-singleton")
    assert max_clique(g, budget=ONE).value == 2
    r = max_coclique(g, 15, ONE)
    assert (r.value, r.status) == (15, SolveStatus.BoundCertified)
    assert g.is_coclique(r.witness)


def test_paley13_exact():
    g, _ = gen("paley q=13")
    r = max_clique(g, budget=ONE)
    assert (r.value, r.status) == (3, SolveStatus.Exact)
    assert brute_force_clique(g) == 3


def test_grassmann_certified_at_delsarte_cap():
    g, _ = gen("grassmann q=2 n=4")
    cap = bound_report(verify_srg(g)).clique_target
    assert cap == 7
    r = max_clique(g, cap, ONE)
    assert (r.value, r.status) == (7, SolveStatus.BoundCertified)
    assert r.upper_bound == 7


def test_gewirtz_coclique():
    g, _ = gen("gewirtz")
    r = max_coclique(g, budget=ONE)
    assert r.value == 16 and g.is_coclique(r.witness)


def test_cap_below_true_value_raises():
    g, _ = gen("grassmann q=2 n=4")
    with pytest.raises(BoundViolated):
        max_clique(g, 5, ONE)


def test_budget_exhaustion_gives_lower_bound():
    g, _ = gen("paley q=61")
    r = max_clique(g, budget=Budget(max_nodes=5, threads=1))
    assert r.status is SolveStatus.LowerBoundOnly
    assert r.value <= r.upper_bound
    assert g.is_clique(r.witness)
    full = max_clique(g, budget=ONE)
    assert full.status is SolveStatus.Exact and r.value <= full.value <= r.upper_bound


def test_initial_incumbent_validated():
    g, _ = gen("paley q=13")
    with pytest.raises(ValueError):
        max_clique(g, initial=[0, 2], budget=ONE)  # 2 is a non-residue mod 13
    assert max_clique(g, initial=[0, 1, 4], budget=ONE).value == 3


def test_budget_validation():
    with pytest.raises(ValueError):
        Budget(max_nodes=0)
    with pytest.raises(ValueError):
        Budget(threads=0)


def test_empty_graph():
    with pytest.raises((EmptyGraph, ValueError)):
        max_clique(DenseGraph(np.zeros((0, 0), dtype=np.uint8)))


def test_verify_witness():
    g, _ = gen("grid n=3")
    assert verify_witness(g, [0], "clique") and verify_witness(g, [0], "coclique")
    assert verify_witness(g, [0, 1, 2], "clique")
    assert not verify_witness(g, [0, 1, 2], "coclique")
    with pytest.raises(IndexOutOfRange):
        verify_witness(g, [9])


def test_seed_search_examples():
    g, hint = gen("vls p=2 e=3 t=3")
    assert seed_search(g, 8, hint, mode="clique") == tuple(sorted(hint.clique))
    assert seed_search(g, 1) == (0,) or len(seed_search(g, 1)) >= 1
    g, hint = gen("bvls")
    found = seed_search(g, 45, hint, mode="coclique", max_steps=200_000)
    assert found is not None and len(found) >= 45 and g.is_coclique(found)


def test_seed_search_deterministic_and_gives_up():
    g, _ = gen("paley q=29")
    a = seed_search(g, 4, seed=0)
    assert a == seed_search(g, 4, seed=0)
    assert a is not None and g.is_clique(a)
    # Paley(29) has clique number 4
    assert seed_search(g, 5, max_steps=500) is None


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 14), st.floats(0.0, 1.0), st.integers(0, 2**32 - 1))
def test_matches_networkx(n, p, seed):
    g = random_graph(n, p, np.random.default_rng(seed))
    ref = max((len(c) for c in nx.find_cliques(nx.from_numpy_array(g.adjacency))), default=1)
    r = max_clique(g, budget=ONE)
    assert r.value == ref and r.status is SolveStatus.Exact
    assert g.is_clique(r.witness)
    assert max_coclique(g.complement(), budget=ONE).value == ref


def test_parallel_matches_serial(rng):
    for _ in range(4):
        g = random_graph(90, 0.5, rng)
        a = max_clique(g, budget=Budget(threads=1))
        b = max_clique(g, budget=Budget(threads=4))
        assert (a.value, a.status) == (b.value, b.status)
        assert g.is_clique(b.witness)


def test_clique_equals_coclique_of_complement_on_generated():
    for s in sweep_specs(max_nu=120):
        g, _ = generate(s)
        rep = bound_report(verify_srg(g))
        cap = rep.clique_target if rep.delsarte_integral else None
        a = max_clique(g, cap, ONE)
        b = max_coclique(g.complement(), cap, ONE)
        assert a.value == b.value, s
        if a.status is SolveStatus.BoundCertified:
            assert a.value == rep.delsarte
