import itertools

import numpy as np
import pytest

from srgsep.catalog import params_for
from srgsep.errors import InvalidParams, NotConstructible, TooLarge, UnknownFamily
from srgsep.families import Family, FamilySpec, generate, is_constructible, parse_spec, sweep_specs
from srgsep.families.polar import self_test_rules
from srgsep.gf import make_field, power_classes, subfield_elements
from srgsep.graph import verify_srg


def spec(text):
    return parse_spec(text)


@pytest.mark.parametrize(
    "text,params",
    [
        ("triangular n=5", (10, 6, 3, 4)),
        ("paley q=9", (9, 4, 1, 2)),
        ("vls p=2 e=3 t=2", (16, 5, 0, 2)),
        ("no n=6 q=3 epsilon=-1", (126, 45, 12, 18)),
        ("hoffman-singleton", (50, 7, 0, 1)),
        ("gewirtz", (56, 10, 0, 2)),
        ("m22", (77, 16, 0, 4)),
        ("higman-sims", (100, 22, 0, 6)),
        ("bvls", (243, 22, 1, 2)),
        ("grassmann q=2 n=4", (35, 18, 9, 9)),
        ("bilinear q=2 m=3", (64, 21, 8, 6)),
        ("polar polar_type=W n=3 q=3", (40, 12, 2, 4)),
    ],
)
def test_generate_examples(text, params):
    g, hint = generate(spec(text))
    assert verify_srg(g).astuple() == params


def test_vominus_formula():
    g, _ = generate(spec("vominus m=2 q=2"))
    # nu = q^{2m}, k = (q^m + 1)(q^{m-1} - 1)
    assert (g.nu, int(g.degrees[0])) == (16, (4 + 1) * (2 - 1))


def test_triangular_brute_force():
    g, _ = generate(spec("triangular n=6"))
    pairs = list(itertools.combinations(range(6), 2))
    for i, a in enumerate(pairs):
        for j, b in enumerate(pairs):
            assert g.adjacent(i, j) == (i != j and bool(set(a) & set(b)))


def test_paley_connection_set_and_hint():
    f = make_field(3, 2)
    g, hint = generate(spec("paley q=9"))
    squares = set(power_classes(f, 2)[0])
    for x, y in itertools.product(range(9), repeat=2):
        assert g.adjacent(x, y) == (f.sub(x, y) in squares)
    assert sorted(hint.clique) == sorted(subfield_elements(f, 1))


def test_vls_cubes():
    f = make_field(2, 4)
    cubes = set(power_classes(f, 3)[0])
    g, _ = generate(spec("vls p=2 e=3 t=2"))
    for x, y in itertools.product(range(16), repeat=2):
        assert g.adjacent(x, y) == (f.sub(x, y) in cubes)


@pytest.mark.parametrize("text,size", [("vls p=2 e=3 t=3", 8), ("vls p=3 e=5 t=1", 9), ("vls p=5 e=3 t=1", 5)])
def test_vls_odd_t_witnesses(text, size):
    g, hint = generate(spec(text))
    assert len(hint.clique) == len(hint.coclique) == size
    assert len(hint.clique) * len(hint.coclique) == g.nu
    assert g.is_clique(hint.clique) and g.is_coclique(hint.coclique)


def test_grassmann_hint_is_pencil():
    g, hint = generate(spec("grassmann q=2 n=5"))
    assert len(hint.clique) == 15  # [4 choose 1]_2
    assert g.is_clique(hint.clique)


def test_paley13_self_complementary_parameters():
    g, _ = generate(spec("paley q=13"))
    assert verify_srg(g).astuple() == verify_srg(g.complement()).astuple() == (13, 6, 2, 3)


def test_vsz_q8():
    g, _ = generate(spec("vsz q=8"))
    assert verify_srg(g).astuple() == (4096, 455, 6, 56)


def test_small_sweep_matches_catalog_and_hints_validate():
    specs = sweep_specs(max_nu=300)
    assert len(specs) > 100
    families = {s.family for s in specs}
    assert {Family.Triangular, Family.Paley, Family.PolarCollinearity, Family.NO, Family.VOplus} <= families
    for s in specs:
        g, hint = generate(s)
        assert verify_srg(g) == params_for(s), s
        if hint.clique is not None:
            assert g.is_clique(hint.clique)
        if hint.coclique is not None:
            assert g.is_coclique(hint.coclique)
        p = params_for(s)
        if p.mu < p.k:  # complete multipartite graphs have disconnected complements
            assert verify_srg(g.complement()) == p.complement()


def test_generation_deterministic():
    for text in ("peisert p=3 t=2", "no n=5 q=3 epsilon=-1", "polar polar_type=H n=3 q=2"):
        a, b = generate(spec(text)), generate(spec(text))
        assert a.graph.checksum() == b.graph.checksum()
        assert a.order == b.order


def test_invalid_params_name_constraint():
    with pytest.raises(InvalidParams, match="q"):
        FamilySpec.make("paley", q=7)
    with pytest.raises(InvalidParams):
        FamilySpec.make("vls", p=2, e=7, t=1)  # 2 is not primitive mod 7
    with pytest.raises(InvalidParams):
        FamilySpec.make("peisert", p=5, t=1)
    with pytest.raises(InvalidParams, match="mu > 0"):
        FamilySpec.make("vls", p=2, e=5, t=1)  # four disjoint K4
    with pytest.raises(InvalidParams, match="required"):
        FamilySpec.make("grassmann", q=2)
    with pytest.raises(UnknownFamily):
        FamilySpec.make("petersen")


def test_catalog_only_and_cap():
    for s in (FamilySpec.make("e6", q=2), FamilySpec.make("dualpolarhalf5", q=2)):
        assert not is_constructible(s)
        with pytest.raises(NotConstructible):
            generate(s)
    with pytest.raises(TooLarge):
        generate(spec("paley q=101"), max_nu=50)


def test_parse_spec_forms():
    a = parse_spec("family=vls p=2 e=3 t=3")
    b = parse_spec("vls --p=2, e=3 t=3")
    assert a == b == FamilySpec.make("vls", p=2, e=3, t=3)
    assert parse_spec("no n=6 q=3 epsilon=-").epsilon == -1
    assert parse_spec("polar polar_type=W n=3 q=3 dual=true").dual
    with pytest.raises(InvalidParams):
        parse_spec("")


def test_no_rule_selection_stable():
    rules = self_test_rules()
    assert rules == self_test_rules()
    assert set(rules.values()) <= {"perp", "nonperp", "tangent", "secant"}


def test_spectrum_of_generated_graph_has_three_values():
    from srgsep.bounds import eigenvalues

    g, _ = generate(spec("no n=6 q=2 epsilon=-1"))
    p = verify_srg(g)
    r, s = eigenvalues(p)
    ev = np.linalg.eigvalsh(g.adjacency.astype(float))
    for x in ev:
        assert min(abs(x - v) for v in (p.k, float(r), float(s))) < 1e-8
