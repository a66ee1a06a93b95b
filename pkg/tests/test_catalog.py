import numpy as np
import pytest

from srgsep import catalog
from srgsep.bounds import ExactScalar, bound_report
from srgsep.catalog import (
    NO_PLUS_EVEN_2_ALPHA,
    Provenance,
    family_known_values,
    known_values,
    params_for,
    params_from_nks,
    table2_entry,
    table2_rows,
    table6_rows,
)
from srgsep.errors import CorruptTableData, InvalidParams
from srgsep.families import FamilySpec, generate, parse_spec, sweep_specs
from srgsep.graph import SrgParams, verify_srg


def test_param_examples():
    assert params_for(FamilySpec.make("vominus", m=2, q=3)).astuple()[:2] == (81, 20)
    assert params_for(FamilySpec.make("dualpolarhalf5", q=2)).nu == 17 * 9 * 5 * 3
    assert params_for(FamilySpec.make("row", table_row=7)).astuple() == (100, 36, 14, 12)


def test_quoted_parameter_formulas():
    for q in (2, 3, 4):
        p = params_for(FamilySpec.make("e6", q=q))
        assert p.k == (q**3 + 1) * sum(q**i for i in range(1, 9))
    for q in (8, 32):
        p = params_for(FamilySpec.make("vsz", q=q))
        assert p.astuple() == (q**4, (q - 1) * (q**2 + 1), q - 2, q * (q - 1))
    for m in (3, 4):
        for eps in (1, -1):
            p = params_for(FamilySpec.make("no", n=2 * m, q=3, epsilon=eps))
            assert p.k == 3 ** (m - 1) * (3 ** (m - 1) - eps) // 2
    for m, q in ((2, 3), (3, 3), (2, 4), (2, 8)):
        p = params_for(FamilySpec.make("no", n=2 * m + 1, q=q, epsilon=-1))
        assert p.k == (q ** (m - 1) - 1) * (q**m + 1)


def test_params_from_nks_inverts_eigenvalues():
    for p in (SrgParams(36, 14, 4, 6), SrgParams(100, 22, 0, 6), SrgParams(243, 22, 1, 2)):
        s = bound_report(p).s
        assert params_from_nks(p.nu, p.k, s.a) == p


def test_table2_rows_examples():
    rows = table2_rows()
    assert len(rows) == 53
    r3 = table2_entry(3)
    assert (r3.stored["s"], r3.stored["r"], r3.stored["delsarte"], r3.stored["hoffman"]) == ("-3", "2", "10/3", "15")
    assert (r3.known_omega.value, r3.known_alpha.value) == (2, 15)
    r12 = table2_entry(12)
    assert (r12.stored["delsarte"], r12.stored["hoffman"]) == ("27/5", "45")
    assert (r12.known_omega.value, r12.known_alpha.value) == (3, 45)
    om, al = known_values(16)
    assert (om.value, al.value) == (16, 16)


def test_table2_stored_columns_recompute_exactly():
    for e in table2_rows():
        rep = bound_report(e.params)
        for key in ("s", "r", "delsarte", "hoffman"):
            assert ExactScalar.parse(e.stored[key]) == getattr(rep, key)
        assert rep.delsarte * rep.hoffman == e.params.nu


def test_table2_question_marks_stay_unknown():
    unknown = [e for e in table2_rows() if e.known_omega is None or e.known_alpha is None]
    assert unknown
    assert all(e.known_omega is None or e.known_omega.value > 0 for e in unknown)


def test_corrupt_row_detected():
    row = [3, "Hoffman-Singleton", [50, 7, 0, 1], "-3", "2", "10/3", "16", 2, 15, "light"]
    with pytest.raises(CorruptTableData, match="hoffman"):
        catalog._entry_from_row(row)
    row = [3, "Hoffman-Singleton", [50, 7, 0, 1], "-3", "2", "10/3", "15", 4, 15, "light"]
    with pytest.raises(CorruptTableData, match="omega"):
        catalog._entry_from_row(row)


def test_table6_rows():
    rows = {r.row: r for r in table6_rows()}
    assert len(rows) == 6
    assert (rows[13].params.astuple(), rows[13].omega, rows[13].alpha) == ((243, 110, 37, 60), 4, 15)
    assert (rows[15].params.astuple(), rows[15].omega, rows[15].alpha) == ((256, 45, 16, 6), 10, 16)
    assert (rows[48].params.astuple(), rows[48].omega, rows[48].alpha) == ((14080, 3159, 918, 648), 64, 40)


def test_nu_delsarte_odd_m():
    for m in (5, 7, 9, 11):
        assert bound_report(params_for(FamilySpec.make("nu", m=m))).delsarte == 2 ** (m - 1)


@pytest.mark.parametrize("m,expected", [(4, 10), (6, 56)])
def test_nu_delsarte_even_m_from_spectrum(m, expected):
    # for even m the bound is not 2^(m-1); check the catalog against the actual spectrum
    s = FamilySpec.make("nu", m=m)
    g, _ = generate(s)
    ev = np.linalg.eigvalsh(g.adjacency.astype(np.float64))
    k = int(g.degrees[0])
    assert np.isclose(1 - k / ev.min(), expected)
    assert bound_report(params_for(s)).delsarte == expected != 2 ** (m - 1)


def test_no_plus_even_2_alpha_entries():
    for m, a in NO_PLUS_EVEN_2_ALPHA.items():
        om, al = family_known_values(FamilySpec.make("no", n=2 * m, q=2, epsilon=1))
        assert om.value == 2 ** (m - 1)
        assert al.value == a and al.provenance is Provenance.SolverDerived and al.exact
    _, al = family_known_values(FamilySpec.make("no", n=12, q=2, epsilon=1))
    assert not al.exact and "unverified" in al.note


def test_known_values_respect_bounds():
    specs = sweep_specs(max_nu=2000) + [
        parse_spec(t) for t in ("e6 q=2", "vd55 q=2", "alt m=1 q=2", "nu m=9", "no n=14 q=2 epsilon=1")
    ]
    for s in specs:
        p = params_for(s)
        rep = bound_report(p)
        om, al = family_known_values(s)
        if om is not None:
            assert om.value <= rep.delsarte, s
        if al is not None:
            assert al.value <= rep.hoffman, s
        if om is not None and al is not None and om.exact and al.exact:
            assert om.value * al.value <= p.nu, s


def test_catalog_errors():
    with pytest.raises(InvalidParams):
        FamilySpec.make("row", table_row=54)
