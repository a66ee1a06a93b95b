import itertools
from math import comb

import numpy as np
import pytest

from srgsep.designs import (
    coset_graph,
    golay_binary_extended,
    golay_ternary,
    weight_one_vectors,
    witt_s_3_6_22,
)
from srgsep.errors import WrongCode
from srgsep.graph import verify_srg


def test_binary_golay():
    c = golay_binary_extended()
    assert (c.length, c.dimension) == (24, 12)
    words = c.codewords()
    assert len({tuple(w) for w in words}) == 4096
    assert c.weight_distribution() == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    assert c.minimum_weight() == 8


def test_ternary_golay_perfect():
    c = golay_ternary()
    assert (c.length, c.dimension) == (11, 6)
    words = c.codewords()
    assert len({tuple(w) for w in words}) == 729
    assert c.minimum_weight() == 5
    assert 729 * (1 + 22 + 220) == 3**11
    # radius-2 balls around codewords are disjoint: all syndromes of weight <= 2 errors distinct
    errs = [np.zeros(11, dtype=np.int64)]
    for i, a in itertools.product(range(11), (1, 2)):
        e = np.zeros(11, dtype=np.int64)
        e[i] = a
        errs.append(e)
    for (i, a), (j, b) in itertools.combinations(itertools.product(range(11), (1, 2)), 2):
        if i != j:
            e = np.zeros(11, dtype=np.int64)
            e[i], e[j] = a, b
            errs.append(e)
    assert len(errs) == 243
    syn = c.syndrome(np.array(errs))
    assert len({tuple(s) for s in syn}) == 243


def test_witt_design():
    d = witt_s_3_6_22()
    assert d.v == 22 and d.k == 6 and len(d.blocks) == 77
    assert d.t_coverage(3) == {1: comb(22, 3)}
    assert d.replication() == [21] * 22
    # two blocks meet in 0 or 2 points
    sizes = {len(set(a) & set(b)) for a, b in itertools.combinations(d.blocks, 2)}
    assert sizes == {0, 2}


def test_bvls_coset_graph():
    c = golay_ternary()
    g = coset_graph(c)
    assert verify_srg(g).astuple() == (243, 22, 1, 2)
    # zero coset is vertex 0; its neighbours are the weight-1 syndromes
    unit_syn = c.syndrome(weight_one_vectors(11, 3))
    w = 3 ** np.arange(unit_syn.shape[1] - 1, -1, -1)
    expected = sorted(set((unit_syn @ w).tolist()))
    assert sorted(np.flatnonzero(g.adjacency[0]).tolist()) == expected
    assert len(expected) == 22


def test_weight_one_vectors():
    v = weight_one_vectors(3, 3)
    assert v.shape == (6, 3)
    assert all(np.count_nonzero(r) == 1 for r in v)
    assert [tuple(r) for r in v] == sorted(tuple(r) for r in v)


def test_coset_graph_rejects_low_distance():
    from srgsep.designs import LinearCode
    from srgsep.gf import make_field

    rep = LinearCode(make_field(3), 2, 1, np.array([[1, 1]]), None, "repetition")
    with pytest.raises(WrongCode):
        coset_graph(rep)
