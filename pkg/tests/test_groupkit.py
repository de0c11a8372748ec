import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quasiengel import groupkit as gk
from quasiengel.freewords import W0
from quasiengel.gf import gf
from quasiengel.matgroups import psl2_gens, psl33_pair

CORPUS = {G.name: G for G in gk.corpus_groups()}

perms5 = st.permutations(range(5)).map(tuple)


def test_trivial_and_small_orders():
    assert gk.generate_group([tuple(range(3))]).order == 1
    assert gk.symmetric(4).order == 24 and gk.dihedral(5).order == 10


def test_psl_orders():
    F = gf(5)
    x, y = psl2_gens(F(2), F(2), F(1))
    assert gk.generate_group([x, y], projective=True).order == 60
    assert gk.generate_group(list(psl33_pair()), cap=6000, projective=True).order == 5616


def test_table_cap():
    G = gk.generate_group(list(psl33_pair()), cap=6000, projective=True)
    with pytest.raises(gk.CapExceeded):
        G.table


@settings(max_examples=30, deadline=None)
@given(st.lists(perms5, min_size=1, max_size=3))
def test_cayley_table_is_a_group_law(gens):
    G = gk.generate_group(gens)
    t = G.table
    n = G.order
    assert (np.sort(t, axis=1) == np.arange(n)).all()
    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, n, (3, 200))
    assert (t[t[a, b], c] == t[a, t[b, c]]).all()
    assert (t[np.arange(n), G.inverse] == 0).all()
    for i, e in enumerate(G.elements[:20]):
        for j, f in enumerate(G.elements[:20]):
            assert G.elements[t[i, j]] == gk.perm_mul(e, f)


@settings(max_examples=30, deadline=None)
@given(st.lists(perms5, min_size=1, max_size=3))
def test_quasi_engel_index_iff_solvable(gens):
    G = gk.generate_group(gens)
    sol = gk.solvability_class(G)
    idx = gk.identity_index(G, n_max=8)
    assert (idx is None) == (sol is None)
    if sol is not None:
        assert idx <= sol + 1
    assert gk.pointwise_monotone(G, n_max=5)


def test_solvability_classes():
    assert gk.solvability_class(gk.cyclic(6)) == 1
    assert gk.solvability_class(gk.symmetric(3)) == 2
    assert gk.solvability_class(CORPUS["A5"]) is None
    assert gk.nilpotency_class(CORPUS["D4"]) == 2


def test_identity_index_examples():
    assert gk.identity_index(gk.cyclic(2)) == 2
    assert gk.identity_index(gk.symmetric(3)) == 3
    assert gk.identity_index(CORPUS["A5"], n_max=4) is None
    assert gk.identity_index(gk.cyclic(1)) == 1


def test_relation_graphs():
    assert gk.relation_graph(gk.cyclic(6), "solvability").is_complete()
    S4 = gk.symmetric(4)
    assert gk.relation_graph(S4, "solvability", gk.solvability_class(S4) + 1).is_complete()
    Q8 = CORPUS["Q8"]
    g = gk.relation_graph(Q8, "commuting")
    t = Q8.table
    expect = {(i, j) for i in range(1, 8) for j in range(i + 1, 8) if t[i, j] == t[j, i]}
    assert set(g.edges) == expect
    assert '"kind": "commuting"' in g.to_json()
    assert g.to_csv().startswith("source,target")


def test_zorn_variant():
    D4 = CORPUS["D4"]
    r = gk.zorn_variant_check(D4, W0)
    assert r["nilpotency_class"] is not None and r["engel_index"] is not None
    r = gk.zorn_variant_check(gk.symmetric(3), W0)
    assert r["nilpotency_class"] is None and r["engel_index"] is None


def test_corpus_covers_required_groups():
    for name in ("C6", "D4", "S3", "S4", "A4", "Q8", "A5", "SL(2,4)"):
        assert name in CORPUS
    assert all(G.order <= 400 for G in CORPUS.values())
