import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quasiengel import liecheck as lc


def test_construction_and_errors():
    lc.abelian(3, 7)
    lc.sl2(7)
    with pytest.raises(lc.LieAlgebraError, match=r"\[e0, e0\]"):
        lc.lie_make({(0, 0): {1: 1}}, 7)
    # [e0,e1] = e2, [e1,e2] = e0, [e0,e2] = e0 breaks Jacobi
    with pytest.raises(lc.LieAlgebraError, match="Jacobi"):
        lc.lie_make({(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {0: 1}}, 7)


def test_v_sequence_examples():
    A = lc.abelian(2, 7)
    assert lc.v_identity_index(A) == 1
    N = lc.nonabelian2(7)
    assert lc.v_identity_index(N) == 2
    S = lc.sl2(7)
    rep = lc.v_identity_check(S, 4)
    assert rep.index is None and rep.mode == "exhaustive" and rep.pairs == 7 ** 6
    V = lc.all_vectors(S)
    x = np.repeat(V, len(V), axis=0)
    y = np.tile(V, (len(V), 1))
    assert lc.v_sequence_eval(S, x, y, 3).any()


def test_solvability():
    assert lc.lie_solvable(lc.abelian(3, 7)) == 1
    assert lc.lie_solvable(lc.heisenberg(7)) == 2
    assert lc.lie_solvable(lc.borel_sl3(7)) in (2, 3)
    assert lc.lie_solvable(lc.sl2(7)) is None


@pytest.mark.parametrize("make", [lc.nonabelian2, lc.heisenberg, lc.borel_sl3])
def test_solvable_examples_have_v_index(make):
    L = make(7)
    d = lc.lie_solvable(L)
    idx = lc.v_identity_index(L, 6)
    assert idx is not None and idx <= d


@pytest.mark.parametrize("n", [1, 2, 3])
def test_v_lies_in_derived_algebra(n):
    assert lc.v_in_derived(lc.borel_sl3(7), n)


@settings(max_examples=50)
@given(st.lists(st.integers(0, 6), min_size=3, max_size=3),
       st.lists(st.integers(0, 6), min_size=3, max_size=3),
       st.lists(st.integers(0, 6), min_size=3, max_size=3))
def test_bracket_is_bilinear_and_alternating(x, y, z):
    L = lc.sl2(7)
    x, y, z = (np.array(v) for v in (x, y, z))
    assert not L.bracket(x, x).any()
    assert ((L.bracket(x + y, z) - L.bracket(x, z) - L.bracket(y, z)) % 7 == 0).all()


def test_characteristic_guard():
    assert not lc.sl2(5).theorem_applies
    assert lc.sl2(7).theorem_applies


def test_parse_constants():
    d = lc.parse_constants("# sl2\n0 1 : 2 1\n2 0 : 0 2\n2 1 : 1 -2\n")
    L = lc.lie_make(d, 7)
    assert (L.C == lc.sl2(7).C).all()
