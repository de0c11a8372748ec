from hypothesis import given, settings, strategies as st

from quasiengel.freewords import build_sequence, quasi_engel
from quasiengel.gf import field_make, gf
from quasiengel.matgroups import (MatrixElement, projective_eq, psl2_gens, psl33_pair,
                                  suzuki_xy, word_eval)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
def test_psl2_generators_have_determinant_one(t, b, c):
    F = gf(11)
    x, y = psl2_gens(F(t), F(b), F(c))
    assert x.det() == F.one and y.det() == F.one
    assert (x * x.inverse()).is_identity()


def test_projective_equality_ignores_scalars():
    F = gf(7)
    x, _ = psl2_gens(F(3), F(1), F(2))
    assert projective_eq(x, x.scale(6))
    assert x.scale(6).is_projective_identity() is False
    assert MatrixElement.identity(F, 2).scale(6).is_projective_identity()


def test_psl33_pair_solves_the_equation():
    x, y = psl33_pair()
    spec = quasi_engel()
    u1 = word_eval(build_sequence(spec, 1), x, y)
    u2 = word_eval(build_sequence(spec, 2), x, y)
    assert projective_eq(u1, u2)
    assert not u1.is_projective_identity()


def test_suzuki_generators_are_invertible():
    F = field_make(2, 3)
    x, y = suzuki_xy(F(1), F(2), F(3), F(5))
    assert (x * x.inverse()).is_identity()
    assert (y * y.inverse()).is_identity()
