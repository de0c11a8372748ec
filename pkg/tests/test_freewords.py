import numpy as np
import pytest
from hypothesis import given, strategies as st

from quasiengel.freewords import (FreeWord, W0, build_sequence, engel, enumerate_initial_words,
                                  equation_normalize, quasi_engel, sequence_lengths,
                                  short_equation_sides)
from quasiengel.gf import gf
from quasiengel.matgroups import MatrixElement, projective_eq, word_eval

letters = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12)


@given(letters)
def test_reduction_is_idempotent_and_inverse_cancels(ls):
    w = FreeWord(ls)
    assert FreeWord(w.letters) == w
    assert all(a != -b for a, b in zip(w.letters, w.letters[1:]))
    assert (w * ~w).is_identity()


@given(letters, letters, letters)
def test_product_is_associative(a, b, c):
    a, b, c = FreeWord(a), FreeWord(b), FreeWord(c)
    assert (a * b) * c == a * (b * c)


@given(letters)
def test_parse_round_trip(ls):
    w = FreeWord(ls)
    assert FreeWord.parse(str(w)) == w


def test_quasi_engel_second_term():
    spec = quasi_engel()
    assert build_sequence(spec, 1) == W0 == FreeWord.parse("x^-2 y^-1 x")
    u2 = build_sequence(spec, 2)
    assert u2 == FreeWord.parse("x^-3 y^-1 x^2 y x^-1 y x^2 y^-1")
    assert len(u2) == 12
    assert sequence_lengths(spec, 2) == [4, 12]
    with pytest.raises(ValueError):
        build_sequence(spec, 0)


def test_engel_default_is_commutator_y_x():
    e = engel()
    assert build_sequence(e, 1) == FreeWord.parse("y x y^-1 x^-1")
    assert build_sequence(e, 2) == build_sequence(e, 1) * FreeWord.parse("x") \
        * ~build_sequence(e, 1) * FreeWord.parse("x^-1")


def test_enumerate_initial_words():
    one = enumerate_initial_words(1)
    assert {str(w) for w in one} == {"x", "x^-1", "y", "y^-1"}
    two = enumerate_initial_words(2)
    assert len(two) == 16 and sum(len(w) == 2 for w in two) == 12
    five = enumerate_initial_words(5)
    assert len(set(five)) == len(five)
    assert FreeWord.parse("x^-1 y x y^-1 x") in five and W0 in five
    assert five == enumerate_initial_words(5)


def test_equation_normalize():
    with pytest.raises(ValueError):
        equation_normalize(1, 1)
    e = equation_normalize(1, 2)
    assert e == build_sequence(quasi_engel(), 1) * ~build_sequence(quasi_engel(), 2)


def test_short_form_matches_equation_in_psl27():
    """Both forms of u1 = u2 agree on 1000 random pairs of PSL(2,7) elements."""
    F = gf(7)
    rng = np.random.default_rng(7)
    L, R = short_equation_sides()
    e12 = equation_normalize(1, 2)
    one = MatrixElement.identity(F, 2)
    seen = 0
    while seen < 1000:
        a, b, c, d, e, f, g, h = (int(v) for v in rng.integers(0, 7, 8))
        X = MatrixElement.from_rows(F, [[F(a), F(b)], [F(c), F(d)]])
        Y = MatrixElement.from_rows(F, [[F(e), F(f)], [F(g), F(h)]])
        if X.det() != F.one or Y.det() != F.one:
            continue
        seen += 1
        short = projective_eq(word_eval(L, X, Y), word_eval(R, X, Y))
        full = projective_eq(word_eval(e12, X, Y), one)
        assert short == full
