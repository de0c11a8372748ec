import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quasiengel.gf import (default_modulus, element_to_text, field_make, frob_pow, gf,
                           is_irreducible, is_prime, parse_element, prime_power, theta_map,
                           upoly_distinct_roots)

FIELDS = [gf(q) for q in (2, 3, 4, 8, 9, 25, 32, 49, 81, 128)]


def codes(F):
    return st.integers(0, F.q - 1).map(F.elem)


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: "GF(%d)" % F.q)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(codes(F)) for _ in range(3))
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == F.zero
    if a:
        assert a * a.inv() == F.one
        assert a ** (F.q - 1) == F.one


def test_default_modulus_is_least_irreducible():
    assert default_modulus(2, 3) == (1, 1, 0, 1)
    for p, k in [(2, 5), (3, 4), (5, 2), (2, 8)]:
        m = default_modulus(p, k)
        assert len(m) == k + 1 and m[-1] == 1
        assert is_irreducible(m, p)


def test_prime_helpers():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_power(243) == (3, 5)
    assert prime_power(12) is None


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_theta_squared_is_frobenius(n):
    F = field_make(2, n)
    for code in range(0, F.q, max(1, F.q // 40)):
        a = F.elem(code)
        assert theta_map(theta_map(a)) == a * a
        assert frob_pow(a, n) == a


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 11 - 1))
def test_text_round_trip_gf2048(code):
    F = field_make(2, 11)
    a = F.elem(code)
    assert parse_element(element_to_text(a), F) == a
    assert parse_element(element_to_text(a, hexform=True), F) == a


def test_parse_reduces_high_powers():
    F = field_make(2, 5, (1, 0, 1, 0, 0, 1))
    t = F.gen
    assert parse_element("t^22", F) == t ** 22
    assert parse_element("t^4+t^2+1", F) == t ** 4 + t ** 2 + F.one


@pytest.mark.parametrize("q", [8, 9, 27, 64])
def test_tables_agree_with_scalar_arithmetic(q):
    F = gf(q)
    T = F.tables()
    a = np.repeat(np.arange(q), q)
    b = np.tile(np.arange(q), q)
    ref_mul = np.array([F.mul(int(x), int(y)) for x, y in zip(a, b)])
    ref_add = np.array([F.add(int(x), int(y)) for x, y in zip(a, b)])
    assert (T.mul(a, b) == ref_mul).all()
    assert (T.add(a, b) == ref_add).all()


def test_distinct_roots_counts_roots_in_field():
    F = gf(7)
    # (X - 1)(X - 2)(X - 2) = X^3 - 5X^2 + 8X - 4
    assert upoly_distinct_roots([(-4) % 7, 8 % 7, (-5) % 7, 1], F) == 2
    assert upoly_distinct_roots([1, 0, 1], F) == 0  # X^2 + 1 has no root mod 7
