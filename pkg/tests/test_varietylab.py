from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quasiengel import varietylab as vl
from quasiengel.gf import field_make, gf


def test_plane_curve_small_fields():
    assert [vl.plane_curve_count(q).count for q in (2, 4, 8, 5, 7)] == [2, 6, 11, 11, 5]


@pytest.mark.parametrize("q", [2, 4, 8, 16, 32, 64, 128, 256, 512, 3, 9, 27, 81, 5, 7, 11, 13, 101])
def test_root_count_matches_brute_force(q):
    P, _ = vl.plane_curve()
    F = gf(q)
    assert vl.count_plane_curve(P, F, "brute").count == vl.count_plane_curve(P, F, "root-count").count


def test_psl2_witness_examples():
    assert vl.verify_psl2_witness(5, (1, 2, 2))["valid"]
    assert vl.verify_psl2_witness(593, (1, 240, 5))["valid"]
    assert not vl.verify_psl2_witness(593, (1, 241, 5))["valid"]
    F = gf(4)
    a = F.elem(next(F.primitive_elements()))
    assert vl.verify_psl2_witness(4, (a, F(0), F(1)), F=F)["valid"]


def test_hasse_weil():
    assert vl.hw_threshold(12, 10) == 594
    assert vl.hasse_weil(593, 12, 10).positive is False
    assert vl.hasse_weil(594, 12, 10).positive is True
    assert vl.hw_threshold(8, 10, prime_power_only=True) == 277
    rep = vl.hasse_weil(17, 0, 1)
    assert rep.value == 17 and rep.positive


@settings(max_examples=60)
@given(st.integers(1, 10 ** 6), st.integers(0, 20), st.integers(0, 30))
def test_hasse_weil_exact_agrees_with_float_away_from_ties(q, pa, d):
    rep = vl.hasse_weil(q, pa, d)
    if abs(rep.value) > 1e-6:
        assert rep.positive == (rep.value > 0)


def test_suzuki_v3_and_reconciliation_with_n3():
    assert vl.suzuki_equation_count(3).count == 13
    assert vl.suzuki_equation_count(3, method="ideal").count == 13
    IV, J, _ = vl.suzuki_systems()
    F = field_make(2, 3)
    pts = vl.zeros_of_system(IV, F, "abcd", vl._theta_derived(3))
    cols = {v: pts[:, i] for i, v in enumerate(vl.SUZUKI_VARS)}
    on = np.ones(len(pts), dtype=bool)
    for f in J:
        on &= vl.eval_poly_np(f, cols, F) == 0
    assert on.sum() == 12
    assert not pts[~on].any()  # the one extra point is the origin


def test_alpha():
    F = field_make(2, 5)
    zero = tuple([F.zero] * 8)
    assert vl.alpha_apply(zero) == zero
    rng = np.random.default_rng(3)
    for _ in range(100):
        p = tuple(F.elem(int(c)) for c in rng.integers(0, 32, 8))
        assert vl.alpha_power(p, 2) == tuple(c * c for c in p)


def test_fixpoint_counts_small():
    assert [vl.fixpoint_count(n).count for n in range(1, 6)] == [0, 8, 12, 16, 20]


@pytest.mark.parametrize("n", [1, 3, 5])
def test_fixpoints_theta_relations_match_literal_alpha(n):
    assert vl.fixpoint_count_literal(n) == vl.fixpoint_count(n).count


def test_fixpoint_witness_and_perturbation():
    w = next(e for e in vl.fixpoint_witnesses() if e["p"] == 3)
    coords = [w["point"][v] for v in vl.SUZUKI_VARS]
    F = field_make(2, 3, w["modulus"])
    assert vl.verify_fixpoint(3, F, [_el(F, c) for c in coords])
    bad = list(coords)
    bad[1] = "t^5"
    assert not vl.verify_fixpoint(3, F, [_el(F, c) for c in bad])
    assert vl.verify_witness_entry(next(e for e in vl.fixpoint_witnesses() if e["p"] == 5))["valid"]


def _el(F, text):
    from quasiengel.gf import parse_element
    return parse_element(text, F)


def test_v_equals_w_and_negative_control():
    ok, info = vl.v_equals_w_check(1)
    assert ok and info["V"] == 9
    ok2, _ = vl.v_equals_w_check(2)
    assert ok2
    bad, info = vl.v_equals_w_check(1, broken=True)
    assert not bad and info["W"] < info["V"]


def test_singular_locus_fixfree_small():
    ok, counts = vl.singular_locus_fixfree(3)
    assert ok and set(counts) == {"S1", "S2", "S3", "S4", "S5", "S6"}


def test_lefschetz():
    assert vl.lefschetz_threshold(675, 2 ** 22) <= 48
    assert all(vl.lefschetz_positive(n, 675, 2 ** 22) for n in range(49, 400, 2))
    assert all(vl.lefschetz_positive(n, 0, 0) for n in range(1, 50))


@settings(max_examples=60)
@given(st.integers(1, 200), st.integers(0, 2000), st.integers(0, 10 ** 6))
def test_lefschetz_exact_agrees_with_float(n, b1, b2):
    val = 2.0 ** n - b1 * 2.0 ** (0.75 * n) - b2 * 2.0 ** (0.5 * n)
    if abs(val) > 1e-6 * 2.0 ** n:
        assert vl.lefschetz_positive(n, b1, b2) == (val > 0)


def test_adolphson_sperber():
    assert vl.adolphson_sperber(3, 3, 7) == 8 * vl.complete_homogeneous(3, [1, 8, 8, 8]) == 44232
    assert vl.adolphson_sperber(3, 3, 3) == 5992
    assert vl.adolphson_sperber(3, 3, 5) == 19160
    rep = vl.euler_bound_report()
    assert rep.value == 4 * vl.complete_homogeneous(4, [1, 15, 15])


def test_zeta_series():
    assert vl.zeta_series([0] * 5, 5) == [1, 0, 0, 0, 0, 0]
    co = vl.zeta_series([0, 8, 12, 16, 20, 56, 140], 7)
    assert co == [1, 0, -4, -4, 4, 12, 4, -20]
    assert co[4] == -4 + 8
    assert all(isinstance(c, Fraction) for c in co)


@settings(max_examples=30)
@given(st.lists(st.integers(0, 50), min_size=1, max_size=8))
def test_zeta_series_inverts_log_derivative(counts):
    # Z = exp(-sum N_n T^n / n) satisfies T Z' = -Z * sum N_n T^n
    co = vl.zeta_series(counts, len(counts))
    for m in range(1, len(counts) + 1):
        assert m * co[m] == -sum(counts[n - 1] * co[m - n] for n in range(1, m + 1))


def test_genus():
    assert vl.genus_from_singularities(7, [1, 1, 1, 4]) == 8
    assert vl.genus_from_singularities(7, [2, 1, 1, 5]) == 6
    assert vl.genus_from_singularities(3, []) == 1


def test_appendix_identities_and_boundary():
    assert all(vl.substitution_identities())
    ok, info = vl.projective_boundary_check()
    assert ok and info["identity"]
    assert (1, 1) in info["points"][2]
