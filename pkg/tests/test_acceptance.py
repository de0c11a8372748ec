"""The twelve acceptance criteria, one test each.

A summary line per criterion is printed at the end of the pytest run.
"""
import time
from contextlib import contextmanager

import pytest

from quasiengel import groupkit as gk
from quasiengel import polycore as pc
from quasiengel import varietylab as vl
from quasiengel.freewords import W0, build_sequence, quasi_engel
from quasiengel.matgroups import projective_eq, psl33_pair, word_eval

TABLE3 = {1: 0, 2: 8, 3: 12, 4: 16, 5: 20, 6: 56, 7: 140}
WITNESS_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


@contextmanager
def within(seconds):
    t0 = time.time()
    yield
    elapsed = time.time() - t0
    assert elapsed < seconds, "took %.1fs, limit %ds" % (elapsed, seconds)


def check_all(checks: dict):
    failed = [k for k, ok in checks.items() if not ok]
    assert not failed, "failed: " + ", ".join(failed)


@pytest.mark.criterion(1, "ideal regeneration")
def test_c01_ideal_regeneration():
    with within(60):
        S = pc.read_system("psl2_I.txt")
        I = S.vector("I")
        gens = pc.matrix_equation_ideal(*pc.psl2_symbolic(S.ring))
        SV = pc.read_system("suzuki_IV.txt")
        IV = SV.vector("I")
        gv = [g for g in pc.matrix_equation_ideal(*pc.suzuki_symbolic(SV.ring)) if not g.is_zero()]
        check_all({
            "I over Z up to sign": pc.same_up_to_sign(gens, I),
            "16 generators of I_V": len(IV) == 16 and len(gv) == 16,
            "I_V exact over GF(2)": set(map(str, gv)) == set(map(str, IV)),
        })


@pytest.mark.criterion(2, "Groebner certificates")
def test_c02_groebner_certificates():
    with within(300):
        checks = {}
        for p in (0, 2, 3, 5, 7):
            S = pc.read_system("psl2_J.txt", p)
            checks["J Groebner char %d" % p] = pc.is_groebner(S.vector("J"), S.order)
        for a, b, m in [("I", "J", "M"), ("J", "I", "N"), ("J", "K", "A"), ("K", "J", "B")]:
            L = pc.read_system("psl2_lift_%s%s.txt" % (a, b))
            ring = L.ring
            src = [f.change_ring(ring) for f in pc.read_system("psl2_%s.txt" % a).vector(a)]
            dst = [f.change_ring(ring) for f in pc.read_system("psl2_%s.txt" % b).vector(b)]
            checks["lift %s->%s" % (a, b)] = pc.lift_verify(src, dst, L.matrix(m))
        for p in (7, 11):
            S = pc.read_system("psl2_I.txt", p)
            I = S.vector("I")
            t = S.ring.var("t")
            Q = pc.ideal_quotient(I, t * (t * t - 2 * t - 1), S.order)
            checks["I:h = I over GF(%d)" % p] = pc.ideals_equal(Q, I, S.order)
        check_all(checks)


@pytest.mark.criterion(3, "Hilbert data and Hasse-Weil threshold")
def test_c03_hilbert():
    checks = {}
    for p in (0, 2, 3, 5):
        S = pc.read_system("psl2_K.txt", p)
        d, pa, H = pc.curve_hilbert(S.vector("K"), S.order)
        checks["H = 10t - 11 char %d" % p] = (tuple(H.coefficients) == (-11, 10) and d == 10
                                              and pa == 12)
    checks["hw_threshold(12, 10) = 594"] = vl.hw_threshold(12, 10) == 594
    check_all(checks)


@pytest.mark.criterion(4, "PSL(2) witness tables")
def test_c04_psl2_witnesses():
    with within(60):
        t1 = vl.verify_table1()
        t2 = vl.verify_table2()
        qs = {r["q"] for r in t1 + t2}
        check_all({
            "table 1 rows": len(t1) > 0 and all(r["valid"] for r in t1),
            "table 2 rows": len(t2) == 12 and all(r["valid"] for r in t2),
            "primes 5..593": {5, 593} <= qs,
            "q = 2^2..2^9, 3^2..3^5": {2 ** k for k in range(2, 10)} | {3 ** k for k in range(2, 6)} <= qs,
        })


@pytest.mark.criterion(5, "PSL(3,3) solution and order")
def test_c05_psl33():
    with within(60):
        x, y = psl33_pair()
        spec = quasi_engel()
        u1 = word_eval(build_sequence(spec, 1), x, y)
        u2 = word_eval(build_sequence(spec, 2), x, y)
        G = gk.generate_group([x, y], cap=6000, projective=True)
        check_all({"u1 = u2": projective_eq(u1, u2), "u1 != 1": not u1.is_projective_identity(),
                   "order 5616": G.order == 5616})


@pytest.mark.criterion(6, "Suzuki counts")
def test_c06_suzuki_counts(record_property):
    checks = {}
    with within(60):
        v3 = vl.suzuki_equation_count(3).count
        v5 = vl.suzuki_equation_count(5).count
    record_property("V3", v3)
    record_property("V5", v5)
    checks["#V3 = 13"] = v3 == 13
    checks["#V5 = 40"] = v5 == 40
    asset = vl.read_table3()
    with within(30 * 60):
        for n in range(1, 8):
            N = vl.fixpoint_count(n).count
            checks["N%d" % n] = N == TABLE3[n] == asset[n]
    check_all(checks)


@pytest.mark.criterion(7, "Suzuki fixpoint witnesses")
def test_c07_fixpoint_witnesses():
    with within(60):
        reps = vl.verify_all_witnesses()
        check_all({"primes listed": sorted(r["p"] for r in reps) == WITNESS_PRIMES,
                   **{"p=%d" % r["p"]: r["valid"] for r in reps}})


@pytest.mark.criterion(8, "V = W and fixpoint-free singular locus")
def test_c08_structure():
    with within(600):
        checks = {}
        for k in (1, 2, 3):
            checks["V = W, k=%d" % k] = vl.v_equals_w_check(k)[0]
        for n in (1, 3, 5, 7):
            checks["singular n=%d" % n] = vl.singular_locus_fixfree(n)[0]
        check_all(checks)


@pytest.mark.criterion(9, "bounds")
def test_c09_bounds(record_property):
    rep = vl.euler_bound_report()
    # reported, not asserted: the two figures disagree
    record_property("4*h4(1,15,15)", rep.value)
    record_property("published", rep.notes["published"])
    check_all({
        "AS(3,3,7) = 44232": vl.adolphson_sperber(3, 3, 7) == 44232,
        "AS(3,3,3) = 5992": vl.adolphson_sperber(3, 3, 3) == 5992,
        "AS(3,3,5) = 19160": vl.adolphson_sperber(3, 3, 5) == 19160,
        "Lefschetz positive for odd n > 48": all(vl.lefschetz_positive(n, 675, 2 ** 22)
                                                 for n in range(49, 2001, 2)),
        "threshold <= 49": vl.lefschetz_threshold(675, 2 ** 22) <= 49,
    })


@pytest.mark.criterion(10, "zeta series")
def test_c10_zeta():
    co = vl.zeta_series([TABLE3[n] for n in range(1, 8)], 7)
    assert co == [1, 0, -4, -4, 4, 12, 4, -20]
    assert vl.series_to_text(co) == "1-4T^2-4T^3+4T^4+12T^5+4T^6-20T^7"
    csv_co = {int(r["power"]): int(r["coefficient"]) for r in vl.read_table("zeta_series.csv")}
    assert all(co[k] == v for k, v in csv_co.items() if k <= 7)


@pytest.mark.criterion(11, "plane curve tables and genus")
def test_c11_appendix():
    with within(600):
        t5 = vl.compare_table5({2: 10, 3: 6})
        t6 = vl.compare_table6(251)
        ok_b, _ = vl.projective_boundary_check()
        check_all({
            "table 5": len(t5) == 16 and all(r["ok"] for r in t5),
            "table 6": len(t6) > 0 and all(r["ok"] for r in t6),
            "A(523) = 474": vl.plane_curve_count(523).count == 474,
            "substitution identities": all(vl.substitution_identities()),
            "boundary": ok_b,
            "genus 8": vl.genus_from_singularities(7, [1, 1, 1, 4]) == 8,
            "genus 6": vl.genus_from_singularities(7, [2, 1, 1, 5]) == 6,
        })


@pytest.mark.criterion(12, "group corpus properties")
def test_c12_groups():
    with within(600):
        checks = {}
        nil = non = 0
        for G in gk.corpus_groups():
            sol = gk.solvability_class(G)
            idx = gk.identity_index(G, n_max=8)
            checks["%s iff" % G.name] = (idx is None) == (sol is None)
            checks["%s monotone" % G.name] = gk.pointwise_monotone(G, n_max=6)
            z = gk.zorn_variant_check(G, W0)
            checks["%s zorn" % G.name] = z["consistent"]
            if z["nilpotency_class"] is None:
                non += 1
            else:
                nil += 1
        checks["corpus has nilpotent and non-nilpotent members"] = nil > 0 and non > 0
        check_all(checks)
