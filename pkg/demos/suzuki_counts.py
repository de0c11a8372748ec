"""Points and fixpoints on the Suzuki varieties.

Run: python demos/suzuki_counts.py   (about half a minute)
"""
from quasiengel import varietylab as vl

for n in (3, 5):
    rec = vl.suzuki_equation_count(n)
    print("#V_%d = %d (%s, %.1fs)" % (n, rec.count, rec.method, rec.elapsed))

table = vl.read_table3()
for n in range(1, 8):
    rec = vl.fixpoint_count(n)
    print("N_%d = %-4d expected %-4d %.1fs" % (n, rec.count, table[n], rec.elapsed))

print("literal alpha iteration agrees for n=5:", vl.fixpoint_count_literal(5) == 20)

for r in vl.verify_all_witnesses():
    print("witness p=%-2d valid=%s %s" % (r["p"], r["valid"], "; ".join(r["resolved"])))

ok, info = vl.v_equals_w_check(2)
print("V = W over GF(4):", ok, info)
ok, info = vl.v_equals_w_check(1, broken=True)
print("a broken twin is caught:", not ok, info)

co = vl.zeta_series([table[n] for n in range(1, 8)], 7)
print("zeta:", vl.series_to_text(co))
print("Lefschetz bound positive from odd n =", vl.lefschetz_threshold(675, 2 ** 22))
print("chi(W) estimate:", vl.euler_bound_report().as_dict())
