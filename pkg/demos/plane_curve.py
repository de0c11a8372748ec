"""Point counts of the auxiliary plane curve.

Run: python demos/plane_curve.py
"""
from quasiengel import varietylab as vl
from quasiengel.gf import gf

P, _ = vl.plane_curve()
for q in (2, 4, 8, 16, 3, 9, 5, 7):
    a = vl.count_plane_curve(P, gf(q), "brute").count
    b = vl.count_plane_curve(P, gf(q), "root-count").count
    print("q=%-3d brute=%-3d root-count=%d" % (q, a, b))

print("A(523) =", vl.plane_curve_count(523).count)
bad = [r for r in vl.compare_table5() + vl.compare_table6() if not r["ok"]]
print("table mismatches:", bad)

print("substitution identities:", vl.substitution_identities())
ok, info = vl.projective_boundary_check()
print("points at infinity:", ok, info["points"])
print("genus from delta invariants:", vl.genus_from_singularities(7, [1, 1, 1, 4]),
      vl.genus_from_singularities(7, [2, 1, 1, 5]))
