"""Solutions of u_1 = u_2 in PSL(2, q) from the witness tables.

Run: python demos/psl2_witnesses.py
"""
from collections import Counter

from quasiengel import varietylab as vl

print(vl.verify_psl2_witness(5, (1, 2, 2)))

rows = vl.verify_table1()
print(len(rows), "prime rows, all valid:", all(r["valid"] for r in rows))
print("coordinate orders that validated:", Counter(r["order"] for r in rows))

for r in vl.verify_table2():
    print("q=%-4d valid=%s order=%s generator=%s" % (r["q"], r["valid"], r["order"], r["generator"]))

# the curve has arithmetic genus 12 and degree 10, so points exist from here on
print("Hasse-Weil threshold:", vl.hw_threshold(12, 10))
print("at q=593:", vl.hasse_weil(593, 12, 10).as_dict())
