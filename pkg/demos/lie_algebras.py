"""The bracket sequence v_n on small Lie algebras over GF(p).

Run: python demos/lie_algebras.py
"""
from quasiengel import liecheck as lc

for L in (lc.abelian(2, 7), lc.nonabelian2(7), lc.heisenberg(7), lc.borel_sl3(7), lc.sl2(7)):
    rep = lc.v_identity_check(L, 4)
    print("%-10s dim %d  derived series %-12s v-index %-5s (%s, %d pairs)" % (
        L.name, L.dim, lc.derived_series(L), rep.index, rep.mode, rep.pairs))

try:
    lc.lie_make({(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {0: 1}}, 7)
except lc.LieAlgebraError as e:
    print("rejected:", e)
