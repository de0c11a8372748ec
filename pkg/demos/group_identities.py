"""Word identities in finite groups.

Run: python demos/group_identities.py
"""
from quasiengel import groupkit as gk
from quasiengel.freewords import W0

print("%-10s %5s %9s %10s %8s" % ("group", "order", "solvable", "qe-index", "nilpot."))
for G in gk.corpus_groups():
    print("%-10s %5d %9s %10s %8s" % (G.name, G.order, gk.solvability_class(G),
                                       gk.identity_index(G), gk.nilpotency_class(G)))

S4 = gk.symmetric(4)
g = gk.relation_graph(S4, "solvability", 4)
print("S4 solvability graph complete:", g.is_complete())
A5 = next(G for G in gk.corpus_groups() if G.name == "A5")
g = gk.relation_graph(A5, "solvability", 6)
print("A5 solvability graph: %d edges on %d vertices" % (len(g.edges), len(g.vertices)))
print(gk.zorn_variant_check(gk.dihedral(4), W0))
