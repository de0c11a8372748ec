"""Polynomial systems for the PSL(2) equation and their certificates.

Run: python demos/groebner_certificates.py
"""
from quasiengel import polycore as pc

# rebuild the ideal of u_1 = u_2 at x = [[t,-1],[1,0]], y = [[1,b],[c,1+bc]]
S = pc.read_system("psl2_I.txt")
I = S.vector("I")
gens = pc.matrix_equation_ideal(*pc.psl2_symbolic(S.ring))
print("regenerated generators match the asset up to sign:", pc.same_up_to_sign(gens, I))

# the shipped basis J is a lex Groebner basis over Q and in small characteristics
for p in (0, 2, 3, 5, 7):
    T = pc.read_system("psl2_J.txt", p)
    print("J Groebner in characteristic %d:" % p, pc.is_groebner(T.vector("J"), T.order))

# I and J generate the same ideal: each side is an explicit combination of the other
L = pc.read_system("psl2_lift_IJ.txt")
J = pc.read_system("psl2_J.txt").vector("J")
print("J = M^T I:", pc.lift_verify(I, J, L.matrix("M")))

# removing the factor t(t^2-2t-1) changes nothing modulo 7
S7 = pc.read_system("psl2_I.txt", 7)
t = S7.ring.var("t")
Q = pc.ideal_quotient(S7.vector("I"), t * (t * t - 2 * t - 1), S7.order)
print("I : h == I over GF(7):", pc.ideals_equal(Q, S7.vector("I"), S7.order))

# degree and arithmetic genus of the projective closure
K = pc.read_system("psl2_K.txt")
d, pa, H = pc.curve_hilbert(K.vector("K"), K.order)
print("Hilbert polynomial %s: degree %d, arithmetic genus %d" % (H, d, pa))
