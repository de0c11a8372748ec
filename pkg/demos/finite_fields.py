"""Finite fields as integer codes.

Run: python demos/finite_fields.py
"""
from quasiengel.gf import element_to_text, field_make, gf, parse_element, theta_map

# GF(8) with the least irreducible modulus t^3 + t + 1
F = gf(8)
print(F, "modulus", F.modulus)
t = F.gen
for k in range(8):
    a = t ** k
    print("t^%d = %-10s hex %s" % (k, element_to_text(a), element_to_text(a, hexform=True)))

# the half-Frobenius on GF(2^(2m+1)) squares to ordinary squaring
F32 = field_make(2, 5)
a = parse_element("t^3+t+1", F32)
print("theta(theta(a)) == a^2:", theta_map(theta_map(a)) == a * a)

# a witness field is built from a stated minimal polynomial, given low degree first
F11 = field_make(2, 11, (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1))
print("t^2047 == 1 in", F11, ":", F11.gen ** 2047 == F11.one)

# batched arithmetic: log/antilog tables act on whole arrays of codes
import numpy as np
T = F32.tables()
xs = np.arange(32)
print("squares in GF(32):", T.mul(xs, xs)[:8], "...")
