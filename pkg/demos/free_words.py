"""Free-group words and the two word sequences.

Run: python demos/free_words.py
"""
from quasiengel.freewords import (FreeWord, build_sequence, engel, enumerate_initial_words,
                                  quasi_engel, sequence_lengths, short_equation_sides)

w = FreeWord.parse("x^-2 y^-1 x")
spec = quasi_engel(w)
for n in (1, 2, 3):
    u = build_sequence(spec, n)
    print("u_%d has reduced length %d" % (n, len(u)))
print("u_2 =", build_sequence(spec, 2))
print("lengths u_1..u_5:", sequence_lengths(spec, 5))

# the Engel words [y, x, ..., x] grow far more slowly
print("Engel lengths:", sequence_lengths(engel(), 5))

# u_1 = u_2 has a short equivalent form used to build polynomial equations
lhs, rhs = short_equation_sides()
print("short form: %s = %s" % (lhs, rhs))

words = enumerate_initial_words(5)
print(len(words), "reduced words of length <= 5")
