"""Which short initial words give u_1 = u_2 a nontrivial solution in PSL(2, p)?

Run: python demos/word_screening.py
"""
from quasiengel.cli import screen_words

reps = screen_words(5, [5, 7, 11, 13], jobs=2)
flagged = [r for r in reps if r.flagged]
print("%d of %d words have nontrivial solutions for every tested prime" % (len(flagged), len(reps)))
for r in flagged:
    print("  %-22s %s" % (r.word, r.counts))
