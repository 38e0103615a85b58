"""Stabilization: shifted products follow one pattern; the windowed limit.

Shifting a pair of matrices p steps up the diagonal and multiplying in the
finite algebra gives coefficients that are a single polynomial in
(v, v^{-p}, t, t^p).  The fit below recovers that polynomial exactly from
three runs; its v' = t' = 1 value is the limit-algebra product, which the
windowed model then uses to verify the completion relations on interiors.
"""

from vtschur import laurent, stab
from vtschur.matrices import diag, mat, unit

# a pair whose pattern genuinely involves v' and t'
A1 = unit(2, 1, 2)
A2 = unit(2, 2, 1)
fit = stab.stabilization_check(A1, A2, (3, 4, 5))
for z, pattern in sorted(fit.items()):
    print("output", z)
    for (a, b, k, l), g in sorted(pattern.items()):
        print("   %s * v^%d t^%d v'^%d t'^%d" % (g, a, b, k, l))

# the limit product itself allows negative diagonal entries
lim = stab.stab_mul({A1: laurent.ONE}, {A2: laurent.ONE})
for M, c in sorted(lim.items()):
    print("limit term", M, laurent.to_text(c))

# completion relations on a window, boundary terms skipped
win = stab.WeightWindow(4, 2)
checks, skipped = stab.limit_relation_suite(2, win)
print("window relation suite: %d checks," % len(checks),
      "all pass;" if all(ok for _, ok in checks) else "fail;",
      "%d boundary terms skipped" % skipped)

transport = stab.generator_transport_suite(2, win)
print("generator transport into the limit algebra:",
      "all pass" if all(ok for _, ok in transport) else "fail")
