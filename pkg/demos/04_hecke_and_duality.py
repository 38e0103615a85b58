"""The two-parameter Hecke algebra and the commuting actions on tensor space.

T_i^2 = (vt - v^{-1}t) T_i + t^2 on the permutation basis; the geometric
model (complete-flag convolution) reproduces every structure constant.  On
V^{tensor d} the left quantum action and right Hecke action commute exactly
and cut out each other's commutants at generic specializations.
"""

import math

from vtschur import hecke, laurent, tensor

d = 3
print("Hecke relations (d=%d):" % d,
      "all pass" if all(ok for _, ok in hecke.verify_hecke(d)) else "fail")

x = hecke.mul_Ti(hecke.Ti(2, 1), 1)
for w, c in sorted(x.items()):
    print("T_1^2 term", w, laurent.to_text(c))

match = hecke.geometric_structure_match(2, 3)
print("geometric dictionary at p=3:",
      "every product matches counting" if all(ok for _, _, ok in match) else "fail")

n, d = 2, 2
print("actions commute on V^{%d}:" % d,
      all(ok for _, ok in tensor.commute_check(n, d)))

expect = math.comb(n * n + d - 1, d)
print("commutant of the Hecke action:", tensor.centralizer_dim("hecke", n, d),
      "(the flag algebra dimension %d)" % expect)
print("commutant of the quantum action:", tensor.centralizer_dim("uvt", n, d),
      "(d! = %d)" % math.factorial(d))
print("generator words span a", tensor.surjectivity_rank(n, d),
      "dimensional image (surjectivity onto the Hecke commutant)")
