"""The presented algebra: relations, the twist, and the Hopf structure.

Relations are verified as exact operator identities on tensor space (the
action factors through them, so a failure falsifies a transcription).  The
bigrading twists the product by t-powers; the twisted relations lose their
t's and the t = 1 coefficient schemes match syntactically.
"""

from vtschur import tensor, uvt
from vtschur.laurent import ONE

n, d = 3, 2

plain = uvt.verify_all(n, d, star=False)
print("plain relations:", "all pass" if all(ok for _, ok in plain) else "fail",
      "(%d instances)" % len(plain))

starred = uvt.verify_all(n, d, star=True)
print("twisted relations:", "all pass" if all(ok for _, ok in starred) else "fail")

print("t = 1 schemes match:", all(ok for _, ok in uvt.t1_specialization_check(n)))
print("twist exponent identity (n = 2..5):",
      all(uvt.exponent_identity_holds(k) for k in range(2, 6)))

# the twist in action: E_1 * E_1 picks up one t
c, word = uvt.star_expand((ONE, (("E", 1),)), (ONE, (("E", 1),)), n)
print("E_1 * E_1 twist:", c, "on the word", word)

hopf = uvt.hopf_checks(2, 2)
print("Hopf axioms (coassociativity, counit, antipode):",
      "all pass" if all(ok for _, ok in hopf) else "fail",
      "(%d checks)" % len(hopf))

compat = tensor.coproduct_compat(2, 1, 1)
print("coproduct compatibility on V x V:", all(ok for _, ok in compat))
