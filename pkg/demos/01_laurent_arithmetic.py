"""Exact Laurent arithmetic in (v, t) and the quantum combinatorics layer.

Everything downstream rides on this ring: integer coefficients, sparse
exponent dictionaries, and exact division (a failed division is always a
transcription bug somewhere above, never a rounding artifact).
"""

from vtschur import laurent
from vtschur.laurent import T, V, mono

p = (V + T) * (V - T)
print("(v+t)(v-t)                =", laurent.to_text(p))
print("bar(v^2 t)                =", laurent.to_text(laurent.bar(mono(2, 1))))

# the two quantum-integer families: unbalanced (counting) and balanced
for k in (1, 2, 3):
    print("(%d)_v = %-22s [%d]_v = %s" % (
        k, laurent.to_text(laurent.qint(k)), k, laurent.to_text(laurent.vint(k))))

# Gaussian binomials are exact divisions; negative tops are allowed because
# the stabilized products need them
print("binom(3,2)_v              =", laurent.to_text(laurent.qbinom(3, 2)))
print("binom(-1,2)_v             =", laurent.to_text(laurent.qbinom(-1, 2)))
print("bar binom(2,1)_v          =", laurent.to_text(laurent.qbinom_bar(2, 1)))

# the two-parameter factorial that normalizes divided powers
print("[3]!_{v,t}                =", laurent.to_text(laurent.vtfact(3)))

# specializations: exact rationals, and the v^2 = q evaluation used by the
# counting oracle (odd v-powers are an error by design)
print("vt - v^{-1}t at (2,3)     =", laurent.specialize(V * T - mono(-1, 1), 2, 3))
print("v^2 - 1 at q=3            =", laurent.eval_q(mono(2, 0) - 1, 3))

# the (r, s) = (vt, v^{-1}t) rewriting, defined exactly on even total degree
print("vt as (r,s)               =", laurent.to_rs(V * T))
print("vt - v^{-1}t as (r,s)     =", laurent.to_rs(V * T - mono(-1, 1)))
