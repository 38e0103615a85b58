"""The flag convolution algebra in its rescaled orbit basis.

Elements are dicts {theta matrix: VTPoly} over the braced basis
{A} = v^{-m} t^{m} e_A with m = d(A) - r(A); the e-basis differs by that
monomial and is only used when talking to the counting oracle.  Products are
driven by the closed-form rule for a left factor whose matrix is diagonal
plus r E_{h,h+1} (or r E_{h+1,h}); general products go through the faithful
tensor-space operator model (n >= d).
"""

from __future__ import annotations

from functools import lru_cache

from . import laurent, tensor
from .laurent import mono
from .matrices import (
    add as mat_add, co, compositions, diag, diag_of, dminusr, ro,
    theta_matrices, unit as mat_unit,
)

# -- element plumbing ---------------------------------------------------------

def clean(x):
    return {A: c for A, c in x.items() if c}


def elt_add(x, y):
    out = dict(x)
    for A, c in y.items():
        s = out.get(A, laurent.ZERO) + c
        if s:
            out[A] = s
        else:
            out.pop(A, None)
    return out


def elt_scale(x, poly):
    if not poly:
        return {}
    return {A: c * poly for A, c in x.items()}


def unit(n, d):
    return {diag(lam): laurent.ONE for lam in compositions(n, d)}


def braced_to_e(x):
    """{A} = v^{-m} t^m e_A, so the e-coefficient picks up v^{-m} t^m."""
    return {A: c * mono(-dminusr(A), dminusr(A)) for A, c in x.items()}


def e_to_braced(x):
    return {A: c * mono(dminusr(A), -dminusr(A)) for A, c in x.items()}


# -- Chevalley shapes ----------------------------------------------------------

def chev_shape(B):
    """Classify B as ('diag', 0) / ('E', h, r) / ('F', h, r) / None.

    ('E', h, r): B minus r E_{h,h+1} is diagonal (r > 0); mirror for 'F'.
    """
    n = len(B)
    off = [(i, j) for i in range(n) for j in range(n) if i != j and B[i][j]]
    if not off:
        return ("diag", 0, 0)
    if len(off) != 1:
        return None
    i, j = off[0]
    if j == i + 1:
        return ("E", i + 1, B[i][j])
    if i == j + 1:
        return ("F", j + 1, B[i][j])
    return None


def _theta_ok(M, stab):
    if stab:
        return all(M[i][j] >= 0 for i in range(len(M)) for j in range(len(M)) if i != j)
    return all(x >= 0 for row in M for x in row)


def mult_chevE(B, x, stab=False):
    """Left multiplication of a braced element by {B}, B - r E_{h,h+1} diagonal.

    Implements the closed-form sum over t in N^n with sum r: the new matrix
    A_t = A + sum_u t_u (E_{hu} - E_{h+1,u}), weight v^beta t^alpha and the
    product of overlined Gaussian binomials (a_{hu} + t_u choose t_u).
    With stab=True diagonal entries may go negative (off-diagonals never do).
    """
    shape = chev_shape(B)
    if shape is None or shape[0] == "F":
        raise ValueError("left factor is not of E type: %r" % (B,))
    if shape[0] == "diag":
        cb = co(B)
        return clean({A: c for A, c in x.items() if ro(A) == cb})
    _, h, r = shape
    n = len(B)
    cb = co(B)
    out = {}
    for A, cA in x.items():
        if ro(A) != cb:
            raise ValueError("row/column sums mismatch: co(B)=%r ro(A)=%r" % (cb, ro(A)))
        a = A
        for tv in compositions(n, r):
            if any(tv[u] > a[h][u] for u in range(n) if u != h):
                continue
            if not stab and tv[h] > a[h][h]:
                continue
            At = [list(row) for row in a]
            for u in range(n):
                At[h - 1][u] += tv[u]
                At[h][u] -= tv[u]
            At = tuple(tuple(row) for row in At)
            alpha = beta = 0
            s_ge = sum(a[h - 1][j] * tv[l] for j in range(n) for l in range(n) if j >= l)
            s_gt = sum(a[h][j] * tv[l] for j in range(n) for l in range(n) if j > l)
            s_tt = sum(tv[j] * tv[l] for j in range(n) for l in range(n) if j < l)
            alpha = s_ge + s_gt - s_tt
            beta = s_ge - s_gt + s_tt
            coef = mono(beta, alpha)
            for u in range(n):
                if tv[u]:
                    coef = coef * laurent.qbinom_bar(a[h - 1][u] + tv[u], tv[u])
            if not coef:
                continue
            prev = out.get(At, laurent.ZERO) + cA * coef
            if prev:
                out[At] = prev
            else:
                out.pop(At, None)
    return out


def mult_chevF(C, x, stab=False):
    """Mirror rule for a left factor {C} with C - r E_{h+1,h} diagonal."""
    shape = chev_shape(C)
    if shape is None or shape[0] == "E":
        raise ValueError("left factor is not of F type: %r" % (C,))
    if shape[0] == "diag":
        cb = co(C)
        return clean({A: c for A, c in x.items() if ro(A) == cb})
    _, h, r = shape
    n = len(C)
    cb = co(C)
    out = {}
    for A, cA in x.items():
        if ro(A) != cb:
            raise ValueError("row/column sums mismatch: co(C)=%r ro(A)=%r" % (cb, ro(A)))
        a = A
        for tv in compositions(n, r):
            if any(tv[u] > a[h - 1][u] for u in range(n) if u != h - 1):
                continue
            if not stab and tv[h - 1] > a[h - 1][h - 1]:
                continue
            At = [list(row) for row in a]
            for u in range(n):
                At[h - 1][u] -= tv[u]
                At[h][u] += tv[u]
            At = tuple(tuple(row) for row in At)
            s_le = sum(a[h][j] * tv[l] for j in range(n) for l in range(n) if j <= l)
            s_lt = sum(a[h - 1][j] * tv[l] for j in range(n) for l in range(n) if j < l)
            s_tt = sum(tv[j] * tv[l] for j in range(n) for l in range(n) if j < l)
            alpha = s_le + s_lt - s_tt
            beta = s_le - s_lt + s_tt
            coef = mono(beta, alpha)
            for u in range(n):
                if tv[u]:
                    coef = coef * laurent.qbinom_bar(a[h][u] + tv[u], tv[u])
            if not coef:
                continue
            prev = out.get(At, laurent.ZERO) + cA * coef
            if prev:
                out[At] = prev
            else:
                out.pop(At, None)
    return out


def lmul_braced(B, x, stab=False):
    """Left multiplication by a single braced basis element of Chevalley shape."""
    shape = chev_shape(B)
    if shape is None:
        raise ValueError("left factor %r is not Chevalley-shaped" % (B,))
    if shape[0] == "F":
        return mult_chevF(B, x, stab=stab)
    return mult_chevE(B, x, stab=stab)


def chev_mul(x, y, stab=False):
    """Product when every matrix in x is Chevalley-shaped."""
    by_ro = {}
    for A, cy in y.items():
        by_ro.setdefault(ro(A), {})[A] = cy
    out = {}
    for B, c in x.items():
        sub = by_ro.get(co(B))
        if not sub:
            continue
        piece = lmul_braced(B, sub, stab=stab)
        out = elt_add(out, elt_scale(piece, c))
    return out


# -- generators ----------------------------------------------------------------

def gen_E(i, n, d):
    """The geometric generator function: t times the sum of {D + E_{i,i+1}}."""
    out = {}
    for lam in compositions(n, d - 1):
        B = mat_add(diag(lam), mat_unit(n, i, i + 1))
        out[B] = laurent.T
    return out


def gen_F(i, n, d):
    out = {}
    for lam in compositions(n, d - 1):
        C = mat_add(diag(lam), mat_unit(n, i + 1, i))
        out[C] = laurent.ONE
    return out


def gen_A(a, sign, n, d):
    return {diag(lam): mono(sign * lam[a - 1], sign * lam[a - 1]) for lam in compositions(n, d)}


def gen_B(a, sign, n, d):
    return {diag(lam): mono(-sign * lam[a - 1], sign * lam[a - 1]) for lam in compositions(n, d)}


def gen_elt(sym, n, d):
    kind = sym[0]
    if kind == "E":
        return gen_E(sym[1], n, d)
    if kind == "F":
        return gen_F(sym[1], n, d)
    if kind == "A":
        return gen_A(sym[1], sym[2], n, d)
    if kind == "B":
        return gen_B(sym[1], sym[2], n, d)
    raise ValueError("unknown generator symbol %r" % (sym,))


def mul_gen(sym, x, n, d):
    """Left multiplication by a generator element, using row-profile matching."""
    kind = sym[0]
    out = {}
    if kind in ("A", "B"):
        a, sign = sym[1], sym[2]
        for A, c in x.items():
            k = ro(A)[a - 1]
            va = sign * k if kind == "A" else -sign * k
            out[A] = c * mono(va, sign * k)
        return clean(out)
    i = sym[1]
    for A, c in x.items():
        prof = list(ro(A))
        if kind == "E":
            prof[i] -= 1
            if prof[i] < 0:
                continue
            B = mat_add(diag(prof), mat_unit(n, i, i + 1))
            piece = mult_chevE(B, {A: c})
            piece = elt_scale(piece, laurent.T)
        else:
            prof[i - 1] -= 1
            if prof[i - 1] < 0:
                continue
            C = mat_add(diag(prof), mat_unit(n, i + 1, i))
            piece = mult_chevF(C, {A: c})
        out = elt_add(out, piece)
    return out


def expand_word(word, n, d):
    """Product of generator elements, rightmost factor applied first."""
    x = unit(n, d)
    for sym in reversed(list(word)):
        x = mul_gen(sym, x, n, d)
    return x


def cartan_elt(i, n, d):
    """(A_i B_{i+1} - B_i A_{i+1}) / (v - v^{-1}): diagonal balanced integers."""
    out = {}
    for lam in compositions(n, d):
        k = lam[i - 1] - lam[i]
        c = laurent.vint(k).shift(0, lam[i - 1] + lam[i])
        if c:
            out[diag(lam)] = c
    return out


# -- relation suite -------------------------------------------------------------

def verify_relations(n, d, include_printed_variants=True):
    """Every defining relation of the convolution algebra, checked as exact
    identities of braced elements.  Returns a list of (name, ok) pairs; the
    printed-variant entries record exponent normalizations that circulate
    in print but fail on the model (they are expected to fail and carry an
    'expect-fail' name prefix so suites can assert on them).
    """
    checks = []

    def w(*syms):
        return expand_word(syms, n, d)

    def E(i):
        return ("E", i)

    def F(i):
        return ("F", i)

    def Ap(a, s=1):
        return ("A", a, s)

    def Bp(a, s=1):
        return ("B", a, s)

    one = unit(n, d)
    # R1: Cartan family commutes; inverses compose to the unit
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            ok = w(Ap(a), Ap(b)) == w(Ap(b), Ap(a)) and w(Ap(a), Bp(b)) == w(Bp(b), Ap(a)) \
                and w(Bp(a), Bp(b)) == w(Bp(b), Bp(a))
            checks.append(("R1 commute a=%d b=%d" % (a, b), ok))
        checks.append(("R1 inverse a=%d" % a,
                       w(Ap(a), Ap(a, -1)) == one and w(Bp(a), Bp(a, -1)) == one))
    # R2 conjugations (the F-lines carry the model-corrected t-exponent)
    for i in range(1, n + 1):
        for j in range(1, n):
            br = bracket(n, i, j)
            lhsA = w(Ap(i), E(j), Ap(i, -1))
            checks.append(("R2 A E i=%d j=%d" % (i, j),
                           lhsA == elt_scale(w(E(j)), mono(br, br))))
            lhsB = w(Bp(i), E(j), Bp(i, -1))
            checks.append(("R2 B E i=%d j=%d" % (i, j),
                           lhsB == elt_scale(w(E(j)), mono(-br, br))))
            lhsAF = w(Ap(i), F(j), Ap(i, -1))
            checks.append(("R2 A F i=%d j=%d" % (i, j),
                           lhsAF == elt_scale(w(F(j)), mono(-br, -br))))
            lhsBF = w(Bp(i), F(j), Bp(i, -1))
            checks.append(("R2 B F i=%d j=%d" % (i, j),
                           lhsBF == elt_scale(w(F(j)), mono(br, -br))))
            if include_printed_variants and bracket(n, j, i) != br:
                brt = bracket(n, j, i)
                ok_printed = lhsAF == elt_scale(w(F(j)), mono(-br, -brt))
                checks.append(("expect-fail printed R2 A F i=%d j=%d" % (i, j), ok_printed))
                ok_printed_b = lhsBF == elt_scale(w(F(j)), mono(br, -brt))
                checks.append(("expect-fail printed R2 B F i=%d j=%d" % (i, j), ok_printed_b))
    # R3
    for i in range(1, n):
        for j in range(1, n):
            comm = elt_add(w(E(i), F(j)), elt_scale(w(F(j), E(i)), -laurent.ONE))
            rhs = cartan_elt(i, n, d) if i == j else {}
            checks.append(("R3 i=%d j=%d" % (i, j), clean(comm) == clean(rhs)))
    # R4 two-parameter Serre (adjacent) and commutation (distant)
    vt_mid = mono(1, 1) + mono(-1, 1)
    t2 = mono(0, 2)
    for i in range(1, n):
        for j in range(1, n):
            if i == j:
                continue
            if abs(i - j) > 1:
                checks.append(("R4 EE i=%d j=%d" % (i, j), w(E(i), E(j)) == w(E(j), E(i))))
                checks.append(("R4 FF i=%d j=%d" % (i, j), w(F(i), F(j)) == w(F(j), F(i))))
                continue
            if j == i + 1:
                lhs = elt_add(
                    elt_add(w(E(i), E(i), E(j)), elt_scale(w(E(i), E(j), E(i)), -vt_mid)),
                    elt_scale(w(E(j), E(i), E(i)), t2))
                checks.append(("R4 E i=%d j=%d" % (i, j), clean(lhs) == {}))
                lhsF = elt_add(
                    elt_add(w(F(j), F(i), F(i)), elt_scale(w(F(i), F(j), F(i)), -vt_mid)),
                    elt_scale(w(F(i), F(i), F(j)), t2))
                checks.append(("R4 F i=%d j=%d" % (i, j), clean(lhsF) == {}))
            else:
                lhs = elt_add(
                    elt_add(elt_scale(w(E(i), E(i), E(j)), t2),
                            elt_scale(w(E(i), E(j), E(i)), -vt_mid)),
                    w(E(j), E(i), E(i)))
                checks.append(("R4 E i=%d j=%d" % (i, j), clean(lhs) == {}))
                lhsF = elt_add(
                    elt_add(elt_scale(w(F(j), F(i), F(i)), t2),
                            elt_scale(w(F(i), F(j), F(i)), -vt_mid)),
                    w(F(i), F(i), F(j)))
                checks.append(("R4 F i=%d j=%d" % (i, j), clean(lhsF) == {}))
    # R5: products over the whole Cartan family are global monomials
    prodA = expand_word([Ap(a) for a in range(1, n + 1)], n, d)
    checks.append(("R5 prod A", prodA == elt_scale(one, mono(d, d))))
    prodB = expand_word([Bp(a) for a in range(1, n + 1)], n, d)
    checks.append(("R5 prod B", prodB == elt_scale(one, mono(-d, d))))
    # R6 minimal polynomials of the diagonal generators
    for j in range(1, n + 1):
        acc = one
        for l in range(d + 1):
            acc = elt_add(mul_gen(Ap(j), acc, n, d), elt_scale(acc, -mono(l, l)))
        checks.append(("R6 A_%d" % j, clean(acc) == {}))
        accB = one
        for l in range(d + 1):
            accB = elt_add(mul_gen(Bp(j), accB, n, d), elt_scale(accB, -mono(-l, l)))
        checks.append(("R6 B_%d" % j, clean(accB) == {}))
    # R7 nilpotency
    for i in range(1, n):
        checks.append(("R7 E_%d" % i, expand_word([E(i)] * (d + 1), n, d) == {}))
        checks.append(("R7 F_%d" % i, expand_word([F(i)] * (d + 1), n, d) == {}))
    return checks


def bracket(n, i, j):
    """The Cartan pairing <i,j>: 1 if i=j, -1 if i=j+1, else 0."""
    return (1 if i == j else 0) - (1 if i == j + 1 else 0)


# -- partial order ----------------------------------------------------------------

def preceq(A, B):
    """Corner-sum dominance in both triangles (same row/column profiles)."""
    n = len(A)
    if ro(A) != ro(B) or co(A) != co(B):
        return False
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            sa = sum(A[r][s] for r in range(i) for s in range(j - 1, n))
            sb = sum(B[r][s] for r in range(i) for s in range(j - 1, n))
            if sa > sb:
                return False
    for i in range(1, n + 1):
        for j in range(1, i):
            sa = sum(A[r][s] for r in range(i - 1, n) for s in range(j))
            sb = sum(B[r][s] for r in range(i - 1, n) for s in range(j))
            if sa > sb:
                return False
    return True


def prec(A, B):
    return A != B and preceq(A, B)


# -- triangular products ------------------------------------------------------------

class ChainInfeasible(ValueError):
    """The diagonal chain of a triangular factorization went negative."""


def triangular_factors(A):
    """Ordered Chevalley factor matrices whose product is {A} + lower terms.

    Every strictly-upper entry a_{ij} contributes E-type factors at
    h = i..j-1 (taken column-major, steepest last), every strictly-lower
    entry F-type factors at h = j..i-1; the interleaving diagonals are the
    unique solution of the row/column-profile chain anchored at co(A).
    """
    n = len(A)
    e_triples = [
        (i, h, j)
        for i in range(1, n + 1)
        for h in range(1, n + 1)
        for j in range(1, n + 1)
        if i <= h < j and A[i - 1][j - 1]
    ]
    e_triples.sort(key=lambda t: (-t[2], t[1] - t[0], -t[0]))
    f_triples = [
        (i, h, j)
        for i in range(1, n + 1)
        for h in range(1, n + 1)
        for j in range(1, n + 1)
        if j <= h < i and A[i - 1][j - 1]
    ]
    # final tie-break ascending in j (the transpose of the E-side rule; the
    # printed descending variant loses the unit leading coefficient)
    f_triples.sort(key=lambda t: (t[0], -(t[1] - t[2]), t[2]))
    specs = [("E", h, A[i - 1][j - 1]) for (i, h, j) in e_triples]
    specs += [("F", h, A[i - 1][j - 1]) for (i, h, j) in f_triples]
    factors = []
    profile = list(co(A))
    for kind, h, r in reversed(specs):
        if kind == "E":
            dvec = list(profile)
            dvec[h] -= r
            if dvec[h] < 0:
                raise ChainInfeasible("column profile %r cannot absorb %d at %d" % (profile, r, h))
            B = mat_add(diag(dvec), mat_unit(n, h, h + 1, r))
        else:
            dvec = list(profile)
            dvec[h - 1] -= r
            if dvec[h - 1] < 0:
                raise ChainInfeasible("column profile %r cannot absorb %d at %d" % (profile, r, h))
            B = mat_add(diag(dvec), mat_unit(n, h + 1, h, r))
        factors.append(B)
        profile = list(ro(B))
    factors.reverse()
    if tuple(profile) != ro(A):
        raise ChainInfeasible("chain does not close onto the row profile of %r" % (A,))
    return factors


def triangular_product(A):
    """({A} + strictly lower terms, the factor list); leading term asserted."""
    factors = triangular_factors(A)
    x = {A_diag: laurent.ONE for A_diag in [diag(co(A))]}
    for B in reversed(factors):
        x = lmul_braced(B, x)
    if clean(x).get(A) != laurent.ONE:
        raise AssertionError("triangular product lost its leading term for %r" % (A,))
    for M in x:
        if M != A and not prec(M, A):
            raise AssertionError("non-lower term %r in the triangular product of %r" % (M, A))
    return x, factors


# -- operator model -----------------------------------------------------------------

def content_projector(lam, n, d):
    """Tensor-space projector onto sequences whose value counts are lam."""
    cols = {}
    for r in tensor.all_seqs(n, d):
        cnt = tuple(sum(1 for x in r if x == a) for a in range(1, n + 1))
        if cnt == tuple(lam):
            cols[r] = {r: laurent.ONE}
    return cols


@lru_cache(maxsize=None)
def braced_op(A, n, d):
    """Tensor-space operator of a single braced basis element (n >= d)."""
    if n < d:
        raise ValueError("the operator model is faithful only for n >= d")
    shape = chev_shape(A)
    if shape is not None and shape[0] == "diag":
        return content_projector(diag_of(A), n, d)
    if shape is not None:
        kind, h, r = shape
        sym = ("E", h) if kind == "E" else ("F", h)
        word_elt = expand_word([sym] * r, n, d)
        cA = clean(word_elt).get(A)
        if not cA:
            raise AssertionError("power expansion missed the factor %r" % (A,))
        P = tensor.op_word([sym] * r, n, d)
        P = tensor.op_compose(content_projector(ro(A), n, d), tensor.op_compose(P, content_projector(co(A), n, d)))
        return tensor.op_clean(
            {rr: {ss: laurent.exact_div(c, cA) for ss, c in col.items()} for rr, col in P.items()}
        )
    expansion, factors = triangular_product(A)
    P = tensor.op_identity(n, d)
    for B in factors:
        P = tensor.op_compose(P, braced_op(B, n, d))
    for M, c in clean(expansion).items():
        if M == A:
            continue
        P = tensor.op_sub(P, tensor.op_scale(braced_op(M, n, d), c))
    return tensor.op_clean(P)


def elt_op(x, n, d):
    out = {}
    for A, c in x.items():
        out = tensor.op_add(out, tensor.op_scale(braced_op(A, n, d), c))
    return out


def _poly_solve(rows, rhs):
    """Solve an overdetermined linear system with VTPoly entries exactly.

    Fraction-free forward elimination followed by back substitution through
    exact division; the residual is verified on every original row.
    """
    k = len(rows[0])
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(k):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [piv * x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    x = [laurent.ZERO] * k
    for idx in reversed(range(r)):
        c = pivots[idx]
        acc = m[idx][k]
        for c2 in range(c + 1, k):
            if m[idx][c2]:
                acc = acc - m[idx][c2] * x[c2]
        x[c] = laurent.exact_div(acc, m[idx][c])
    for row, b in zip(rows, rhs):
        if sum((ci * xi for ci, xi in zip(row, x)), laurent.ZERO) != b:
            raise laurent.InexactDivision("polynomial system is inconsistent")
    return x


def op_to_elt(P, n, d):
    """Re-express an operator in the braced basis (n >= d, faithfulness)."""
    seqs = tensor.all_seqs(n, d)
    content = {r: tuple(sum(1 for x in r if x == a) for a in range(1, n + 1)) for r in seqs}
    blocks = {}
    for A in theta_matrices(n, d):
        blocks.setdefault((ro(A), co(A)), []).append(A)
    out = {}
    Pc = tensor.op_clean(P)
    covered = set()
    for (mu, nu), mats in sorted(blocks.items()):
        coords = [(s_row, s_col) for s_col in seqs if content[s_col] == nu
                  for s_row in seqs if content[s_row] == mu]
        rows = []
        rhs = []
        ops = [tensor.op_clean(braced_op(A, n, d)) for A in mats]
        for s_row, s_col in coords:
            rows.append([op.get(s_col, {}).get(s_row, laurent.ZERO) for op in ops])
            rhs.append(Pc.get(s_col, {}).get(s_row, laurent.ZERO))
            covered.add((s_row, s_col))
        sol = _poly_solve(rows, rhs)
        for A, c in zip(mats, sol):
            if c:
                out[A] = c
    for s_col, col in Pc.items():
        for s_row, c in col.items():
            if (s_row, s_col) not in covered and c:
                raise ValueError("operator has support outside all content blocks")
    return out


def product_via_operators(x, y, n, d):
    """General product through the faithful operator model (n >= d)."""
    if n < d:
        raise ValueError("general products need n >= d")
    P = tensor.op_compose(elt_op(x, n, d), elt_op(y, n, d))
    return op_to_elt(P, n, d)


# -- oracle comparison ----------------------------------------------------------------

def oracle_compare(n, d, primes=(3, 5, 7)):
    """Check every admissible Chevalley product against flag counting.

    For each left factor {B} of E or F shape and each compatible A, the
    closed-form product is rewritten on the e-basis; all coefficients must be
    t-free with even v-powers and must evaluate at v^2 = p to the oracle's
    counts for every prime.  Returns a list of (B, A, ok).
    """
    from . import flags

    tables = {p: flags.conv_table(p, d, n) for p in primes}
    results = []
    thetas = theta_matrices(n, d)
    lefts = []
    for B in thetas:
        shape = chev_shape(B)
        if shape is not None and shape[0] != "diag":
            lefts.append(B)

    def match_at(e_prod, counts, p):
        seen = set()
        for Cmat, c in e_prod.items():
            try:
                vals = laurent.eval_q(c, p)
            except laurent.OddVPower:
                return False
            if set(vals) - {0}:
                return False
            if vals.get(0, 0) != counts.get(Cmat, 0):
                return False
            seen.add(Cmat)
        return not (set(counts) - seen)

    for B in lefts:
        for A in thetas:
            if ro(A) != co(B):
                continue
            prod = lmul_braced(B, {A: laurent.ONE})
            shiftBA = dminusr(B) + dminusr(A)
            e_prod = {
                Cmat: c * mono(shiftBA - dminusr(Cmat), dminusr(Cmat) - shiftBA)
                for Cmat, c in prod.items()
            }
            ok = all(match_at(e_prod, tables[p].get((B, A), {}), p) for p in primes)
            results.append((B, A, ok))
    return results


# -- serialization -----------------------------------------------------------------------

def to_json(x, n, d, basis="braced"):
    terms = [
        {"matrix": [list(r) for r in A], "poly": laurent.to_json(c)}
        for A, c in sorted(x.items())
    ]
    return {"schema": 1, "algebra": "schur", "n": n, "d": d, "basis": basis, "terms": terms}


def from_json(doc):
    if doc.get("algebra") != "schur":
        raise ValueError("not a schur element")
    x = {}
    for term in doc["terms"]:
        A = tuple(tuple(int(v) for v in row) for row in term["matrix"])
        x[A] = laurent.from_json(term["poly"])
    return clean(x), doc["n"], doc["d"], doc.get("basis", "braced")
