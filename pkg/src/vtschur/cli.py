"""Command-line front end: verification suites, products, oracle runs.

Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
schema errors (argparse errors already exit with 2).  Set
VTSCHUR_ALLOW_LARGE=1 to lift the enumeration guards, at your own expense.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

from . import flags, galois, hecke, jparity, laurent, schur, stab, tensor, uvt
from .report import Report

SUITES = (
    "schur", "hecke", "duality", "uvt", "star", "stab",
    "jparity-tilde", "jparity-hat", "descend", "oracle",
)


def allow_large():
    return os.environ.get("VTSCHUR_ALLOW_LARGE", "") == "1"


def run_suite(suite, cfg):
    n, d, m = cfg["n"], cfg["d"], cfg["m"]
    rep = Report(suite=suite, config=cfg)
    t0 = time.time()
    if suite == "schur":
        rep.extend(schur.verify_relations(n, d))
    elif suite == "hecke":
        rep.extend(hecke.verify_hecke(d))
        for w, u, ok in hecke.geometric_structure_match(d, cfg["primes"][0]):
            rep.add("geometric %r %r at p=%d" % (w, u, cfg["primes"][0]), ok)
    elif suite == "duality":
        rep.extend(tensor.commute_check(n, d))
        v0, t0s = cfg["spec"]
        if n >= d:
            hdim = tensor.centralizer_dim("hecke", n, d, v0, t0s)
            expect = math.comb(n * n + d - 1, d)
            rep.add("flag-side commutant dimension %d" % hdim, hdim == expect)
            udim = tensor.centralizer_dim("uvt", n, d, v0, t0s)
            rep.add("hecke-side commutant dimension %d" % udim, udim == math.factorial(d))
            rank = tensor.surjectivity_rank(n, d, v0, t0s)
            rep.add("generator-word image rank %d" % rank, rank == expect)
    elif suite == "uvt":
        rep.extend(uvt.verify_all(n, d, star=False))
        rep.extend(uvt.t1_specialization_check(n))
        rep.extend(uvt.hopf_checks(n, min(d, 3)))
    elif suite == "star":
        rep.extend(uvt.verify_all(n, d, star=True))
        rep.add("twist exponent identity n=%d" % n, uvt.exponent_identity_holds(n))
        rep.add("star associativity sample", uvt.star_associativity_sample(n))
    elif suite == "stab":
        window = stab.WeightWindow(cfg["window"], 2)
        checks, skipped = stab.limit_relation_suite(n, window)
        rep.extend(checks)
        rep.add("boundary terms skipped: %d" % skipped, True)
        rep.extend(stab.generator_transport_suite(n, window))
    elif suite == "jparity-tilde":
        rep.extend(jparity.verify_tilde_relations(n, d, m))
    elif suite == "jparity-hat":
        rep.extend(jparity.verify_hat_relations(n, d, m))
    elif suite == "descend":
        rep.add("sigma involutive", galois.sigma_involutive(n, d))
        rep.extend(galois.equivariance_check(n, d))
        rep.extend(galois.descent_suite(n, d))
        _elt, rs = hecke.quadratic_certificate(1, max(d, 2))
        cert = "T^2 %r T %r 1 %r" % (rs["T^2"], rs["T"], rs["1"])
        rep.add("hecke quadratic certificate (r,s) coefficients: %s" % cert, not _elt)
    elif suite == "oracle":
        for B, A, ok in schur.oracle_compare(n, d, primes=tuple(cfg["primes"])):
            rep.add("pair B=%r A=%r" % (B, A), ok)
        for p in cfg["primes"][:2]:
            X = flags.enum_flags_X(p, d, n, allow_large=allow_large())
            Y = flags.enum_flags_Y(p, d, allow_large=allow_large())
            xy = {flags.orbit_matrix(V, FF, p) for V in X for FF in Y}
            yy = {flags.orbit_matrix(FF, GG, p) for FF in Y for GG in Y}
            rep.add("orbit count X*Y = n^d at p=%d" % p, len(xy) == n ** d)
            rep.add("orbit count Y*Y = d! at p=%d" % p, len(yy) == math.factorial(d))
    else:
        raise ValueError("unknown suite %r" % (suite,))
    rep.elapsed = time.time() - t0
    return rep


def cmd_verify(args):
    cfg = {
        "n": args.n,
        "d": args.d,
        "m": args.m,
        "primes": args.primes,
        "window": args.window,
        "spec": args.spec,
    }
    try:
        rep = run_suite(args.suite, cfg)
    except flags.GuardExceeded as exc:
        print("guard exceeded: %s" % exc, file=sys.stderr)
        return 2
    text = rep.to_json() if args.format == "json" else rep.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if rep.passed else 1


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def cmd_mult(args):
    try:
        lhs_doc = _load_json(args.lhs)
        rhs_doc = _load_json(args.rhs)
        if args.algebra == "hecke":
            x, dx = hecke.from_json(lhs_doc)
            y, dy = hecke.from_json(rhs_doc)
            if dx != dy:
                print("degree mismatch: %d vs %d" % (dx, dy), file=sys.stderr)
                return 2
            out = hecke.to_json(hecke.hecke_mul(x, y), dx)
        else:
            x, n1, d1, _ = schur.from_json(lhs_doc)
            y, n2, d2, _ = schur.from_json(rhs_doc)
            if (n1, d1) != (n2, d2):
                print("size mismatch: %r vs %r" % ((n1, d1), (n2, d2)), file=sys.stderr)
                return 2
            try:
                prod = schur.chev_mul(x, y)
            except ValueError:
                prod = schur.product_via_operators(x, y, n1, d1)
            out = schur.to_json(prod, n1, d1)
    except (KeyError, ValueError, OSError, json.JSONDecodeError) as exc:
        print("schema error: %s" % exc, file=sys.stderr)
        return 2
    text = json.dumps(out, sort_keys=True, separators=(",", ":")) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_stab_fit(args):
    try:
        doc = _load_json(args.pair)
        A1 = tuple(tuple(int(x) for x in row) for row in doc["A1"])
        A2 = tuple(tuple(int(x) for x in row) for row in doc["A2"])
    except (KeyError, ValueError, OSError, json.JSONDecodeError) as exc:
        print("schema error: %s" % exc, file=sys.stderr)
        return 2
    try:
        fit = stab.stabilization_check(A1, A2, tuple(args.plist))
    except stab.FitInconsistent as exc:
        print("fit inconsistent: %s" % exc, file=sys.stderr)
        return 1
    except ValueError as exc:
        print("bad request: %s" % exc, file=sys.stderr)
        return 2
    out = {
        "schema": 1,
        "plist": list(args.plist),
        "patterns": [
            {
                "z": [list(r) for r in z],
                "terms": [
                    {"v": a, "t": b, "vp": k, "tp": l,
                     "num": g.numerator, "den": g.denominator}
                    for (a, b, k, l), g in sorted(pat.items())
                ],
            }
            for z, pat in sorted(fit.items())
        ],
    }
    sys.stdout.write(json.dumps(out, sort_keys=True, separators=(",", ":")) + "\n")
    return 0


def parse_primes(text):
    primes = tuple(int(x) for x in text.split(","))
    if not primes:
        raise argparse.ArgumentTypeError("need at least one prime")
    return primes


def parse_spec(text):
    from fractions import Fraction

    v0, t0 = text.split(",")
    return (Fraction(v0), Fraction(t0))


def build_parser():
    ap = argparse.ArgumentParser(prog="vtschur", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, default=2)
        p.add_argument("--d", type=int, default=2)
        p.add_argument("--m", type=int, default=1)
        p.add_argument("--primes", type=parse_primes, default=(3, 5, 7))
        p.add_argument("--window", type=int, default=4)
        p.add_argument("--spec", type=parse_spec, default=(2, 3))
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out")

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=SUITES)
    common(pv)
    pv.set_defaults(func=cmd_verify)

    po = sub.add_parser("oracle-compare", help="alias for `verify oracle`")
    common(po)
    po.set_defaults(func=cmd_verify, suite="oracle")

    pd = sub.add_parser("descend", help="alias for `verify descend`")
    common(pd)
    pd.set_defaults(func=cmd_verify, suite="descend")

    pm = sub.add_parser("mult", help="multiply two serialized elements")
    pm.add_argument("--algebra", choices=("schur", "hecke"), default="schur")
    pm.add_argument("--lhs", required=True)
    pm.add_argument("--rhs", required=True)
    pm.add_argument("--out")
    pm.set_defaults(func=cmd_mult)

    pf = sub.add_parser("stab-fit", help="fit the shifted-product pattern of a pair")
    pf.add_argument("--pair", required=True, help="JSON file with matrices A1, A2")
    pf.add_argument("--plist", type=lambda s: [int(x) for x in s.split(",")], default=[3, 4, 5])
    pf.set_defaults(func=cmd_stab_fit)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
