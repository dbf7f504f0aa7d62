"""Command-line entry point: ``preperiodic <subcommand> ...``.

Results go to stdout, diagnostics to stderr.  Exit codes:
0 success, 2 usage/malformed input, 3 filter failed, 4 no Galois
certificate, 5 no twist found, 1 family has preperiodic points.
"""
from __future__ import annotations

import argparse
import json
import sys

from .certify import find_rootless_prime, find_w
from .dynamics import denominator_filter, find_portrait
from .exactnum import format_rational, parse_rational
from .families import FamilySpec, ingram_family, survey_galois, verify_family
from .polyarith import IntPolynomial

EXIT_USAGE = 2
EXIT_FILTER_FAIL = 3
EXIT_NO_CERT = 4
EXIT_NO_W = 5
EXIT_PREPERIODIC = 1


def _rational(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _poly(text):
    try:
        P = IntPolynomial.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if P.degree < 1:
        raise argparse.ArgumentTypeError(f"polynomial must have positive degree: {text!r}")
    return P


def _int_at_least(lo):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}: {v}")
        return v
    return conv


def _nonzero_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v == 0:
        raise argparse.ArgumentTypeError("w must be nonzero")
    return v


def _ordinal(n: int) -> str:
    if n % 100 in (11, 12, 13):
        return f"{n}th"
    return f"{n}{ {1: 'st', 2: 'nd', 3: 'rd'}.get(n % 10, 'th') }"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="preperiodic", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    degree = _int_at_least(2)

    p = sub.add_parser("portrait", help="rational preperiodic points of x^d + c")
    p.add_argument("--degree", type=degree, required=True)
    p.add_argument("--c", type=_rational, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("filter", help="denominator test for rational periodic points")
    p.add_argument("--degree", type=degree, required=True)
    p.add_argument("--c", type=_rational, required=True)

    p = sub.add_parser("galois-cert", help="find a Dedekind witness prime")
    p.add_argument("--poly", type=_poly, required=True)
    p.add_argument("--max-prime", type=_int_at_least(2), default=1000)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("find-w", help="search for a locally obstructed twist w")
    p.add_argument("--poly", type=_poly, required=True)
    p.add_argument("--degree", type=degree, required=True)
    p.add_argument("--max-prime", type=_int_at_least(2), default=100)
    p.add_argument("--depth", type=_int_at_least(1), default=4)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-family", help="check x^d + 1/(w P(t)) at all t of bounded height")
    p.add_argument("--poly", type=_poly, required=True)
    p.add_argument("--degree", type=degree, required=True)
    p.add_argument("--w", type=_nonzero_int, default=1)
    p.add_argument("--height", type=_int_at_least(1), required=True)
    p.add_argument("--jobs", type=_int_at_least(1), default=1)

    p = sub.add_parser("ingram", help="check the family x^d + 1/(1 + t^m)")
    p.add_argument("--degree", type=degree, required=True)
    p.add_argument("--m", type=_int_at_least(1), required=True)
    p.add_argument("--height", type=_int_at_least(1), required=True)
    p.add_argument("--jobs", type=_int_at_least(1), default=1)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("survey", help="density of Dedekind-certifiable polynomials")
    p.add_argument("--degree", type=degree, required=True)
    p.add_argument("--coeff-height", type=_int_at_least(1), required=True)
    p.add_argument("--samples", type=_int_at_least(1), default=500)
    p.add_argument("--seed", type=int, default=1)
    return ap


def _cmd_portrait(args, out):
    portrait = find_portrait(args.degree, args.c)
    if args.json:
        print(portrait.to_json(), file=out)
        return 0
    print(f"f(x) = x^{args.degree} + {format_rational(args.c)}: {len(portrait)} preperiodic points",
          file=out)
    if portrait.filter is not None and not portrait.filter.passes:
        print("  (denominator filter fails: none possible)", file=out)
    for x in portrait.points:
        print(f"  {format_rational(x):>10} -> {format_rational(portrait.edges[x]):>10}"
              f"  tail={portrait.tail[x]} cycle={portrait.cycle[x]}", file=out)
    return 0


def _cmd_filter(args, out):
    if args.c == 0:
        print("error: the denominator filter needs c != 0", file=sys.stderr)
        return EXIT_USAGE
    dec = denominator_filter(args.degree, args.c)
    den = args.c.denominator
    if dec.passes:
        print(f"pass: {den} = {dec.b}^{args.degree}, b = {dec.b}", file=out)
        return 0
    msg = f"fail: {den} is not a perfect {_ordinal(args.degree)} power"
    if dec.witness_prime is not None:
        msg += f" (v_{dec.witness_prime} = {dec.witness_exponent} mod {args.degree})"
    print(msg, file=out)
    return EXIT_FILTER_FAIL


def _cmd_galois(args, out):
    cert = find_rootless_prime(args.poly, args.max_prime)
    if cert is None:
        print("NONE", file=out)
        return EXIT_NO_CERT
    if args.json:
        print(json.dumps(cert.to_dict()), file=out)
    else:
        print(f"p = {cert.p}: radical squarefree mod p with no root in GF({cert.p})", file=out)
    return 0


def _cmd_find_w(args, out):
    result = find_w(args.poly, args.degree, args.max_prime, args.depth)
    if not result:
        if args.json:
            print(json.dumps(result.to_dict()), file=out)
        else:
            print(f"UNKNOWN: {result.reason}", file=out)
        return EXIT_NO_W
    if args.json:
        print(result.to_json(), file=out)
    else:
        print(f"w = {result.w}, p = {result.p}, status {result.status} at depth {result.depth}",
              file=out)
    return 0


def _cmd_verify(args, out):
    spec = FamilySpec(args.degree, args.poly, args.w)
    summary = verify_family(spec, args.height, args.jobs)
    print(summary.to_json(), file=out)
    return 0 if summary.has_preperiodic == 0 else EXIT_PREPERIODIC


def _cmd_ingram(args, out):
    spec, applicable = ingram_family(args.degree, args.m)
    summary = verify_family(spec, args.height, args.jobs)
    if args.json:
        print(json.dumps({"applicable": applicable, "summary": summary.to_dict()}), file=out)
    else:
        label = "applicable" if applicable else "not covered (experimental)"
        print(f"x^{args.degree} + 1/(1 + t^{args.m}): {label}", file=out)
        print(summary.to_json(), file=out)
    return 0 if summary.has_preperiodic == 0 else EXIT_PREPERIODIC


def _cmd_survey(args, out):
    frac = survey_galois(args.degree, args.coeff_height, args.samples, args.seed)
    print(f"fraction = {frac:.4f}  (N={args.degree}, H={args.coeff_height}, "
          f"samples={args.samples}, seed={args.seed})", file=out)
    print(f"{'H':>6}  fraction", file=out)
    for H in sorted({10, 100, 1000, args.coeff_height}):
        f = frac if H == args.coeff_height else survey_galois(args.degree, H, args.samples, args.seed)
        print(f"{H:>6}  {f:.4f}", file=out)
    return 0


_COMMANDS = {
    "portrait": _cmd_portrait,
    "filter": _cmd_filter,
    "galois-cert": _cmd_galois,
    "find-w": _cmd_find_w,
    "verify-family": _cmd_verify,
    "ingram": _cmd_ingram,
    "survey": _cmd_survey,
}


_VALUE_FLAGS = {"--c", "--poly", "--w", "--seed"}


def _attach_negative_values(argv):
    """Rewrite ``--c -7/8`` as ``--c=-7/8`` so argparse does not read a flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    argv = _attach_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return _COMMANDS[args.command](args, out)


def main():
    sys.exit(run())
