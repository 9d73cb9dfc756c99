"""Command-line front end.

Usage:
    niven witness e --q 10 --eps 1e-30 --json
    niven witness pi --candidate 22/7 --eps 1e-40
    niven bounds solve pi --candidate 22/7
    niven bounds solve exp --r 2 --q 7
    niven legendre verify --n-max 8 --r 1
    niven identity check --count 200 --seed 0
    niven approx e --r 1 --n-max 6
    niven fourier demo
    niven naive-bound demo

Exit codes: 0 computed (ok or falsified), 2 usage error, 3 resource cap
exceeded, 4 indeterminate at the requested precision, 5 internal defect.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import approx, bigmath, foperator, legendre, witness
from .bigmath import Enclosure, decimal_approx, format_rational, int_to_str, parse_rational, sci_approx
from .errors import (
    DomainError,
    IndeterminateError,
    InvariantError,
    ResourceLimitError,
)
from .polycore import RatPoly, _build, affine_substitute

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_INDETERMINATE = 4
EXIT_DEFECT = 5

DEFAULT_EPS = Fraction(1, 10**30)


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive_rational_arg(text: str) -> Fraction:
    value = _rational_arg(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return value


def _candidate_arg(text: str) -> Fraction:
    value = _rational_arg(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"candidate {text!r} must be a positive rational")
    return value


def _enc(e: Enclosure) -> dict:
    return {"lo": format_rational(e.lo), "hi": format_rational(e.hi)}


def _approx_enc(e: Enclosure, digits: int = 15) -> str:
    return f"[{sci_approx(e.lo, digits)}, {sci_approx(e.hi, digits)}]"


def _short_int(n: int, limit: int = 60) -> str:
    s = int_to_str(n)
    if len(s) <= limit:
        return s
    return f"{s[:20]}...{s[-20:]} ({len(s)} digits)"


# ---------------------------------------------------------------------------
# Subcommand handlers. Each returns (inputs, results, status, text_lines).
# ---------------------------------------------------------------------------


def cmd_witness_e(args):
    cert = witness.fourier_witness(args.q, args.eps)
    lines = [
        f"Fourier witness for e with denominator q = {args.q}",
        f"  integer part   S = q! * sum_(k<=q) 1/k! = {_short_int(cert.integer_parts[1])}",
        f"  remainder      T = q!*e - S in {_approx_enc(cert.enclosed_side)}  (approximate)",
        f"  bound          T <= 1/q = {format_rational(cert.bound)}",
        f"  candidate {format_rational(cert.candidate)} forces the integer q!p/q - S = "
        f"{_short_int(cert.integer_side)} to equal T",
        f"  verdict: {cert.verdict}"
        + (" (no integer lies strictly between 0 and 1)" if cert.falsified else ""),
    ]
    return {"q": str(args.q)}, cert.to_dict(), cert.verdict, lines


def cmd_witness_pi(args):
    cand = args.candidate
    cert = witness.niven_falsify(
        cand.numerator, cand.denominator, n=args.n, eps=args.eps, cap=args.cap, work_cap=args.work_cap
    )
    lines = [
        f"Niven certificate for the candidate pi = {format_rational(cand)}",
        f"  n = {cert.n}   (f(x) = x^n (a - b x)^n, scaled by b^n/n!)",
        f"  integer side   (b^n F(a/b) + b^n F(0))/n! = {_short_int(cert.integer_side)}",
        f"  enclosed side  (b^n/n!) int_0^(a/b) f(x) sin x dx in {_approx_enc(cert.enclosed_side, 20)}"
        "  (approximate)",
        f"  area bound     a^(2n+1)/(b n!) ~ {sci_approx(cert.bound)}",
        f"  difference excludes 0: {cert.difference.excludes_zero()}",
        f"  verdict: {cert.verdict}" + (f" via {cert.mechanism}" if cert.mechanism else ""),
        f"  precision used: 2^-{cert.precision.denominator.bit_length() - 1} or finer",
    ]
    inputs = {"candidate": format_rational(cand), "n": None if args.n is None else str(args.n)}
    return inputs, cert.to_dict(), cert.verdict, lines


def cmd_bounds_solve(args):
    kind = args.kind
    if kind == "pi":
        if args.candidate is None:
            raise UsageError("bounds solve pi needs --candidate A/B")
        a, b = args.candidate.numerator, args.candidate.denominator
        n = witness.minimal_n_pi(a, b, args.cap)
        bound = lambda m: witness.pi_bound(a, b, m)
        inputs = {"candidate": format_rational(args.candidate)}
        formula = "a^(2n+1)/(b n!)"
    else:
        if args.r is None or args.q is None:
            raise UsageError(f"bounds solve {kind} needs --r and --q")
        r, q = args.r, args.q
        inputs = {"r": str(r), "q": str(q)}
        if kind == "exp":
            n = witness.minimal_n_exp(r, q, args.cap)
            bound = lambda m: witness.crude_bound_exp(r, q, m)
            formula = "q r^(2n+1) E/n!  (E >= e^r)"
        else:
            n = witness.minimal_n_cbs(r, q, args.cap)
            bound = lambda m: legendre.cbs_bound(m, r, q)
            formula = "2 q r^(2n+1)/(n! (2n+1))"
    at_n = bound(n)
    results = {
        "kind": kind,
        "n": n,
        "bound_at_n": format_rational(at_n) if n < 5000 else None,
        "bound_below_one": True,
        "definition": "first n, scanning upward from the first valid n, with bound < 1",
    }
    lines = [
        f"Minimal n for the {kind} bound {formula}",
        f"  n = {n}",
    ]
    if n < 5000:
        lines.append(f"  bound(n) ~ {sci_approx(at_n)} < 1")
    return inputs, results, "ok", lines


def legendre_checks(n_max: int, r: Fraction):
    """Exact identity checks for the shifted Legendre family; one dict per check."""
    checks = []

    def record(name, n, ok):
        checks.append({"check": name, "n": n, "pass": bool(ok)})

    basis = {}
    for n in range(n_max + 1):
        by_sub = legendre.shifted_legendre_by_substitution(n, r)
        direct = legendre.shifted_legendre(n, r)
        rod = legendre.rodrigues_shifted(n, r)
        record("triple-construction", n, by_sub == direct == rod)
        basis[n] = direct
        p = legendre.legendre_sum_formula(n)
        reflected = affine_substitute(p, -1, 0)
        record("parity", n, reflected == p * (-1) ** n)
        record("endpoint-values", n, direct(0) == (-1) ** n and direct(r) == 1)
        record("norm", n, legendre.inner_product(direct, direct, r) == r / (2 * n + 1))
        record(
            "lower-degree-annihilation",
            n,
            all(legendre.inner_product(direct, RatPoly.monomial(k), r) == 0 for k in range(n)),
        )
        if r.denominator == 1:
            scaled = legendre.scaled_integer_legendre(n, int(r))
            record("integer-scaling", n, scaled == direct * r**n)
    for n in range(n_max + 1):
        record("orthogonality", n, all(legendre.inner_product(basis[m], basis[n], r) == 0 for m in range(n)))
    return checks


def cmd_legendre_verify(args):
    checks = legendre_checks(args.n_max, args.r)
    failed = [c for c in checks if not c["pass"]]
    lines = [f"Shifted Legendre checks on [0, {format_rational(args.r)}] for n <= {args.n_max}"]
    names = sorted({c["check"] for c in checks})
    for name in names:
        group = [c for c in checks if c["check"] == name]
        ok = all(c["pass"] for c in group)
        lines.append(f"  {name:28s} {'pass' if ok else 'FAIL'} ({len(group)} cases)")
    if failed:
        raise InvariantError(f"{len(failed)} Legendre identity checks failed: {failed[:3]}")
    inputs = {"n_max": str(args.n_max), "r": format_rational(args.r)}
    return inputs, {"checks": checks, "all_pass": True}, "ok", lines


def random_instances(count: int, seed: int, degree: int):
    """Deterministic random (f, c, kind) triples for the identity check."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        deg = rng.randint(0, degree)
        f = _build([rng.randint(-5, 5) for _ in range(deg + 1)])
        c = Fraction(rng.randint(1, 60), 20)
        kind = rng.choice(["exp", "sin"])
        out.append((f, c, kind))
    return out


def identity_agreement(f, c, kind, eps):
    """Enclose the same integral by the exact form and by the series route."""
    if kind == "exp":
        exact = foperator.exp_integral_exact(f, c).enclose(eps)
    else:
        exact = foperator.sin_integral_exact(f, c).enclose(eps)
    series = foperator.enclose_integral_series(f, c, kind, eps)
    return exact, series


def cmd_identity_check(args):
    rows = []
    disagreements = 0
    for f, c, kind in random_instances(args.count, args.seed, args.degree):
        exact, series = identity_agreement(f, c, kind, args.eps)
        ok = exact.intersects(series)
        disagreements += not ok
        rows.append(
            {
                "f": [format_rational(x) for x in f.coeffs],
                "c": format_rational(c),
                "kind": kind,
                "exact": _enc(exact),
                "series": _enc(series),
                "intersect": ok,
            }
        )
    lines = [
        f"Exact linear form vs truncated-series enclosure on {args.count} random integrals "
        f"(seed {args.seed}, degree <= {args.degree})",
        f"  agreements: {args.count - disagreements}/{args.count}",
    ]
    if disagreements:
        raise InvariantError(f"{disagreements} integral enclosures disagree")
    inputs = {"count": str(args.count), "seed": str(args.seed), "degree": str(args.degree)}
    return inputs, {"instances": rows, "disagreements": 0}, "ok", lines


def cmd_approx_e(args):
    rows = approx.er_error_table(args.r, args.n_max, args.eps)
    lines = [f"Approximants F(0)/F(r) to e^{args.r}  (decimals approximate)"]
    for row in rows:
        if row.degenerate:
            lines.append(f"  n={row.n:3d}  degenerate: F(r) = 0")
            continue
        lines.append(
            f"  n={row.n:3d}  {format_rational(row.approximant):>24s}  "
            f"error ~ {sci_approx(row.error.midpoint):>14s}  bound ~ {sci_approx(row.bound)}"
        )
    try:
        cf = approx.cf_convergents(bigmath.enclose_exp(args.r, args.eps), 10)
        cf_out = [format_rational(x) for x in cf]
        lines.append("  continued-fraction convergents of e^r: " + ", ".join(str(x) for x in cf))
    except IndeterminateError:
        cf_out = None
    results = {"rows": [row.to_dict() for row in rows], "cf_convergents": cf_out}
    return {"r": str(args.r), "n_max": str(args.n_max)}, results, "ok", lines


def cmd_fourier_demo(args):
    rows = []
    lines = ["q   remainder T = q!e - q!sum 1/k! (approx)   1/q        verdict"]
    status = "falsified"
    for q in range(1, args.q_max + 1):
        cert = witness.fourier_witness(q, args.eps)
        rows.append(cert.to_dict())
        if not cert.falsified:
            status = "indeterminate"
        lines.append(
            f"{q:<3d} {decimal_approx(cert.enclosed_side.midpoint, 18):<40s} "
            f"{format_rational(cert.bound):<10s} {cert.verdict}"
        )
    return {"q_max": str(args.q_max)}, {"certificates": rows}, status, lines


def cmd_naive_demo(args):
    rows = []
    lines = ["Naive geometric bound r^(q+1)/(q+1-r) on the scaled tail of e^r"]
    for r in range(1, args.r_max + 1):
        for q in range(r, args.q_max + 1):
            bound, fails = witness.naive_er_bound(r, q)
            rows.append({"r": r, "q": q, "bound": format_rational(bound), "fails": fails})
            lines.append(
                f"  r={r} q={q:<3d} bound ~ {decimal_approx(bound, 6):>18s}  {'fails' if fails else 'contradiction'}"
            )
    return {"r_max": str(args.r_max), "q_max": str(args.q_max)}, {"rows": rows}, "ok", lines


# ---------------------------------------------------------------------------
# Parser and driver
# ---------------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--eps", type=_positive_rational_arg, default=DEFAULT_EPS,
                   help="target enclosure width, e.g. 1e-30 or 1/10^30 (default 1e-30)")
    p.add_argument("--cap", type=int, default=None,
                   help="scan cap for minimal-n solvers (default NIVEN_CAP or 10^6)")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--out", metavar="FILE", help="also write the report to FILE")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="niven", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="group", required=True)

    w = sub.add_parser("witness", help="contradiction certificates").add_subparsers(dest="target", required=True)
    we = w.add_parser("e", parents=[common], help="Fourier witness for e")
    we.add_argument("--q", type=int, required=True)
    we.set_defaults(handler=cmd_witness_e, command="witness e")
    wp = w.add_parser("pi", parents=[common], help="Niven falsifier for a rational pi candidate")
    wp.add_argument("--candidate", type=_candidate_arg, required=True)
    wp.add_argument("--n", type=int, default=None)
    wp.add_argument("--work-cap", type=int, default=witness.DEFAULT_WORK_CAP)
    wp.set_defaults(handler=cmd_witness_pi, command="witness pi")

    b = sub.add_parser("bounds", help="minimal-n solvers").add_subparsers(dest="action", required=True)
    bs = b.add_parser("solve", parents=[common], help="first n whose bound drops below 1")
    bs.add_argument("kind", choices=["exp", "pi", "cbs"])
    bs.add_argument("--r", type=int)
    bs.add_argument("--q", type=int)
    bs.add_argument("--candidate", type=_candidate_arg)
    bs.set_defaults(handler=cmd_bounds_solve, command="bounds solve")

    lg = sub.add_parser("legendre", help="shifted Legendre identities").add_subparsers(dest="action", required=True)
    lv = lg.add_parser("verify", parents=[common], help="exact construction, norm and orthogonality checks")
    lv.add_argument("--n-max", type=int, default=8)
    lv.add_argument("--r", type=_positive_rational_arg, default=Fraction(1))
    lv.set_defaults(handler=cmd_legendre_verify, command="legendre verify")

    ident = sub.add_parser("identity", help="integral identity cross-checks").add_subparsers(dest="action", required=True)
    ic = ident.add_parser("check", parents=[common], help="exact form vs series on random integrals")
    ic.add_argument("--count", type=int, default=200)
    ic.add_argument("--seed", type=int, default=0)
    ic.add_argument("--degree", type=int, default=6)
    ic.set_defaults(handler=cmd_identity_check, command="identity check")

    ap = sub.add_parser("approx", help="rational approximations to e^r").add_subparsers(dest="target", required=True)
    ae = ap.add_parser("e", parents=[common], help="approximant table with error enclosures")
    ae.add_argument("--r", type=int, default=1)
    ae.add_argument("--n-max", type=int, default=6)
    ae.set_defaults(handler=cmd_approx_e, command="approx e")

    fd = sub.add_parser("fourier", help="Fourier witnesses for a range of q").add_subparsers(dest="action", required=True)
    fdd = fd.add_parser("demo", parents=[common], help="tail enclosures for q = 1..q-max")
    fdd.add_argument("--q-max", type=int, default=10)
    fdd.set_defaults(handler=cmd_fourier_demo, command="fourier demo")

    nb = sub.add_parser("naive-bound", help="where the geometric tail bound fails").add_subparsers(dest="action", required=True)
    nbd = nb.add_parser("demo", parents=[common], help="naive bound grid over r and q")
    nbd.add_argument("--r-max", type=int, default=3)
    nbd.add_argument("--q-max", type=int, default=8)
    nbd.set_defaults(handler=cmd_naive_demo, command="naive-bound demo")
    return parser


def render_json(report: dict) -> str:
    """Canonical serialisation: sorted keys, no floats, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


_EXIT_FOR_STATUS = {"ok": EXIT_OK, "falsified": EXIT_OK, "indeterminate": EXIT_INDETERMINATE}


def run(argv=None, stdout=None, stderr=None) -> int:
    """Parse argv, run one subcommand, write its report, return the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.cap is None:
        env = os.environ.get("NIVEN_CAP")
        args.cap = int(env) if env else witness.DEFAULT_CAP

    precision = format_rational(args.eps)
    try:
        inputs, results, status, lines = args.handler(args)
        code = _EXIT_FOR_STATUS[status]
        message = None
    except (UsageError, DomainError, ValueError) as exc:
        code, message = EXIT_USAGE, str(exc)
    except ResourceLimitError as exc:
        code, message = EXIT_RESOURCE, str(exc)
    except IndeterminateError as exc:
        code, message = EXIT_INDETERMINATE, str(exc)
    except InvariantError as exc:
        code, message = EXIT_DEFECT, str(exc)
    if message is not None:
        inputs, results, status, lines = {}, {"error": message}, "error", [f"error: {message}"]

    if args.json:
        text = render_json(
            {
                "command": args.command,
                "inputs": inputs,
                "results": results,
                "precision": precision,
                "status": status,
            }
        )
    else:
        text = "\n".join(lines) + "\n"
    target = stderr if (status == "error" and not args.json) else stdout
    target.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
