"""Command-line front end.

Subcommands: classify, class, pair, solve-thetanull, counts, verify.
Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
input errors. All numbers print as exact "p/q" strings; there is no
floating point anywhere in the output. Set SPINPIC_NO_COLOR to disable
ANSI styling (it is also disabled when stdout is not a terminal).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import catalog, kodaira, testcurves, transfer, verify
from .errors import USAGE_ERRORS, SpinPicError
from .exact import format_rational
from .picard import GenusCtx, parse_class, render_class

_CURVE_TOKEN_RE = re.compile(r"^(B|R|F\d+|G\d+|H0)$")

_NAMED_CLASSES = ("canonical-m", "canonical-s", "thetanull", "bn", "m1", "D")


def _color_enabled() -> bool:
    if os.environ.get("SPINPIC_NO_COLOR"):
        return False
    return sys.stdout.isatty()


def _style(text: str, code: str) -> str:
    if _color_enabled():
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _ok(text: str) -> str:
    return _style(text, "32")


def _bad(text: str) -> str:
    return _style(text, "31")


def _canonical_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _named_class(name: str, ctx: GenusCtx):
    if name == "canonical-m":
        return catalog.canonical_m(ctx)
    if name == "canonical-s":
        return catalog.canonical_s(ctx)
    if name == "thetanull":
        return catalog.thetanull_class(ctx)
    if name == "m1":
        return catalog.m1_theta_class(ctx)
    if name == "bn":
        return catalog.bn_class(ctx)[0]
    if name == "D":
        return catalog.divisor_class(catalog.choose_d(ctx))
    return None


def _load_user_divisor(args, ctx: GenusCtx):
    if getattr(args, "divisor_file", None) is None:
        return None
    return catalog.load_divisor_spec(Path(args.divisor_file), ctx)


def _cmd_classify(args) -> int:
    ctx = GenusCtx(args.genus)
    cert = kodaira.classify(ctx, _load_user_divisor(args, ctx))
    if args.json:
        print(_canonical_json(kodaira.certificate_json(cert)))
        return 0
    print(f"genus {ctx.g}: {cert.verdict}")
    if cert.rk is not None:
        print(f"  R . K = {format_rational(cert.rk)}")
    dec = cert.decomposition
    if dec is not None:
        print(f"  nu = {format_rational(dec.nu)}")
        print(f"  divisor D: {catalog.provenance_name(dec.d_spec.provenance)}, "
              f"slope a/b0 = {format_rational(dec.d_spec.slope)}")
        if dec.conditional:
            print("  remainders: CONDITIONAL (no boundary coefficients supplied)")
        else:
            print(f"  remainders c  = ({', '.join(format_rational(v) for v in dec.c)})")
            print(f"  remainders c' = ({', '.join(format_rational(v) for v in dec.c_prime)})")
    print(f"  flags: {', '.join(cert.flags) if cert.flags else '(none)'}")
    for note in cert.annotations:
        print(f"  note: {note}")
    for hyp in cert.citations:
        print(f"  uses: {hyp}")
    return 0


def _cmd_class(args) -> int:
    ctx = GenusCtx(args.genus)
    cls = _named_class(args.name, ctx)
    print(render_class(cls))
    return 0


def _cmd_pair(args) -> int:
    ctx = GenusCtx(args.genus)
    curves = testcurves.curve_map(ctx)
    if args.dump:
        table = {
            name: {label: format_rational(v) for label, v in c.numbers.items()}
            for name, c in curves.items()
        }
        print(_canonical_json(table))
        return 0
    if args.curve is None or args.classexpr is None:
        print("error: pair needs CURVE and CLASSEXPR (or --dump)", file=sys.stderr)
        return 2
    token = args.curve
    if not _CURVE_TOKEN_RE.match(token) or token not in curves:
        print(
            f"error: unknown curve {token!r} at genus {ctx.g} "
            f"(available: {', '.join(curves)})",
            file=sys.stderr,
        )
        return 2
    curve = curves[token]
    if args.classexpr in _NAMED_CLASSES:
        cls = _named_class(args.classexpr, ctx)
    else:
        cls = parse_class(args.classexpr, ctx, curve.side)
    print(format_rational(testcurves.intersect(curve, cls)))
    return 0


def _cmd_solve_thetanull(args) -> int:
    ctx = GenusCtx(args.genus)
    rows, rhs = testcurves.thetanull_system(ctx)
    unknowns = ("Lbar", "A0bar", "B0bar")
    print(f"genus {ctx.g}: pencil relations in ({', '.join(unknowns)})")
    for name, row, r in zip(("F0", "G0", "H0"), rows, rhs):
        parts = []
        for c, u in zip(row, unknowns):
            term = f"{format_rational(abs(c))}*{u}"
            parts.append((f"- {term}" if c < 0 else f"+ {term}") if parts else
                         (f"-{term}" if c < 0 else term))
        print(f"  {name}: {' '.join(parts)} = {format_rational(r)}")
    solved = testcurves.solve_thetanull(ctx, check=False)
    lam, a0, b0 = (solved["lambda"], -solved["a0"], -solved["b0s"])
    print(f"solution: Lbar = {format_rational(lam)}, A0bar = {format_rational(a0)}, "
          f"B0bar = {format_rational(b0)}")
    closed = catalog.thetanull_class(ctx)
    print(f"solved class: {render_class(solved)}")
    print(f"closed form:  {render_class(closed)}")
    if solved == closed:
        print(_ok("MATCH"))
        return 0
    print(_bad("MISMATCH"))
    return 1


def _cmd_counts(args) -> int:
    ctx = GenusCtx(args.genus)
    sc = transfer.spin_counts(ctx)
    print(f"genus {ctx.g}: covering of total degree {sc.total_degree}")
    print(f"  even component degree {sc.n_even}")
    print(f"  odd component degree  {sc.n_odd}")
    print(f"  deg(A0/d0) = {sc.deg_a0}")
    print(f"  deg(B0/d0) = {sc.deg_b0}")
    for i in range(1, ctx.h + 1):
        print(f"  deg(A{i}/d{i}) = {sc.deg_a[i - 1]}")
        print(f"  deg(B{i}/d{i}) = {sc.deg_b[i - 1]}")
    failed = 0
    for name, lhs, rhs in sc.identities():
        good = lhs == rhs
        failed += 0 if good else 1
        mark = _ok("ok") if good else _bad("FAIL")
        print(f"  identity {name}: {lhs} == {rhs}  {mark}")
    return 0 if failed == 0 else 1


def _cmd_verify(args) -> int:
    report = verify.build_report(args.start, args.end)
    if args.json:
        print(verify.report_json(report))
    else:
        for entry in report["payload"]["genera"]:
            status = _ok("ok") if entry["failed"] == 0 else _bad(f"FAIL({entry['failed']})")
            print(f"genus {entry['genus']}: {entry['checks']} checks  {status}")
        for failure in report["failures"]:
            print(
                f"  FAIL {failure['check-name']} at genus {failure['genus']}: "
                f"expected {failure['expected']}, got {failure['got']}"
            )
        total = report["payload"]["total-checks"]
        label = _ok("OK") if report["status"] == "OK" else _bad("FAIL")
        print(f"verify {args.start}..{args.end}: {label} "
              f"({total} checks, {len(report['failures'])} failures)")
    return 0 if report["status"] == "OK" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinpic",
        description="Exact-rational divisor-class calculus on the moduli spaces of "
                    "curves and even spin curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_genus(p: argparse.ArgumentParser) -> None:
        p.add_argument("-g", "--genus", type=int, required=True, help="genus (>= 3)")

    p = sub.add_parser("classify", help="emit the Kodaira-type certificate for one genus")
    add_genus(p)
    p.add_argument("--divisor-file", help="JSON file with a user-supplied divisor spec")
    p.add_argument("--json", action="store_true", help="print the certificate as JSON")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("class", help="print a named divisor class")
    p.add_argument("name", choices=_NAMED_CLASSES)
    add_genus(p)
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("pair", help="pair a test curve with a class")
    p.add_argument("curve", nargs="?", help="B, R, F0, G0, H0, or Fi/Gi as F3, G2, ...")
    p.add_argument("classexpr", nargs="?",
                   help="named class or class expression, e.g. '1/4*lambda - 1/16*a0'")
    add_genus(p)
    p.add_argument("--dump", action="store_true", help="print the full curve table as JSON")
    p.set_defaults(func=_cmd_pair)

    p = sub.add_parser("solve-thetanull",
                       help="re-derive the theta-null class from the pencil relations")
    add_genus(p)
    p.set_defaults(func=_cmd_solve_thetanull)

    p = sub.add_parser("counts", help="print the spin-structure counts and their identities")
    add_genus(p)
    p.set_defaults(func=_cmd_counts)

    p = sub.add_parser("verify", help="run the full per-genus verification suite")
    p.add_argument("--from", dest="start", type=int, default=3, help="first genus (default 3)")
    p.add_argument("--to", dest="end", type=int, default=22, help="last genus (default 22)")
    p.add_argument("--json", action="store_true", help="print the machine-readable report")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SpinPicError as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
