"""Per-genus verification: every exact identity the package claims, re-checked.

Each genus produces a flat list of named checks with expected and observed
values rendered as exact strings. The checks deliberately re-derive
constants along independent routes (component degrees against stratum
degrees, pencil relations against closed forms, a private copy of the
curve tables) so that a single corrupted multiplicity, intersection
number, or class coefficient flips at least one check to FAIL.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from . import catalog, kodaira, testcurves, transfer
from .exact import format_rational, mat_mul
from .picard import (
    M_SIDE,
    S_SIDE,
    DivisorClass,
    GenusCtx,
    basis_class,
    labels_for,
    m_labels,
    parse_class,
    render_class,
)


@dataclass
class Check:
    name: str
    ok: bool
    expected: str
    got: str


def _fmt(value) -> str:
    if isinstance(value, DivisorClass):
        return render_class(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (Fraction, int)):
        return format_rational(value)
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    if isinstance(value, dict):
        items = ", ".join(f"{k}={_fmt(v)}" for k, v in sorted(value.items()))
        return "{" + items + "}"
    return str(value)


class _Recorder:
    def __init__(self) -> None:
        self.checks: list[Check] = []

    def add(self, name: str, expected, got) -> None:
        self.checks.append(Check(name, expected == got, _fmt(expected), _fmt(got)))

    def section(self, name: str, fn) -> None:
        try:
            fn()
        except Exception as exc:  # a crashed identity is a failed identity
            self.checks.append(
                Check(f"{name}:exception", False, "no exception", f"{type(exc).__name__}: {exc}")
            )


def _fuzz_class(ctx: GenusCtx, side: str, salt: int) -> DivisorClass:
    rng = random.Random(ctx.g * 7919 + salt)
    coeff = {label: Fraction(rng.randint(-60, 60), rng.randint(1, 16)) for label in labels_for(ctx, side)}
    return DivisorClass(ctx, side, coeff)


def _expected_curve_table(ctx: GenusCtx) -> dict[str, tuple[str, dict[str, int]]]:
    # Private copy of the pencil tables; guards the stored vectors against edits.
    g, h = ctx.g, ctx.h
    table: dict[str, tuple[str, dict[str, int]]] = {
        "B": (M_SIDE, {"lambda": g + 1, "d0": 6 * g + 18}),
        "R": (
            S_SIDE,
            {
                "lambda": (g + 1) * 2 ** (g - 1) * (2**g + 1),
                "a0": (6 * g + 18) * 2 ** (2 * g - 2),
                "b0s": (6 * g + 18) * 2 ** (g - 2) * (2 ** (g - 1) + 1),
            },
        ),
        "F0": (S_SIDE, {"lambda": 1, "a0": 12, "b1": -1}),
        "G0": (S_SIDE, {"lambda": 3, "a0": 12, "b0s": 12, "a1": -3}),
        "H0": (S_SIDE, {"b0s": 1 - g, "a1": 1}),
    }
    for i in range(1, h + 1):
        table[f"F{i}"] = (S_SIDE, {f"a{i}": 2 - 2 * i})
        table[f"G{i}"] = (S_SIDE, {f"b{i}": 2 - 2 * i})
    return table


def _nonzero(numbers) -> dict:
    return {k: v for k, v in numbers.items() if v != 0}


def run_genus(g: int) -> list[Check]:
    """Run every per-genus check; g >= 3."""
    ctx = GenusCtx(g)
    rec = _Recorder()
    n_even = transfer.even_component_degree(g)

    def counts() -> None:
        sc = transfer.spin_counts(ctx)
        for name, lhs, rhs in sc.identities():
            rec.add(f"counts:{name}", rhs, lhs)

    def projection() -> None:
        for label in m_labels(ctx):
            x = basis_class(ctx, M_SIDE, label)
            rec.add(f"projection:{label}", n_even * x, transfer.pushforward(transfer.pullback(x)))
        x = _fuzz_class(ctx, M_SIDE, salt=1)
        rec.add("projection:fuzz", n_even * x, transfer.pushforward(transfer.pullback(x)))
        prod = mat_mul(transfer.pushforward_matrix(ctx), transfer.pullback_matrix(ctx))
        size = len(m_labels(ctx))
        n_id = [[Fraction(n_even * int(i == j)) for j in range(size)] for i in range(size)]
        rec.add("projection:matrix-product", True, prod == n_id)

    def named_classes() -> None:
        rec.add(
            "canonical:splitting",
            basis_class(ctx, S_SIDE, "b0s"),
            catalog.canonical_s(ctx) - transfer.pullback(catalog.canonical_m(ctx)),
        )
        rec.add(
            "theta:pushforward",
            catalog.m1_theta_class(ctx),
            transfer.pushforward(catalog.thetanull_class(ctx)),
        )
        for cls, name in (
            (catalog.canonical_m(ctx), "canonical-m"),
            (catalog.canonical_s(ctx), "canonical-s"),
            (catalog.thetanull_class(ctx), "thetanull"),
            (catalog.m1_theta_class(ctx), "m1"),
        ):
            rec.add(f"roundtrip:{name}", cls, parse_class(render_class(cls), ctx, cls.side))

    def brill_noether() -> None:
        rule = catalog.slope_rule(ctx)
        if rule.case != catalog.CASE_COMPOSITE:
            return
        cls, spec = catalog.bn_class(ctx)
        prov = spec.provenance
        rec.add("bn:rho", -1, catalog.rho(g, prov.r, prov.d))
        rec.add("bn:slope", rule.bound, spec.slope)
        rec.add("bn:lambda", Fraction(g + 3), cls["lambda"])
        for i in range(1, ctx.h + 1):
            ratio = spec.b[i - 1] / spec.b0
            rec.add(f"bn:ratio-d{i}", Fraction(6 * i * (g - i), g + 1), ratio)
            rec.add(f"bn:ratio-bound-d{i}", True, ratio >= Fraction(4, 3))

    def curve_tables() -> None:
        curves = testcurves.curve_map(ctx)
        expected = _expected_curve_table(ctx)
        rec.add("curves:names", sorted(expected), sorted(curves))
        for name, (side, numbers) in expected.items():
            got = curves.get(name)
            rec.add(
                f"curves:table:{name}",
                {"side": side, **_nonzero({k: Fraction(v) for k, v in numbers.items()})},
                {"side": got.side, **_nonzero(got.numbers)} if got is not None else "missing",
            )

    def pairings() -> None:
        curves = testcurves.curve_map(ctx)
        theta = catalog.thetanull_class(ctx)
        for name in ("F0", "G0", "H0"):
            rec.add(f"pairing:{name}*theta", Fraction(0), testcurves.intersect(curves[name], theta))
        for i in range(1, ctx.h + 1):
            rec.add(f"pairing:F{i}*theta", Fraction(0), testcurves.intersect(curves[f"F{i}"], theta))
            rec.add(f"pairing:G{i}*theta", Fraction(i - 1), testcurves.intersect(curves[f"G{i}"], theta))

    def lift() -> None:
        curves = testcurves.curve_map(ctx)
        b, r = curves["B"], curves["R"]
        probes = [(label, basis_class(ctx, M_SIDE, label)) for label in m_labels(ctx)]
        probes.append(("fuzz", _fuzz_class(ctx, M_SIDE, salt=2)))
        for label, x in probes:
            rec.add(
                f"lift:{label}",
                n_even * testcurves.intersect(b, x),
                testcurves.intersect(r, transfer.pullback(x)),
            )

    def pullback_compat() -> None:
        curves = testcurves.curve_map(ctx)
        # the elliptic-tail pencil downstairs: degree 12 on d0, -1 on d1
        tail = {"lambda": Fraction(1), "d0": Fraction(12), "d1": Fraction(-1)}
        for label in m_labels(ctx):
            x = transfer.pullback(basis_class(ctx, M_SIDE, label))
            rec.add(f"compat:F0:{label}", tail.get(label, Fraction(0)),
                    testcurves.intersect(curves["F0"], x))
            rec.add(f"compat:G0:{label}", 3 * tail.get(label, Fraction(0)),
                    testcurves.intersect(curves["G0"], x))
        rec.add("compat:H0:d0", Fraction(2 - 2 * g),
                testcurves.intersect(curves["H0"], transfer.pullback(basis_class(ctx, M_SIDE, "d0"))))
        for j in range(1, ctx.h + 1):
            rec.add(f"compat:H0:d{j}", Fraction(1 if j == 1 else 0),
                    testcurves.intersect(curves["H0"], transfer.pullback(basis_class(ctx, M_SIDE, f"d{j}"))))
        for i in range(1, ctx.h + 1):
            for j in range(ctx.h + 1):
                x = transfer.pullback(basis_class(ctx, M_SIDE, f"d{j}"))
                want = Fraction(2 - 2 * i) if i == j else Fraction(0)
                rec.add(f"compat:F{i}:d{j}", want, testcurves.intersect(curves[f"F{i}"], x))
                rec.add(f"compat:G{i}:d{j}", want, testcurves.intersect(curves[f"G{i}"], x))
        # branching consistency at the genus-0 boundary, in covering degrees
        f0, g0 = curves["F0"], curves["G0"]
        rec.add("compat:F0-branching", Fraction(12), f0["a0"] + 2 * f0["b0s"])
        rec.add("compat:G0-branching", Fraction(36), g0["a0"] + 2 * g0["b0s"])

    def theta_solve() -> None:
        solved = testcurves.solve_thetanull(ctx, check=False)
        rec.add("solve:thetanull", catalog.thetanull_class(ctx), solved)
        curves = testcurves.curve_map(ctx)
        for name in ("F0", "G0", "H0"):
            rec.add(f"solve:residual:{name}", Fraction(0), testcurves.intersect(curves[name], solved))

    def classification() -> None:
        rk = kodaira.uniruled_certificate(ctx)
        rec.add("kodaira:rk-sign", g <= 7, rk < 0)
        spec = catalog.choose_d(ctx)
        nu = kodaira.nu_value(spec)
        rec.add("kodaira:nu-from-slope", 11 - Fraction(3, 2) * catalog.slope_rule(ctx).bound, nu)
        if g == 8:
            rec.add("kodaira:nu-zero", Fraction(0), nu)
        if g >= 9:
            rec.add("kodaira:nu-positive", True, nu > 0)
        dec = kodaira.decompose_canonical(ctx, spec)
        if spec.complete:
            scale = Fraction(3, 2) / spec.b0
            assembled = (
                dec.nu * basis_class(ctx, S_SIDE, "lambda")
                + 8 * catalog.thetanull_class(ctx)
                + scale * transfer.pullback(catalog.divisor_class(spec))
                + DivisorClass(ctx, S_SIDE, {
                    **{f"a{i}": dec.c[i - 1] for i in range(1, ctx.h + 1)},
                    **{f"b{i}": dec.c_prime[i - 1] for i in range(1, ctx.h + 1)},
                })
            )
            rec.add("kodaira:decomposition-identity", catalog.canonical_s(ctx), assembled)
            if g >= 8:
                rec.add("kodaira:remainders-nonnegative", True, dec.remainders_nonnegative())
        verdict = kodaira.classify(ctx).verdict
        expected = kodaira.UNIRULED if g <= 7 else (
            kodaira.KAPPA_NONNEGATIVE if g == 8 else kodaira.GENERAL_TYPE)
        rec.add("kodaira:verdict", expected, verdict)

    rec.section("counts", counts)
    rec.section("projection", projection)
    rec.section("named-classes", named_classes)
    rec.section("brill-noether", brill_noether)
    rec.section("curves", curve_tables)
    rec.section("pairings", pairings)
    rec.section("lift", lift)
    rec.section("compat", pullback_compat)
    rec.section("solve", theta_solve)
    rec.section("kodaira", classification)
    return rec.checks


def build_report(start: int, end: int) -> dict:
    """Run the suite over [start, end] and assemble the machine-readable report."""
    if start < 3 or end < start:
        raise ValueError(f"verification range must satisfy 3 <= start <= end, got {start}..{end}")
    genera = []
    failures = []
    total = 0
    for g in range(start, end + 1):
        checks = run_genus(g)
        failed = [c for c in checks if not c.ok]
        genera.append({"genus": g, "checks": len(checks), "failed": len(failed)})
        failures.extend(
            {"check-name": c.name, "genus": g, "expected": c.expected, "got": c.got} for c in failed
        )
        total += len(checks)
    return {
        "command": "verify",
        "genus-range": [start, end],
        "status": "OK" if not failures else "FAIL",
        "failures": failures,
        "payload": {"genera": genera, "total-checks": total},
    }


def report_json(report: dict) -> str:
    """Canonical serialization: sorted keys, fixed layout, round-trips byte-identically."""
    return json.dumps(report, indent=2, sort_keys=True)
