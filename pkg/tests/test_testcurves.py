from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinpic.catalog import canonical_s, thetanull_class
from spinpic.errors import GenusMismatchError, SideMismatchError
from spinpic.picard import (
    DivisorClass,
    GenusCtx,
    M_SIDE,
    S_SIDE,
    basis_class,
    labels_for,
)
from spinpic.testcurves import (
    curve_map,
    intersect,
    solve_thetanull,
    standard_curves,
    thetanull_system,
)
from spinpic.transfer import even_component_degree, pullback

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=32)


def test_curve_inventory():
    ctx = GenusCtx(7)
    names = {c.name for c in standard_curves(ctx)}
    assert names == {"B", "R", "F0", "G0", "H0", "F1", "F2", "F3", "G1", "G2", "G3"}


def test_r_vector_genus7():
    r = curve_map(GenusCtx(7))["R"]
    assert r["lambda"] == 8 * 64 * 129
    assert r["a0"] == 60 * 4096
    assert r["b0s"] == 60 * 32 * 65
    assert r["a1"] == 0 and r["b3"] == 0


def test_h0_vector_genus5():
    h0 = curve_map(GenusCtx(5))["H0"]
    assert h0["b0s"] == -4
    assert h0["a1"] == 1
    assert h0["lambda"] == 0 and h0["a0"] == 0 and h0["b1"] == 0


@pytest.mark.parametrize("g", (3, 6, 11, 20))
def test_f0_meets_lambda_once(g):
    assert curve_map(GenusCtx(g))["F0"]["lambda"] == 1


def test_g0_branching_consistency():
    # a0 + 2*b0s must equal three times the degree-12 elliptic pencil on d0
    g0 = curve_map(GenusCtx(6))["G0"]
    assert g0["a0"] + 2 * g0["b0s"] == 36


def test_intersect_errors():
    ctx = GenusCtx(5)
    b = curve_map(ctx)["B"]
    with pytest.raises(SideMismatchError):
        intersect(b, thetanull_class(ctx))
    with pytest.raises(GenusMismatchError):
        intersect(b, basis_class(GenusCtx(7), M_SIDE, "lambda"))


@pytest.mark.parametrize("g", range(3, 26))
def test_vanishing_suite(g):
    ctx = GenusCtx(g)
    curves = curve_map(ctx)
    theta = thetanull_class(ctx)
    for name in ("F0", "G0", "H0"):
        assert intersect(curves[name], theta) == 0
    for i in range(1, ctx.h + 1):
        assert intersect(curves[f"F{i}"], theta) == 0
        assert intersect(curves[f"G{i}"], theta) == i - 1


def test_g1_theta_regression():
    # the sign convention pins G1 . theta = 0 (the i-1 count at i = 1)
    ctx = GenusCtx(3)
    assert intersect(curve_map(ctx)["G1"], thetanull_class(ctx)) == 0


@pytest.mark.parametrize("g", range(3, 26))
def test_lift_identity_on_basis(g):
    ctx = GenusCtx(g)
    curves = curve_map(ctx)
    n = even_component_degree(g)
    for label in labels_for(ctx, M_SIDE):
        x = basis_class(ctx, M_SIDE, label)
        assert intersect(curves["R"], pullback(x)) == n * intersect(curves["B"], x)


@given(st.integers(3, 14), st.data())
def test_lift_identity_random(g, data):
    ctx = GenusCtx(g)
    curves = curve_map(ctx)
    x = DivisorClass(ctx, M_SIDE, {l: data.draw(rationals) for l in labels_for(ctx, M_SIDE)})
    assert intersect(curves["R"], pullback(x)) == even_component_degree(g) * intersect(
        curves["B"], x
    )


@pytest.mark.parametrize("g", (3, 5, 8, 13))
def test_pullback_compatibility(g):
    ctx = GenusCtx(g)
    curves = curve_map(ctx)
    for i in range(1, ctx.h + 1):
        for j in range(1, ctx.h + 1):
            x = pullback(basis_class(ctx, M_SIDE, f"d{j}"))
            want = 2 - 2 * i if i == j else 0
            assert intersect(curves[f"F{i}"], x) == want
    d0_up = pullback(basis_class(ctx, M_SIDE, "d0"))
    assert intersect(curves["H0"], d0_up) == 2 - 2 * g


def test_thetanull_system_genus5():
    rows, rhs = thetanull_system(GenusCtx(5))
    assert rows == [
        [Fraction(1), Fraction(-12), Fraction(0)],
        [Fraction(3), Fraction(-12), Fraction(-12)],
        [Fraction(0), Fraction(0), Fraction(4)],
    ]
    assert rhs == [Fraction(-1, 2), Fraction(0), Fraction(0)]


@pytest.mark.parametrize("g", range(3, 26))
def test_solve_thetanull_matches_closed_form(g):
    ctx = GenusCtx(g)
    solved = solve_thetanull(ctx)
    assert solved == thetanull_class(ctx)
    assert solved["lambda"] == Fraction(1, 4)
    assert solved["a0"] == Fraction(-1, 16)
    assert solved["b0s"] == 0


def test_solve_residuals_vanish():
    ctx = GenusCtx(9)
    solved = solve_thetanull(ctx)
    curves = curve_map(ctx)
    for name in ("F0", "G0", "H0"):
        assert intersect(curves[name], solved) == 0


def test_r_pairs_canonical_negative_then_positive():
    assert intersect(curve_map(GenusCtx(7))["R"], canonical_s(GenusCtx(7))) == -7296
    assert intersect(curve_map(GenusCtx(8))["R"], canonical_s(GenusCtx(8))) == 51456
