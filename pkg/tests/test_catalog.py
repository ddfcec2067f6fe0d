import json
from fractions import Fraction

import pytest

from spinpic.catalog import (
    BrillNoether,
    CASE_COMPOSITE,
    CASE_EVEN_PRIME_PLUS_ONE,
    CASE_GENUS_TEN,
    DivisorSpec,
    GiesekerPetri,
    K3,
    UserSupplied,
    bn_class,
    canonical_m,
    canonical_s,
    choose_d,
    divisor_class,
    load_divisor_spec,
    m1_theta_class,
    rho,
    slope_rule,
    thetanull_class,
)
from spinpic.errors import (
    DivisorSpecError,
    GenusMismatchError,
    NotCompositeError,
    SlopeViolationError,
)
from spinpic.picard import GenusCtx, M_SIDE, S_SIDE, basis_class, parse_class, render_class
from spinpic.transfer import pullback, pushforward


def test_rho_values():
    assert rho(9, 1, 5) == -1
    assert rho(8, 1, 5) == 0  # the Gieseker-Petri pencil case g = 2k-2, d = k
    assert rho(4, 1, 3) == 0


def test_canonical_m_small_genera():
    ctx = GenusCtx(5)
    assert render_class(canonical_m(ctx)) == "13*lambda - 2*d0 - 3*d1 - 2*d2"
    assert render_class(canonical_m(GenusCtx(3))) == "13*lambda - 2*d0 - 3*d1"
    assert render_class(canonical_m(GenusCtx(4))) == "13*lambda - 2*d0 - 3*d1 - 2*d2"


def test_canonical_s_values():
    assert (
        render_class(canonical_s(GenusCtx(4)))
        == "13*lambda - 2*a0 - 3*b0s - 3*a1 - 3*b1 - 2*a2 - 2*b2"
    )
    for g in (3, 5, 9, 14):
        assert canonical_s(GenusCtx(g))["lambda"] == 13


@pytest.mark.parametrize("g", range(3, 26))
def test_canonical_splitting_identity(g):
    ctx = GenusCtx(g)
    assert canonical_s(ctx) - pullback(canonical_m(ctx)) == basis_class(ctx, S_SIDE, "b0s")


def test_thetanull_slots():
    ctx = GenusCtx(6)
    theta = thetanull_class(ctx)
    assert theta["lambda"] == Fraction(1, 4)
    assert theta["a0"] == Fraction(-1, 16)
    assert theta["b3"] == Fraction(-1, 2)
    assert theta["a2"] == 0
    assert theta["b0s"] == 0
    assert render_class(thetanull_class(GenusCtx(3))) == "1/4*lambda - 1/16*a0 - 1/2*b1"


def test_m1_theta_small_genera():
    assert render_class(m1_theta_class(GenusCtx(3))) == "9*lambda - d0 - 3*d1"
    # frozen from the pushforward of the theta-null class at genus 4
    got = m1_theta_class(GenusCtx(4))
    assert got == 2 * parse_class("17*lambda - 2*d0 - 7*d1 - 9*d2", GenusCtx(4), M_SIDE)


@pytest.mark.parametrize("g", range(3, 26))
def test_m1_theta_is_pushforward_of_thetanull(g):
    ctx = GenusCtx(g)
    assert pushforward(thetanull_class(ctx)) == m1_theta_class(ctx)


def test_bn_class_genus9():
    ctx = GenusCtx(9)
    cls, spec = bn_class(ctx)
    assert render_class(cls) == "12*lambda - 5/3*d0 - 8*d1 - 14*d2 - 18*d3 - 20*d4"
    assert spec.provenance == BrillNoether(1, 5)
    assert spec.complete


def test_bn_slope_genus8():
    _, spec = bn_class(GenusCtx(8))
    assert spec.slope == Fraction(22, 3)


def test_bn_needs_composite():
    with pytest.raises(NotCompositeError):
        bn_class(GenusCtx(10))


def _prime(n):
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


@pytest.mark.parametrize("g", [g for g in range(3, 41) if not _prime(g + 1)])
def test_bn_boundary_ratios(g):
    _, spec = bn_class(GenusCtx(g))
    for i in range(1, GenusCtx(g).h + 1):
        ratio = spec.b[i - 1] / spec.b0
        assert ratio == Fraction(6 * i * (g - i), g + 1)
        assert ratio >= Fraction(4, 3)


def test_slope_rule_cases():
    assert slope_rule(GenusCtx(10)).case == CASE_GENUS_TEN
    assert slope_rule(GenusCtx(10)).bound == 7
    r12 = slope_rule(GenusCtx(12))
    assert r12.case == CASE_EVEN_PRIME_PLUS_ONE and r12.bound == Fraction(295, 42)
    r9 = slope_rule(GenusCtx(9))
    assert r9.case == CASE_COMPOSITE and r9.bound == Fraction(36, 5)


@pytest.mark.parametrize("g", range(3, 41))
def test_slope_rule_total(g):
    rule = slope_rule(GenusCtx(g))
    assert rule.case in (CASE_COMPOSITE, CASE_GENUS_TEN, CASE_EVEN_PRIME_PLUS_ONE)
    assert rule.bound > 0


def test_choose_d_defaults():
    spec9 = choose_d(GenusCtx(9))
    assert isinstance(spec9.provenance, BrillNoether) and spec9.complete

    spec10 = choose_d(GenusCtx(10))
    assert isinstance(spec10.provenance, K3)
    assert spec10.slope == 7 and not spec10.complete

    spec16 = choose_d(GenusCtx(16))
    assert spec16.provenance == GiesekerPetri(9)
    assert spec16.slope == Fraction(489, 72)
    assert not spec16.complete


def test_choose_d_user_slope_check():
    ctx = GenusCtx(9)
    fine = DivisorSpec(ctx, UserSupplied("custom"), a=Fraction(7), b0=Fraction(1), b=None)
    assert choose_d(ctx, fine) is fine
    steep = DivisorSpec(ctx, UserSupplied("too-steep"), a=Fraction(8), b0=Fraction(1), b=None)
    with pytest.raises(SlopeViolationError):
        choose_d(ctx, steep)
    with pytest.raises(GenusMismatchError):
        choose_d(GenusCtx(11), fine)


def test_divisor_spec_validation():
    ctx = GenusCtx(9)
    with pytest.raises(DivisorSpecError):
        DivisorSpec(ctx, UserSupplied("bad"), a=Fraction(-1), b0=Fraction(1))
    with pytest.raises(DivisorSpecError):
        DivisorSpec(ctx, UserSupplied("bad"), a=Fraction(1), b0=Fraction(1), b=(Fraction(1),))
    with pytest.raises(DivisorSpecError):
        DivisorSpec(ctx, BrillNoether(1, 6), a=Fraction(12), b0=Fraction(5, 3))
    with pytest.raises(DivisorSpecError):
        DivisorSpec(GenusCtx(9), K3(), a=Fraction(7), b0=Fraction(1))
    with pytest.raises(DivisorSpecError):
        divisor_class(DivisorSpec(GenusCtx(10), K3(), a=Fraction(7), b0=Fraction(1)))


def test_load_divisor_spec(tmp_path):
    ctx = GenusCtx(4)
    payload = {"name": "custom", "genus": 4, "a": "13/2", "b0": "1", "b": ["2", "3"]}
    path = tmp_path / "d.json"
    path.write_text(json.dumps(payload))
    spec = load_divisor_spec(path, ctx)
    assert spec.a == Fraction(13, 2) and spec.b == (Fraction(2), Fraction(3))
    assert spec.complete

    with pytest.raises(GenusMismatchError):
        load_divisor_spec(dict(payload, genus=5), ctx)
    with pytest.raises(DivisorSpecError):
        load_divisor_spec({"name": "x", "genus": 4}, ctx)


def test_canonical_ops_need_genus_three():
    with pytest.raises(ValueError):
        canonical_m(GenusCtx(2))
    with pytest.raises(ValueError):
        thetanull_class(GenusCtx(2))
