"""Named divisor classes, effective-divisor specifications, and slope rules.

This module owns every class that the rest of the package refers to by
name: the canonical classes on both sides of the covering, the theta-null
divisor class on the spin side, its pushforward (the vanishing-theta-null
locus on the curve side), the Brill-Noether divisor for composite g+1, and
the genus-indexed rule that picks the auxiliary effective divisor D used
by the classification.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Union

from . import transfer
from .errors import (
    DivisorSpecError,
    GenusMismatchError,
    NotCompositeError,
    SlopeViolationError,
    VerificationFailureError,
)
from .exact import rational
from .picard import M_SIDE, S_SIDE, DivisorClass, GenusCtx, basis_class


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number g - (r+1)(g-d+r)."""
    return g - (r + 1) * (g - d + r)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def _smallest_prime_factor(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def _require_classification_genus(ctx: GenusCtx) -> None:
    if ctx.g < 3:
        raise ValueError(f"this operation needs genus >= 3, got {ctx.g}")


# --- divisor specifications -------------------------------------------------


@dataclass(frozen=True)
class BrillNoether:
    r: int
    d: int


@dataclass(frozen=True)
class K3:
    pass


@dataclass(frozen=True)
class GiesekerPetri:
    k: int


@dataclass(frozen=True)
class UserSupplied:
    name: str


Provenance = Union[BrillNoether, K3, GiesekerPetri, UserSupplied]


@dataclass(frozen=True)
class DivisorSpec:
    """An effective divisor a*lambda - b0*d0 - sum b_i*di on the curve side.

    b holds (b_1, ..., b_h) when all boundary coefficients are known;
    specs with b = None carry only the slope data (a, b0) and mark every
    computation that would need the b_i as conditional.
    """

    ctx: GenusCtx
    provenance: Provenance
    a: Fraction
    b0: Fraction
    b: tuple[Fraction, ...] | None = None

    @property
    def complete(self) -> bool:
        return self.b is not None

    @property
    def slope(self) -> Fraction:
        return self.a / self.b0

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", rational(self.a))
        object.__setattr__(self, "b0", rational(self.b0))
        if self.b is not None:
            object.__setattr__(self, "b", tuple(rational(v) for v in self.b))
        g, h = self.ctx.g, self.ctx.h
        if self.a <= 0 or self.b0 <= 0:
            raise DivisorSpecError(f"divisor needs a > 0 and b0 > 0, got a={self.a}, b0={self.b0}")
        if self.b is not None:
            if len(self.b) != h:
                raise DivisorSpecError(f"expected {h} boundary coefficients at genus {g}, got {len(self.b)}")
            if any(v <= 0 for v in self.b):
                raise DivisorSpecError("all boundary coefficients b_i must be positive")
        p = self.provenance
        if isinstance(p, BrillNoether):
            if rho(g, p.r, p.d) != -1:
                raise DivisorSpecError(f"Brill-Noether provenance needs rho(g,r,d) = -1, got {rho(g, p.r, p.d)}")
            expected_b = tuple(Fraction(i * (g - i)) for i in range(1, h + 1))
            if (self.a, self.b0, self.b) != (Fraction(g + 3), Fraction(g + 1, 6), expected_b):
                raise DivisorSpecError("Brill-Noether coefficients must be a=g+3, b0=(g+1)/6, b_i=i(g-i)")
        elif isinstance(p, GiesekerPetri):
            if g != 2 * p.k - 2:
                raise DivisorSpecError(f"Gieseker-Petri provenance needs g = 2k-2, got g={g}, k={p.k}")
            k = p.k
            if self.slope != Fraction(6 * k * k + k - 6, k * (k - 1)):
                raise DivisorSpecError("Gieseker-Petri slope must be (6k^2+k-6)/(k(k-1))")
        elif isinstance(p, K3):
            if g != 10:
                raise DivisorSpecError("the K3 divisor exists at genus 10 only")
            if self.slope != 7:
                raise DivisorSpecError("the K3 divisor has slope 7")


def divisor_class(spec: DivisorSpec) -> DivisorClass:
    """The curve-side class of a complete divisor spec."""
    if not spec.complete:
        raise DivisorSpecError(
            f"divisor at genus {spec.ctx.g} has no boundary coefficients b_i; only its slope "
            f"a/b0 = {spec.slope} is known"
        )
    coeff = {"lambda": spec.a, "d0": -spec.b0}
    for i in range(1, spec.ctx.h + 1):
        coeff[f"d{i}"] = -spec.b[i - 1]
    return DivisorClass(spec.ctx, M_SIDE, coeff)


def load_divisor_spec(data: Mapping | str | Path, ctx: GenusCtx) -> DivisorSpec:
    """Build a user-supplied spec from the JSON object format.

    The format is {"name": str, "genus": int, "a": "p/q", "b0": "p/q",
    "b": ["p/q", ...]} with "b" optional. Paths and JSON strings are
    accepted as well as already-parsed mappings.
    """
    if isinstance(data, Path):
        data = json.loads(data.read_text())
    elif isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, Mapping):
        raise DivisorSpecError("divisor file must hold a JSON object")
    missing = {"name", "genus", "a", "b0"} - set(data)
    if missing:
        raise DivisorSpecError(f"divisor file is missing keys: {sorted(missing)}")
    if data["genus"] != ctx.g:
        raise GenusMismatchError(f"divisor file is for genus {data['genus']}, expected {ctx.g}")
    b = data.get("b")
    return DivisorSpec(
        ctx=ctx,
        provenance=UserSupplied(str(data["name"])),
        a=rational(data["a"]),
        b0=rational(data["b0"]),
        b=None if b is None else tuple(rational(v) for v in b),
    )


# --- canonical and theta-null classes ---------------------------------------


def canonical_m(ctx: GenusCtx) -> DivisorClass:
    """Canonical class on the curve side: 13*lambda - 2*d0 - 3*d1 - 2*(d2 + ...)."""
    _require_classification_genus(ctx)
    coeff = {"lambda": Fraction(13), "d0": Fraction(-2), "d1": Fraction(-3)}
    for i in range(2, ctx.h + 1):
        coeff[f"d{i}"] = Fraction(-2)
    return DivisorClass(ctx, M_SIDE, coeff)


def canonical_s(ctx: GenusCtx) -> DivisorClass:
    """Canonical class on the spin side.

    Built directly as 13*lambda - 2*a0 - 3*b0s - 3*(a1+b1) - 2*sum(ai+bi);
    the equivalent route pullback(canonical_m) + b0s is re-checked on every
    call, since keeping the two constructions in sync is exactly the kind
    of thing that silently drifts.
    """
    _require_classification_genus(ctx)
    coeff = {
        "lambda": Fraction(13),
        "a0": Fraction(-2),
        "b0s": Fraction(-3),
        "a1": Fraction(-3),
        "b1": Fraction(-3),
    }
    for i in range(2, ctx.h + 1):
        coeff[f"a{i}"] = Fraction(-2)
        coeff[f"b{i}"] = Fraction(-2)
    cls = DivisorClass(ctx, S_SIDE, coeff)
    via_pullback = transfer.pullback(canonical_m(ctx)) + basis_class(ctx, S_SIDE, "b0s")
    if cls != via_pullback:
        raise VerificationFailureError("canonical class disagrees with pullback(canonical_m) + b0s")
    return cls


def thetanull_class(ctx: GenusCtx) -> DivisorClass:
    """Class of the theta-null divisor: 1/4*lambda - 1/16*a0 - 1/2*sum(bi)."""
    _require_classification_genus(ctx)
    coeff = {"lambda": Fraction(1, 4), "a0": Fraction(-1, 16)}
    for i in range(1, ctx.h + 1):
        coeff[f"b{i}"] = Fraction(-1, 2)
    return DivisorClass(ctx, S_SIDE, coeff)


def m1_theta_class(ctx: GenusCtx) -> DivisorClass:
    """Curve-side class of the vanishing-theta-null locus.

    2^(g-3) * ((2^g+1)*lambda - 2^(g-3)*d0 - sum (2^(g-i)-1)(2^i-1)*di).
    """
    _require_classification_genus(ctx)
    g = ctx.g
    scale = 2 ** (g - 3)
    coeff = {"lambda": Fraction(scale * (2**g + 1)), "d0": Fraction(-scale * 2 ** (g - 3))}
    for i in range(1, ctx.h + 1):
        coeff[f"d{i}"] = Fraction(-scale * (2 ** (g - i) - 1) * (2**i - 1))
    return DivisorClass(ctx, M_SIDE, coeff)


def bn_class(ctx: GenusCtx) -> tuple[DivisorClass, DivisorSpec]:
    """Normalized Brill-Noether divisor class and its spec, for composite g+1.

    The pencil parameters are fixed as r+1 = smallest prime factor of g+1
    and d = g + r - (g+1)/(r+1); the normalized class does not depend on
    this choice, which only labels the provenance.
    """
    _require_classification_genus(ctx)
    g = ctx.g
    if _is_prime(g + 1):
        raise NotCompositeError(f"g+1 = {g + 1} is prime; no Brill-Noether divisor at genus {g}")
    f = _smallest_prime_factor(g + 1)
    r = f - 1
    s = (g + 1) // f
    d = g + r - s
    if rho(g, r, d) != -1:
        raise VerificationFailureError(f"rho({g},{r},{d}) = {rho(g, r, d)}, expected -1")
    spec = DivisorSpec(
        ctx=ctx,
        provenance=BrillNoether(r, d),
        a=Fraction(g + 3),
        b0=Fraction(g + 1, 6),
        b=tuple(Fraction(i * (g - i)) for i in range(1, ctx.h + 1)),
    )
    return divisor_class(spec), spec


# --- the slope rule and the choice of D --------------------------------------

CASE_COMPOSITE = "composite"
CASE_GENUS_TEN = "genus-ten"
CASE_EVEN_PRIME_PLUS_ONE = "even-prime-plus-one"


@dataclass(frozen=True)
class SlopeRule:
    case: str
    bound: Fraction


def slope_rule(ctx: GenusCtx) -> SlopeRule:
    """The genus-indexed slope bound a/b0 for the auxiliary divisor D.

    Exactly one case applies to each g >= 3: genus ten wins at g = 10,
    composite g+1 gives 6 + 12/(g+1), and the only genera left over have
    g even with g+1 prime, where g = 2k-2 gives (6k^2+k-6)/(k(k-1)).
    """
    _require_classification_genus(ctx)
    g = ctx.g
    if g == 10:
        return SlopeRule(CASE_GENUS_TEN, Fraction(7))
    if not _is_prime(g + 1):
        return SlopeRule(CASE_COMPOSITE, Fraction(6) + Fraction(12, g + 1))
    # g+1 an odd prime forces g even here (g+1 = 2 would mean g = 1)
    k = (g + 2) // 2
    return SlopeRule(CASE_EVEN_PRIME_PLUS_ONE, Fraction(6 * k * k + k - 6, k * (k - 1)))


def choose_d(ctx: GenusCtx, user: DivisorSpec | None = None) -> DivisorSpec:
    """Pick the auxiliary divisor D, or validate a user-supplied one.

    User specs must respect the slope bound of the genus; otherwise they
    cannot support the classification argument and SlopeViolationError is
    raised.
    """
    _require_classification_genus(ctx)
    rule = slope_rule(ctx)
    if user is not None:
        if user.ctx != ctx:
            raise GenusMismatchError(f"divisor is for genus {user.ctx.g}, expected {ctx.g}")
        if user.slope > rule.bound:
            raise SlopeViolationError(
                f"slope a/b0 = {user.slope} exceeds the genus-{ctx.g} bound {rule.bound}"
            )
        return user
    if rule.case == CASE_COMPOSITE:
        return bn_class(ctx)[1]
    if rule.case == CASE_GENUS_TEN:
        return DivisorSpec(ctx, K3(), a=Fraction(7), b0=Fraction(1), b=None)
    k = (ctx.g + 2) // 2
    return DivisorSpec(ctx, GiesekerPetri(k), a=Fraction(6 * k * k + k - 6), b0=Fraction(k * (k - 1)), b=None)


def provenance_name(p: Provenance) -> str:
    if isinstance(p, BrillNoether):
        return f"brill-noether(r={p.r}, d={p.d})"
    if isinstance(p, K3):
        return "k3"
    if isinstance(p, GiesekerPetri):
        return f"gieseker-petri(k={p.k})"
    return f"user-supplied({p.name})"
