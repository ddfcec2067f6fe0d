"""Formal divisor-class vector spaces over genus-parametric bases.

Two bases exist for each genus g >= 2, with h = floor(g/2):

* curve side ("M"): lambda, d0, d1, ..., dh
* spin side  ("S"): lambda, a0, b0s, a1, b1, ..., ah, bh

A class is a dense coefficient vector over its basis; coefficients are
exact rationals. The spin-side label for the second genus-0 boundary
class is spelled ``b0s`` in every text format so that it can never be
confused with the divisor slope coefficient b_0 used elsewhere.

Text grammar (ASCII; the Unicode forms λ, δi, αi, βi are accepted on
input and βi maps to b0s for i = 0):

    class  := "0" | term (("+" | "-") term)*
    term   := [rational "*"] label
    rational := integer ["/" positive-integer]
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import ClassSyntaxError, MixedBasisError, UnknownLabelError
from .exact import format_rational, rational

M_SIDE = "M"
S_SIDE = "S"


@dataclass(frozen=True)
class GenusCtx:
    """Genus context; h = floor(g/2) is derived, never stored."""

    g: int

    def __post_init__(self) -> None:
        if not isinstance(self.g, int) or self.g < 2:
            raise ValueError(f"genus must be an integer >= 2, got {self.g!r}")

    @property
    def h(self) -> int:
        return self.g // 2


def m_labels(ctx: GenusCtx) -> tuple[str, ...]:
    return ("lambda",) + tuple(f"d{i}" for i in range(ctx.h + 1))


def s_labels(ctx: GenusCtx) -> tuple[str, ...]:
    out = ["lambda", "a0", "b0s"]
    for i in range(1, ctx.h + 1):
        out.append(f"a{i}")
        out.append(f"b{i}")
    return tuple(out)


def labels_for(ctx: GenusCtx, side: str) -> tuple[str, ...]:
    if side == M_SIDE:
        return m_labels(ctx)
    if side == S_SIDE:
        return s_labels(ctx)
    raise ValueError(f"side must be {M_SIDE!r} or {S_SIDE!r}, got {side!r}")


def _normalize_coeff(ctx: GenusCtx, side: str, coeff: Mapping[str, object]) -> Mapping[str, Fraction]:
    labels = labels_for(ctx, side)
    unknown = set(coeff) - set(labels)
    if unknown:
        raise UnknownLabelError(
            f"labels {sorted(unknown)} are not in the side-{side} basis at genus {ctx.g} "
            f"(basis: {', '.join(labels)})"
        )
    dense = {label: rational(coeff.get(label, 0)) for label in labels}
    return MappingProxyType(dense)


@dataclass(frozen=True)
class DivisorClass:
    """A formal divisor class: exact coefficients over a fixed basis.

    Instances are immutable; the slot set is pinned to the basis of the
    genus context at construction time. Missing labels are filled with 0
    and labels outside the basis are rejected.
    """

    ctx: GenusCtx
    side: str
    coeff: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", _normalize_coeff(self.ctx, self.side, self.coeff))

    def __getitem__(self, label: str) -> Fraction:
        try:
            return self.coeff[label]
        except KeyError:
            raise UnknownLabelError(
                f"label {label!r} is not in the side-{self.side} basis at genus {self.ctx.g}"
            ) from None

    def labels(self) -> tuple[str, ...]:
        return labels_for(self.ctx, self.side)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coeff.values())

    def _require_compatible(self, other: "DivisorClass") -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected a DivisorClass, got {type(other).__name__}")
        if self.ctx != other.ctx or self.side != other.side:
            raise MixedBasisError(
                f"cannot combine side-{self.side} genus-{self.ctx.g} with "
                f"side-{other.side} genus-{other.ctx.g}"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._require_compatible(other)
        return DivisorClass(self.ctx, self.side, {l: self.coeff[l] + other.coeff[l] for l in self.coeff})

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._require_compatible(other)
        return DivisorClass(self.ctx, self.side, {l: self.coeff[l] - other.coeff[l] for l in self.coeff})

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.ctx, self.side, {l: -v for l, v in self.coeff.items()})

    def scaled(self, scalar) -> "DivisorClass":
        s = rational(scalar)
        return DivisorClass(self.ctx, self.side, {l: s * v for l, v in self.coeff.items()})

    __mul__ = scaled
    __rmul__ = scaled

    def __str__(self) -> str:
        return render_class(self)


def zero_class(ctx: GenusCtx, side: str) -> DivisorClass:
    return DivisorClass(ctx, side, {})


def basis_class(ctx: GenusCtx, side: str, label: str) -> DivisorClass:
    if label not in labels_for(ctx, side):
        raise UnknownLabelError(f"label {label!r} is not in the side-{side} basis at genus {ctx.g}")
    return DivisorClass(ctx, side, {label: 1})


def lincomb(scalars: Sequence, classes: Sequence[DivisorClass]) -> DivisorClass:
    """Exact linear combination sum(scalars[k] * classes[k])."""
    if not classes or len(scalars) != len(classes):
        raise MixedBasisError("lincomb needs equally long, nonempty scalar and class lists")
    first = classes[0]
    acc = dict(zero_class(first.ctx, first.side).coeff)
    for s, cls in zip(scalars, classes):
        first._require_compatible(cls)
        sq = rational(s)
        for label, v in cls.coeff.items():
            acc[label] += sq * v
    return DivisorClass(first.ctx, first.side, acc)


# --- text format -----------------------------------------------------------

_TERM_RE = re.compile(
    r"(?:(?P<num>\d+(?:\s*/\s*\d+)?)\s*\*\s*)?"
    r"(?P<label>λ|lambda|[dab]\d+s?|[δαβ]\d+)"
)
_SIGN_RE = re.compile(r"\s*([+-])\s*")

_UNICODE_HEADS = {"δ": "d", "α": "a", "β": "b"}


def _canonical_label(token: str) -> str:
    if token in ("λ", "lambda"):
        return "lambda"
    head = token[0]
    if head in _UNICODE_HEADS:
        idx = int(token[1:])
        if head == "β" and idx == 0:
            return "b0s"
        return f"{_UNICODE_HEADS[head]}{idx}"
    return token


def parse_class(text: str, ctx: GenusCtx, side: str) -> DivisorClass:
    """Parse a class expression against the basis of (ctx, side).

    Raises UnknownLabelError for labels outside the basis and
    ClassSyntaxError for anything that does not match the grammar.
    """
    labels = labels_for(ctx, side)
    s = text.strip()
    if s == "0":
        return zero_class(ctx, side)
    if not s:
        raise ClassSyntaxError("empty class expression")

    coeff = {label: Fraction(0) for label in labels}
    pos = 0
    first = True
    while pos < len(s):
        sign = 1
        m = _SIGN_RE.match(s, pos)
        if m is not None:
            sign = 1 if m.group(1) == "+" else -1
            pos = m.end()
        elif not first:
            raise ClassSyntaxError(f"expected '+' or '-' before position {pos} in {text!r}")
        m = _TERM_RE.match(s, pos)
        if m is None:
            raise ClassSyntaxError(f"expected a term at position {pos} in {text!r}")
        label = _canonical_label(m.group("label"))
        if label not in coeff:
            raise UnknownLabelError(
                f"label {m.group('label')!r} is not in the side-{side} basis at genus {ctx.g} "
                f"(basis: {', '.join(labels)})"
            )
        value = rational(m.group("num").replace(" ", "")) if m.group("num") else Fraction(1)
        coeff[label] += sign * value
        pos = m.end()
        first = False
        ws = re.match(r"\s*", s[pos:])
        if ws and pos + ws.end() == len(s):
            pos = len(s)
    return DivisorClass(ctx, side, coeff)


def render_class(x: DivisorClass) -> str:
    """Canonical text form: basis order, zero terms omitted, "0" for zero.

    Unit coefficients render as the bare label, so the output stays inside
    the input grammar and parse_class(render_class(x)) == x.
    """
    parts: list[str] = []
    for label in x.labels():
        v = x.coeff[label]
        if v == 0:
            continue
        mag = format_rational(abs(v))
        term = label if abs(v) == 1 else f"{mag}*{label}"
        if not parts:
            parts.append(term if v > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if v > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"
