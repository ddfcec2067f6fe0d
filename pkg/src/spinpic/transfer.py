"""Transfer maps of the finite covering from even spin curves to curves.

The forgetful covering of degree 2^(2g) splits into an even component of
relative degree 2^(g-1)(2^g+1) and an odd one of degree 2^(g-1)(2^g-1);
everything here lives on the even component. Pullback splits boundary
classes (d0 -> a0 + 2*b0s, di -> ai + bi) and fixes lambda; pushforward
multiplies each spin-side basis class by the covering degree of the
boundary stratum it sits on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SideMismatchError, UnknownLabelError
from .picard import (
    M_SIDE,
    S_SIDE,
    DivisorClass,
    GenusCtx,
    basis_class,
    m_labels,
    s_labels,
)


def even_component_degree(g: int) -> int:
    return 2 ** (g - 1) * (2**g + 1)


def odd_component_degree(g: int) -> int:
    return 2 ** (g - 1) * (2**g - 1)


def pushforward_degree(ctx: GenusCtx, label: str) -> int:
    """Covering degree multiplying the image of one spin-side basis class."""
    g = ctx.g
    if label == "lambda":
        return even_component_degree(g)
    if label == "a0":
        return 2 ** (2 * g - 2)
    if label == "b0s":
        return 2 ** (g - 2) * (2 ** (g - 1) + 1)
    kind, i = label[0], int(label[1:])
    if kind not in ("a", "b") or not 1 <= i <= ctx.h:
        raise UnknownLabelError(f"no pushforward degree for label {label!r} at genus {g}")
    if kind == "a":
        return 2 ** (g - 2) * (2**i + 1) * (2 ** (g - i) + 1)
    return 2 ** (g - 2) * (2**i - 1) * (2 ** (g - i) - 1)


def _m_image(label: str) -> str:
    if label == "lambda":
        return "lambda"
    if label in ("a0", "b0s"):
        return "d0"
    return f"d{label[1:]}"


def pullback(x: DivisorClass) -> DivisorClass:
    if x.side != M_SIDE:
        raise SideMismatchError("pullback takes a curve-side class")
    ctx = x.ctx
    out: dict[str, Fraction] = {"lambda": x["lambda"], "a0": x["d0"], "b0s": 2 * x["d0"]}
    for i in range(1, ctx.h + 1):
        out[f"a{i}"] = x[f"d{i}"]
        out[f"b{i}"] = x[f"d{i}"]
    return DivisorClass(ctx, S_SIDE, out)


def pushforward(x: DivisorClass) -> DivisorClass:
    if x.side != S_SIDE:
        raise SideMismatchError("pushforward takes a spin-side class")
    ctx = x.ctx
    out = {label: Fraction(0) for label in m_labels(ctx)}
    for label in s_labels(ctx):
        out[_m_image(label)] += pushforward_degree(ctx, label) * x[label]
    return DivisorClass(ctx, M_SIDE, out)


def pullback_matrix(ctx: GenusCtx) -> list[list[Fraction]]:
    """Matrix of pullback: rows over the spin basis, columns over the curve basis."""
    cols = [pullback(basis_class(ctx, M_SIDE, m)) for m in m_labels(ctx)]
    return [[col[s] for col in cols] for s in s_labels(ctx)]


def pushforward_matrix(ctx: GenusCtx) -> list[list[Fraction]]:
    """Matrix of pushforward: rows over the curve basis, columns over the spin basis."""
    cols = [pushforward(basis_class(ctx, S_SIDE, s)) for s in s_labels(ctx)]
    return [[col[m] for col in cols] for m in m_labels(ctx)]


@dataclass(frozen=True)
class SpinCounts:
    """Degree bookkeeping for the covering at one genus.

    The three identities returned by identities() tie the stratum degrees
    to the component degrees; they are this package's first defense against
    transcription errors in the multiplicity table.
    """

    ctx: GenusCtx
    total_degree: int
    n_even: int
    n_odd: int
    deg_a0: int
    deg_b0: int
    deg_a: tuple[int, ...]
    deg_b: tuple[int, ...]

    def identities(self) -> list[tuple[str, int, int]]:
        out = [
            ("even+odd=total", self.n_even + self.n_odd, self.total_degree),
            ("a0+2*b0=even", self.deg_a0 + 2 * self.deg_b0, self.n_even),
        ]
        for i in range(1, self.ctx.h + 1):
            out.append((f"a{i}+b{i}=even", self.deg_a[i - 1] + self.deg_b[i - 1], self.n_even))
        return out

    def violations(self) -> list[str]:
        return [name for name, lhs, rhs in self.identities() if lhs != rhs]


def spin_counts(ctx: GenusCtx) -> SpinCounts:
    g = ctx.g
    return SpinCounts(
        ctx=ctx,
        total_degree=2 ** (2 * g),
        n_even=even_component_degree(g),
        n_odd=odd_component_degree(g),
        deg_a0=pushforward_degree(ctx, "a0"),
        deg_b0=pushforward_degree(ctx, "b0s"),
        deg_a=tuple(pushforward_degree(ctx, f"a{i}") for i in range(1, ctx.h + 1)),
        deg_b=tuple(pushforward_degree(ctx, f"b{i}") for i in range(1, ctx.h + 1)),
    )
