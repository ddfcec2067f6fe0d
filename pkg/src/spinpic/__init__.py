"""spinpic: exact-rational divisor-class calculus on the moduli spaces of
curves and even spin curves.

All arithmetic is exact; the scalar everywhere is fractions.Fraction.
The package computes the transfer maps of the spin covering, pairs test
pencils with divisor classes, re-derives the theta-null class from pencil
relations, and emits per-genus Kodaira-type certificates.
"""

from .catalog import (
    BrillNoether,
    DivisorSpec,
    GiesekerPetri,
    K3,
    SlopeRule,
    UserSupplied,
    bn_class,
    canonical_m,
    canonical_s,
    choose_d,
    divisor_class,
    m1_theta_class,
    rho,
    slope_rule,
    thetanull_class,
)
from .errors import SpinPicError
from .exact import Rational, format_rational, rational, solve_exact
from .kodaira import (
    GENERAL_TYPE,
    KAPPA_NONNEGATIVE,
    KodairaCertificate,
    UNIRULED,
    classify,
    decompose_canonical,
    nu_value,
    uniruled_certificate,
)
from .picard import (
    DivisorClass,
    GenusCtx,
    M_SIDE,
    S_SIDE,
    basis_class,
    lincomb,
    parse_class,
    render_class,
    zero_class,
)
from .testcurves import CurveFunctional, intersect, solve_thetanull, standard_curves
from .transfer import SpinCounts, pullback, pushforward, spin_counts

__version__ = "0.1.0"

__all__ = [
    "BrillNoether",
    "CurveFunctional",
    "DivisorClass",
    "DivisorSpec",
    "GENERAL_TYPE",
    "GenusCtx",
    "GiesekerPetri",
    "K3",
    "KAPPA_NONNEGATIVE",
    "KodairaCertificate",
    "M_SIDE",
    "Rational",
    "S_SIDE",
    "SlopeRule",
    "SpinCounts",
    "SpinPicError",
    "UNIRULED",
    "UserSupplied",
    "basis_class",
    "bn_class",
    "canonical_m",
    "canonical_s",
    "choose_d",
    "classify",
    "decompose_canonical",
    "divisor_class",
    "format_rational",
    "intersect",
    "lincomb",
    "m1_theta_class",
    "nu_value",
    "parse_class",
    "pullback",
    "pushforward",
    "rational",
    "render_class",
    "rho",
    "slope_rule",
    "solve_exact",
    "solve_thetanull",
    "spin_counts",
    "standard_curves",
    "thetanull_class",
    "uniruled_certificate",
    "zero_class",
]
