"""Exact kernel for the graded differential algebra of index-zero singular quasi-Jacobi forms."""

from .arith import Rational, bernoulli, binomial, sigma
from .calculus import (
    ALGEBRA_GENERATORS,
    Bracket,
    Derivation,
    StabilityReport,
    bracket,
    check_stability,
    derive,
    star_truncated,
    transvectant_by_recurrence,
)
from .dimensions import (
    DimFamily,
    FAMILY_WEIGHTS,
    alcuin,
    dim_brute,
    dim_closed,
    modular_dim,
    nearest_int,
    series_coefficients,
)
from .forms import (
    DWP,
    E1,
    E2,
    E4,
    ONE,
    WP,
    ZERO,
    Algebra,
    DepthProfile,
    EisensteinMethod,
    Generator,
    InconsistencyError,
    QJForm,
    ScaledJForm,
    e6_form,
    eisenstein_in_generators,
    in_span,
    member,
    monomials_of_weight,
    q_coefficient,
)
from .series import (
    DEFAULT_QPREC,
    DEFAULT_UMAX,
    BigradedSeries,
    PrecisionError,
    SeriesDerivation,
    eisenstein_qseries,
    eval_numeric,
    expand,
    series_add,
    series_derive,
    series_equal,
    series_mul,
    series_scale,
)

__version__ = "0.1.0"

__all__ = [
    "ALGEBRA_GENERATORS",
    "Algebra",
    "BigradedSeries",
    "Bracket",
    "DEFAULT_QPREC",
    "DEFAULT_UMAX",
    "Derivation",
    "DepthProfile",
    "DimFamily",
    "DWP",
    "E1",
    "E2",
    "E4",
    "EisensteinMethod",
    "FAMILY_WEIGHTS",
    "Generator",
    "InconsistencyError",
    "ONE",
    "PrecisionError",
    "QJForm",
    "Rational",
    "ScaledJForm",
    "SeriesDerivation",
    "StabilityReport",
    "WP",
    "ZERO",
    "alcuin",
    "bernoulli",
    "binomial",
    "bracket",
    "check_stability",
    "derive",
    "dim_brute",
    "dim_closed",
    "e6_form",
    "eisenstein_in_generators",
    "eisenstein_qseries",
    "eval_numeric",
    "expand",
    "in_span",
    "member",
    "modular_dim",
    "monomials_of_weight",
    "nearest_int",
    "q_coefficient",
    "series_add",
    "series_coefficients",
    "series_derive",
    "series_equal",
    "series_mul",
    "series_scale",
    "sigma",
    "star_truncated",
    "transvectant_by_recurrence",
]
