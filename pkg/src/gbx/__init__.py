"""Exact Groebner basis computation with planarity analysis and 3D export."""

from .buchberger import (
    BudgetExceededError,
    EmptyDivisorSetError,
    GbResult,
    buchberger,
    divide,
    groebner_full,
    minimalize,
    partial_reduce_step,
    reduce_to_rgb,
    rem,
    s_polynomial,
)
from .planarity import (
    LinearForm,
    PlanarityReport,
    WitnessSource,
    analyze,
    detect_linear_witness,
    in_span,
    is_consistent,
    linear_member_oracle,
    lt_exclusion_check,
    monomial_in_lt_ideal,
    report_from_result,
)
from .poly import (
    Monomial,
    Polynomial,
    Rational,
    Term,
    ZeroPolynomialError,
    cmp_lex,
    mono_divide,
    mono_lcm,
    mono_mul,
    unit_monomial,
)
from .textio import (
    EmptyInputError,
    GeneratorSet,
    ParseError,
    ZeroGeneratorError,
    format_monomial,
    parse_generators,
    parse_polynomial,
    print_polynomial,
)

__all__ = [
    "BudgetExceededError",
    "EmptyDivisorSetError",
    "EmptyInputError",
    "GbResult",
    "GeneratorSet",
    "LinearForm",
    "Monomial",
    "ParseError",
    "PlanarityReport",
    "Polynomial",
    "Rational",
    "Term",
    "WitnessSource",
    "ZeroGeneratorError",
    "ZeroPolynomialError",
    "analyze",
    "buchberger",
    "cmp_lex",
    "detect_linear_witness",
    "divide",
    "format_monomial",
    "groebner_full",
    "in_span",
    "is_consistent",
    "linear_member_oracle",
    "lt_exclusion_check",
    "minimalize",
    "mono_divide",
    "mono_lcm",
    "mono_mul",
    "monomial_in_lt_ideal",
    "parse_generators",
    "parse_polynomial",
    "partial_reduce_step",
    "print_polynomial",
    "reduce_to_rgb",
    "rem",
    "report_from_result",
    "s_polynomial",
    "unit_monomial",
]
