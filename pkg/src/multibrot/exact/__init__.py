"""Exact arithmetic kernel: integer polynomials, intervals, factoring."""

from .dyadic import (
    DyadicInterval,
    ln2_interval,
    nth_root_interval,
    pow_frac_interval,
)
from .factorize import factor, factor_irreducible, is_irreducible
from .intpoly import (
    IntPoly,
    ONE,
    SturmChain,
    X,
    cauchy_bound,
    count_real_roots,
    discriminant,
    divide_out_rational_root,
    divides,
    exact_quotient,
    isolate_real_roots,
    newton_interpolate,
    poly_content_valuation,
    poly_valuation,
    poly_gcd,
    refine_isolator,
    resultant,
    squarefree_part,
    sturm_count,
    yun_squarefree,
)

__all__ = [
    "DyadicInterval",
    "IntPoly",
    "ONE",
    "SturmChain",
    "X",
    "cauchy_bound",
    "count_real_roots",
    "discriminant",
    "divide_out_rational_root",
    "divides",
    "exact_quotient",
    "factor",
    "factor_irreducible",
    "is_irreducible",
    "isolate_real_roots",
    "ln2_interval",
    "newton_interpolate",
    "nth_root_interval",
    "poly_content_valuation",
    "poly_valuation",
    "poly_gcd",
    "pow_frac_interval",
    "refine_isolator",
    "resultant",
    "squarefree_part",
    "sturm_count",
    "yun_squarefree",
]
