"""Generalized product functions: the parameterized Pochhammer polynomial in x
and the two factorial normalizations built from f.

The parameter t may be an exact rational, the formal variable itself, or a
monomial power of a substitution variable (used to realize fractional powers
of t exactly).  One formal variable at a time: a symbolic q-power f requires a
numeric t, and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from .fspec import FSpec, FSpecError, eval_f
from .laurent import LaurentPoly, as_laurent, poly_product_expand

TParam = Union[int, Fraction, LaurentPoly, str]


def normalize_t(t: TParam) -> LaurentPoly:
    """Coerce the t parameter to a LaurentPoly (constant or monomial)."""
    if isinstance(t, LaurentPoly):
        if not t.is_monomial() and not t.is_constant():
            raise ValueError("t must be a nonzero constant or a monomial")
        return t
    if isinstance(t, str):
        return LaurentPoly.variable(t)
    value = Fraction(t)
    if value == 0:
        raise ValueError("t must be nonzero")
    return LaurentPoly.constant("t", value)


def check_config(spec: FSpec, t: TParam) -> LaurentPoly:
    """Validate the one-formal-variable convention and return t normalized."""
    tp = normalize_t(t)
    if spec.symbolic and not tp.is_constant():
        raise FSpecError(
            "symbolic q-power f requires numeric t (bivariate coefficients rejected)"
        )
    return tp


def working_var(spec: FSpec, t: LaurentPoly) -> str:
    """The formal variable triangle entries live in for this configuration."""
    if spec.symbolic:
        return "q"
    if not t.is_constant():
        return t.var
    return "t"


@dataclass(frozen=True)
class PochhammerExpansion:
    """Coefficients of x^(k-1), k = 1..n, in the degree-(n-1) monic product."""

    n: int
    coeffs: tuple  # LaurentPoly entries, constant term first

    def __len__(self):
        return len(self.coeffs)


def pochhammer_roots(spec: FSpec, t: TParam, n: int) -> List[LaurentPoly]:
    """The n-1 root offsets f(k) * t^(-k), k = 1..n-1."""
    tp = check_config(spec, t)
    var = working_var(spec, tp)
    return [
        as_laurent(eval_f(spec, k), var) * (tp ** (-k)) for k in range(1, n)
    ]


def pochhammer_poly(spec: FSpec, t: TParam, n: int) -> PochhammerExpansion:
    """Expand the n-term generalized factorial product as a polynomial in x.

    n = 0 and n = 1 both give the empty product, the constant polynomial 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    tp = check_config(spec, t)
    var = working_var(spec, tp)
    coeffs = poly_product_expand(pochhammer_roots(spec, t, n))
    return PochhammerExpansion(n, tuple(as_laurent(c, var) for c in coeffs))


def bang_f(spec: FSpec, n: int) -> LaurentPoly:
    """prod_{j=1}^{n} f(j); the empty product for n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = LaurentPoly.constant("t", 1)
    for j in range(1, n + 1):
        acc = acc * eval_f(spec, j)
    return acc


def bang_ft(spec: FSpec, t: TParam, n: int) -> LaurentPoly:
    """bang_f(n) scaled by t^(-n(n+1)/2)."""
    tp = check_config(spec, t)
    var = working_var(spec, tp)
    return as_laurent(bang_f(spec, n), var) * tp ** (-(n * (n + 1) // 2))
