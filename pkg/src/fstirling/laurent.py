"""Laurent polynomials in one variable with exact rational coefficients.

A Laurent polynomial maps integer exponents (possibly negative) to nonzero
``Fraction`` coefficients.  Values are immutable and hashable, so they can be
shared freely between threads and used as dict keys.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot coerce {type(c).__name__} to a rational")


class LaurentPoly:
    """Finite map {exponent -> rational}, no zero coefficients stored."""

    __slots__ = ("var", "terms", "_hash")

    def __init__(self, var: str, terms: Mapping[int, Scalar] | None = None):
        self.var = var
        clean = {}
        if terms:
            for e, c in terms.items():
                c = _as_fraction(c)
                if c != 0:
                    clean[int(e)] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        if name in ("var", "terms", "_hash") and not hasattr(self, "_hash"):
            object.__setattr__(self, name, value)
        elif name == "_hash":
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, var: str, c) -> "LaurentPoly":
        return cls(var, {0: _as_fraction(c)})

    @classmethod
    def monomial(cls, var: str, exponent: int, coeff=1) -> "LaurentPoly":
        return cls(var, {exponent: _as_fraction(coeff)})

    @classmethod
    def variable(cls, var: str) -> "LaurentPoly":
        return cls.monomial(var, 1)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial, as a Fraction."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(0, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coeff(self, exponent: int) -> Fraction:
        return self.terms.get(exponent, Fraction(0))

    def min_exponent(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self.terms)

    def max_exponent(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self.terms)

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var and not (other.is_constant() or self.is_constant()):
                raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            if other.is_constant() and other.var != self.var:
                return LaurentPoly(self.var, other.terms)
            return other
        return LaurentPoly.constant(self.var, _as_fraction(other))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        var = self.var if not self.is_constant() or other.is_constant() else other.var
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return LaurentPoly(var, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.var, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        var = self.var if not self.is_constant() or other.is_constant() else other.var
        terms: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(var, terms)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentPoly":
        """Multiplicative inverse; defined only for nonzero monomials."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("only nonzero Laurent monomials are invertible")
        ((e, c),) = self.terms.items()
        return LaurentPoly(self.var, {-e: Fraction(1) / c})

    def __truediv__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "LaurentPoly":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = LaurentPoly.constant(self.var, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def substitute(self, value) -> "LaurentPoly | Fraction":
        """Evaluate at ``var = value`` (a rational or another LaurentPoly)."""
        if isinstance(value, LaurentPoly):
            acc = LaurentPoly.constant(value.var, 0)
            for e, c in self.terms.items():
                acc = acc + value ** e * c
            return acc
        value = _as_fraction(value)
        acc = Fraction(0)
        for e, c in self.terms.items():
            acc += c * value ** e
        return acc

    # -- equality / rendering ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_constant() and other.is_constant():
            return self.constant_value() == other.constant_value()
        return self.var == other.var and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                h = hash(self.constant_value())
            else:
                h = hash((self.var, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentPoly({self!s})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                parts.append(str(c))
            else:
                base = self.var if e == 1 else f"{self.var}^{e}"
                if c == 1:
                    parts.append(base)
                elif c == -1:
                    parts.append(f"-{base}")
                else:
                    parts.append(f"{c}*{base}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        """Canonical JSON form: {"var": ..., "terms": {"<exp>": "<rational>"}}."""
        return {
            "var": self.var,
            "terms": {str(e): str(self.terms[e]) for e in sorted(self.terms)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls(data["var"], {int(e): Fraction(c) for e, c in data["terms"].items()})


def as_laurent(value, var: str) -> LaurentPoly:
    """Coerce a rational or LaurentPoly to a LaurentPoly in ``var``."""
    if isinstance(value, LaurentPoly):
        if value.is_constant() and value.var != var:
            return LaurentPoly(var, value.terms)
        return value
    return LaurentPoly.constant(var, _as_fraction(value))


def poly_product_expand(roots: Iterable) -> list:
    """Expand prod_i (x + r_i) into coefficients of x, constant term first.

    Returns [c_0, ..., c_m] with m the number of roots and c_m = 1 (monic).
    The empty product returns [1].  Roots may be rationals or LaurentPoly.
    """
    coeffs = [Fraction(1)]
    for r in roots:
        nxt = [r * coeffs[0]]
        for i in range(1, len(coeffs)):
            nxt.append(coeffs[i - 1] + r * coeffs[i])
        nxt.append(coeffs[-1])
        coeffs = nxt
    return coeffs
