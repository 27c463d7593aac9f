"""Declarative specification of the coefficient function f.

An FSpec describes f: {1, 2, ...} -> rationals (or q-power monomials) in one
of four shapes, with a tiny text DSL for the CLI:

    linear:<a>,<b>        f(n) = a*n + b
    poly:<c0>,<c1>,...    f(n) = c0 + c1*n + c2*n^2 + ...
    qpow:<offset>         f(n) = q^(n+offset), q the formal variable
    qpow:<base>,<offset>  f(n) = base^(n+offset), numeric base
    table:<path>          f(n) = values[n-1] from a JSON array of rationals

f(n) = 0 is rejected at the point of first use: every downstream sum divides
by f(k) powers, so a zero value would silently poison results.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .laurent import LaurentPoly

Q_VAR = "q"


class FSpecError(ValueError):
    """Malformed spec text or an invalid f value."""


@dataclass(frozen=True)
class FSpec:
    kind: str  # "linear" | "poly" | "qpow" | "table"
    params: tuple = ()
    table: tuple = ()
    table_path: Optional[str] = None

    @property
    def symbolic(self) -> bool:
        """True when f values are monomials in the formal variable q."""
        return self.kind == "qpow" and self.params[0] is None

    def render(self) -> str:
        if self.kind == "linear":
            a, b = self.params
            return f"linear:{a},{b}"
        if self.kind == "poly":
            return "poly:" + ",".join(str(c) for c in self.params)
        if self.kind == "qpow":
            base, offset = self.params
            if base is None:
                return f"qpow:{offset}"
            return f"qpow:{base},{offset}"
        if self.kind == "table":
            return f"table:{self.table_path}"
        raise FSpecError(f"unknown kind {self.kind!r}")

    def __str__(self):
        return self.render()


def linear(alpha, beta) -> FSpec:
    return FSpec("linear", (Fraction(alpha), Fraction(beta)))

def poly(*coeffs) -> FSpec:
    return FSpec("poly", tuple(Fraction(c) for c in coeffs))

def qpow(offset: int, base=None) -> FSpec:
    return FSpec("qpow", (None if base is None else Fraction(base), int(offset)))

def table(values: Sequence, path: str = "<inline>") -> FSpec:
    vals = tuple(Fraction(v) for v in values)
    if not vals:
        raise FSpecError("table must be non-empty")
    if any(v == 0 for v in vals):
        raise FSpecError("table contains a zero value")
    return FSpec("table", (), vals, path)


def parse_fspec(text: str) -> FSpec:
    """Parse the DSL form; raises FSpecError on malformed input."""
    if ":" not in text:
        raise FSpecError(f"malformed fspec {text!r} (expected kind:args)")
    kind, _, rest = text.partition(":")
    try:
        if kind == "linear":
            a, b = rest.split(",")
            return linear(Fraction(a), Fraction(b))
        if kind == "poly":
            coeffs = [Fraction(c) for c in rest.split(",")]
            return poly(*coeffs)
        if kind == "qpow":
            parts = rest.split(",")
            if len(parts) == 1:
                return qpow(int(parts[0]))
            if len(parts) == 2:
                return qpow(int(parts[1]), Fraction(parts[0]))
            raise FSpecError(f"qpow takes 1 or 2 arguments, got {len(parts)}")
        if kind == "table":
            with open(rest) as fh:
                values = json.load(fh)
            if not isinstance(values, list):
                raise FSpecError(f"table file {rest!r} is not a JSON array")
            return table(values, rest)
    except FSpecError:
        raise
    except (ValueError, ZeroDivisionError, OSError) as exc:
        raise FSpecError(f"malformed fspec {text!r}: {exc}") from exc
    raise FSpecError(f"unknown fspec kind {kind!r}")


def eval_f_scalar(spec: FSpec, n: int) -> Fraction:
    """Fast path for numeric specs: f(n) as a plain Fraction.

    Avoids LaurentPoly wrapping in tight summation loops.  Symbolic q-power
    specs are rejected.
    """
    if n < 1:
        raise FSpecError(f"f is defined for n >= 1, got n={n}")
    if spec.kind == "linear":
        a, b = spec.params
        value = a * n + b
    elif spec.kind == "poly":
        value = sum((c * Fraction(n) ** i for i, c in enumerate(spec.params)), Fraction(0))
    elif spec.kind == "qpow":
        base, offset = spec.params
        if base is None:
            raise FSpecError("symbolic q-power spec has no scalar value")
        value = base ** (n + offset)
    elif spec.kind == "table":
        if n > len(spec.table):
            raise FSpecError(f"f({n}) is outside the table (length {len(spec.table)})")
        value = spec.table[n - 1]
    else:
        raise FSpecError(f"unknown fspec kind {spec.kind!r}")
    if value == 0:
        raise FSpecError(f"f({n}) = 0 for spec {spec.render()!r}")
    return Fraction(value)


def eval_f(spec: FSpec, n: int) -> LaurentPoly:
    """Exact value of f(n) as a LaurentPoly (constant unless symbolic qpow)."""
    if n < 1:
        raise FSpecError(f"f is defined for n >= 1, got n={n}")
    if spec.kind == "linear":
        a, b = spec.params
        value = a * n + b
    elif spec.kind == "poly":
        value = sum((c * Fraction(n) ** i for i, c in enumerate(spec.params)), Fraction(0))
    elif spec.kind == "qpow":
        base, offset = spec.params
        if base is None:
            return LaurentPoly.monomial(Q_VAR, n + offset)
        value = base ** (n + offset)
    elif spec.kind == "table":
        if n > len(spec.table):
            raise FSpecError(f"f({n}) is outside the table (length {len(spec.table)})")
        value = spec.table[n - 1]
    else:
        raise FSpecError(f"unknown fspec kind {spec.kind!r}")
    if value == 0:
        raise FSpecError(f"f({n}) = 0 for spec {spec.render()!r}")
    return LaurentPoly.constant(Q_VAR if spec.kind == "qpow" else "t", value)
