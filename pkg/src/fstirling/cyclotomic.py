"""Arithmetic in Z[zeta_p] for prime p, with rational or Laurent-polynomial
coordinates.

Elements are represented on the power basis 1, zeta, ..., zeta^(p-2) and
reduced modulo 1 + zeta + ... + zeta^(p-1) = 0.  Restricting to prime p keeps
the reduction step trivial.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class CyclotomicElem:
    """Element of Q(zeta_p) (coords may also be LaurentPoly in a parameter)."""

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords):
        if not is_prime(p):
            raise ValueError(f"cyclotomic order must be prime, got {p}")
        coords = list(coords)
        if len(coords) != p - 1:
            raise ValueError(f"need {p - 1} coordinates for order {p}, got {len(coords)}")
        self.p = p
        self.coords = coords

    @classmethod
    def scalar(cls, p: int, value) -> "CyclotomicElem":
        coords = [value] + [Fraction(0)] * (p - 2)
        return cls(p, coords)

    @classmethod
    def zeta_pow(cls, p: int, exponent: int) -> "CyclotomicElem":
        """zeta_p^exponent reduced to the power basis."""
        e = exponent % p
        coords = [Fraction(0)] * (p - 1)
        if e < p - 1:
            coords[e] = Fraction(1)
        else:
            # zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
            coords = [Fraction(-1)] * (p - 1)
        return cls(p, coords)

    def _check(self, other: "CyclotomicElem"):
        if self.p != other.p:
            raise ValueError(f"order mismatch: {self.p} vs {other.p}")

    def __add__(self, other) -> "CyclotomicElem":
        if not isinstance(other, CyclotomicElem):
            other = CyclotomicElem.scalar(self.p, other)
        self._check(other)
        return CyclotomicElem(self.p, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicElem":
        return CyclotomicElem(self.p, [-a for a in self.coords])

    def __sub__(self, other) -> "CyclotomicElem":
        if not isinstance(other, CyclotomicElem):
            other = CyclotomicElem.scalar(self.p, other)
        return self + (-other)

    def scale(self, c) -> "CyclotomicElem":
        return CyclotomicElem(self.p, [a * c for a in self.coords])

    def __mul__(self, other) -> "CyclotomicElem":
        if not isinstance(other, CyclotomicElem):
            return self.scale(other)
        self._check(other)
        p = self.p
        # Convolve on exponents 0..2p-4, fold modulo p, then eliminate the
        # zeta^(p-1) coordinate with the cyclotomic relation.
        folded = [Fraction(0)] * p
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                folded[(i + j) % p] = folded[(i + j) % p] + a * b
        top = folded[p - 1]
        coords = [folded[i] - top for i in range(p - 1)]
        return CyclotomicElem(p, coords)

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        """True when all coordinates beyond degree 0 vanish."""
        return all(not c for c in self.coords[1:])

    def rational_part(self):
        """Degree-0 coordinate; raises if the element is not rational."""
        if not self.is_rational():
            raise ValueError(f"element has nonzero zeta-coordinates: {self.coords}")
        return self.coords[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclotomicElem):
            return self.is_rational() and self.coords[0] == other
        return self.p == other.p and all(
            a == b for a, b in zip(self.coords, other.coords)
        )

    def __repr__(self):
        return f"CyclotomicElem(p={self.p}, {self.coords})"


def cyclo_mul(a: CyclotomicElem, b: CyclotomicElem) -> CyclotomicElem:
    """Product in Q(zeta_p), reduced modulo the cyclotomic polynomial."""
    return a * b
