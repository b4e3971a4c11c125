"""Exact arithmetic in the field generated by a primitive r-th root of unity.

Elements are rational polynomials in the root, reduced modulo the r-th
cyclotomic polynomial, so the representation is canonical and every nonzero
element is invertible.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .polynomials import PolyT, poly_xgcd


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r):
    """The r-th cyclotomic polynomial, computed by exact division of x^r - 1
    by the cyclotomic polynomials of the proper divisors of r."""
    if r < 1:
        raise ValueError("r must be at least 1")
    poly = PolyT([-1] + [0] * (r - 1) + [1])
    for d in range(1, r):
        if r % d == 0:
            poly = poly.exact_div(cyclotomic_polynomial(d))
    return poly


@lru_cache(maxsize=None)
def _field_data(order):
    """(degree, reduction rows) for the order-r field: row k is x^k reduced
    modulo the cyclotomic polynomial, for k up to 2*(degree-1)."""
    modulus = cyclotomic_polynomial(order)
    degree = modulus.degree
    rows = []
    for k in range(max(1, 2 * degree - 1)):
        rem = PolyT([0] * k + [1]) % modulus
        row = list(rem.coeffs) + [Fraction(0)] * (degree - len(rem.coeffs))
        rows.append(tuple(row))
    return degree, tuple(rows)


@lru_cache(maxsize=None)
def _root_power(order, exponent):
    """The canonical coefficient vector of the root raised to `exponent`."""
    degree, _ = _field_data(order)
    rem = PolyT([0] * (exponent % order) + [1]) % cyclotomic_polynomial(order)
    return tuple(list(rem.coeffs) + [Fraction(0)] * (degree - len(rem.coeffs)))


class CyclotomicNumber:
    """Element of the order-r cyclotomic field in the canonical power basis."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        order = int(order)
        if order < 2:
            raise ValueError("order must be at least 2")
        degree, _ = _field_data(order)
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if len(cs) > degree:
            rem = PolyT(cs) % cyclotomic_polynomial(order)
            cs = list(rem.coeffs)
        cs += [Fraction(0)] * (degree - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zeta(cls, order):
        """A primitive order-r root of unity."""
        return cls(order, (0, 1))

    @classmethod
    def from_rational(cls, order, value):
        return cls(order, (Fraction(value),))

    @classmethod
    def zero(cls, order):
        return cls(order)

    @classmethod
    def one(cls, order):
        return cls(order, (1,))

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    f"mixed field orders: {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, (Fraction(other),))
        return None

    @property
    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        degree, rows = _field_data(self.order)
        raw = [Fraction(0)] * (2 * degree - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    raw[i + j] += a * b
        out = [Fraction(0)] * degree
        for k, c in enumerate(raw):
            if not c:
                continue
            row = rows[k]
            for d in range(degree):
                if row[d]:
                    out[d] += c * row[d]
        return CyclotomicNumber(self.order, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero:
            raise ZeroDivisionError("zero has no inverse")
        g, u, _ = poly_xgcd(PolyT(self.coeffs), cyclotomic_polynomial(self.order))
        # g is a nonzero constant: the modulus is irreducible over the rationals
        scale = Fraction(1) / g.coeffs[0]
        return CyclotomicNumber(self.order, (u * scale).coeffs)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self):
        """The image under complex conjugation, which sends the root to its
        inverse power."""
        degree, _ = _field_data(self.order)
        out = [Fraction(0)] * degree
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            row = _root_power(self.order, (self.order - k) % self.order)
            for d in range(degree):
                if row[d]:
                    out[d] += c * row[d]
        return CyclotomicNumber(self.order, tuple(out))

    def is_real(self):
        return self == self.conjugate()

    def as_rational(self):
        """The value as a Fraction when it lies in the rationals, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == CyclotomicNumber(self.order, other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, {list(self.coeffs)})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "zeta" if i == 1 else f"zeta^{i}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{c}*{var}")
        if not terms:
            return "0"
        out = terms[0]
        for term in terms[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def t_shifted_factorial(a, t, n):
    """The product (1 - a)(1 - a*t)...(1 - a*t^(n-1)), with n = 0 giving 1.

    Works for cyclotomic numbers, rationals, and polynomial values alike.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = 1
    factor = a
    for _ in range(n):
        result = result * (1 - factor)
        factor = factor * t
    return result
