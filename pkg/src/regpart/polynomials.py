"""Exact univariate polynomial arithmetic over the rationals.

`PolyT` is the coefficient domain used for one-parameter symmetric-function
computations; `PolyFraction` adjoins exact ratios for the few places where a
denominator is unavoidable.
"""

from __future__ import annotations

from fractions import Fraction


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational scalar")


class PolyT:
    """Polynomial in one variable t with Fraction coefficients, constant first.

    The coefficient tuple is canonical: no trailing zeros, so equality is
    componentwise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        cs = [_as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def t(cls):
        return cls((0, 1))

    @property
    def degree(self):
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @staticmethod
    def coerce(value):
        if isinstance(value, PolyT):
            return value
        return PolyT(value)

    def __add__(self, other):
        try:
            other = PolyT.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyT(out)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = PolyT.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = PolyT.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return PolyT(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        try:
            other = PolyT.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PolyT()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return PolyT(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = PolyT.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = PolyT.coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        d = other.degree
        lead = other.coeffs[-1]
        rem = list(self.coeffs)
        if len(rem) - 1 < d:
            return PolyT(), self
        quot = [Fraction(0)] * (len(rem) - d)
        for i in range(len(rem) - 1 - d, -1, -1):
            c = rem[i + d] / lead
            if c:
                quot[i] = c
                for k, oc in enumerate(other.coeffs):
                    rem[i + k] -= c * oc
        return PolyT(quot), PolyT(rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Division known to leave no remainder; raises otherwise."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError(f"{self} is not divisible by {other}")
        return q

    def __call__(self, x):
        """Evaluate by Horner's rule; works for Fractions and any value with
        coercing ring operations."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyT(other)
        if not isinstance(other, PolyT):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyT({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "t" if i == 1 else f"t^{i}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{c}*{var}")
        out = terms[0]
        for term in terms[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def poly_gcd(a, b):
    """Monic greatest common divisor in the rational polynomial ring."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a * (Fraction(1) / a.coeffs[-1])


def poly_xgcd(a, b):
    """Extended Euclid: (g, u, v) with u*a + v*b = g and g monic unless zero."""
    r0, r1 = a, b
    s0, s1 = PolyT.one(), PolyT.zero()
    t0, t1 = PolyT.zero(), PolyT.one()
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    scale = Fraction(1) / r0.coeffs[-1]
    return r0 * scale, s0 * scale, t0 * scale


def pochhammer_t(m):
    """The finite product (1 - t)(1 - t^2)...(1 - t^m), with m = 0 giving 1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = PolyT.one()
    for k in range(1, m + 1):
        out = out * PolyT([1] + [0] * (k - 1) + [-1])
    return out


class PolyFraction:
    """Reduced ratio of two rational polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = PolyT.coerce(num)
        den = PolyT.one() if den is None else PolyT.coerce(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = PolyT.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            scale = Fraction(1) / den.coeffs[-1]
            num = num * scale
            den = den * scale
        self.num = num
        self.den = den

    @staticmethod
    def coerce(value):
        if isinstance(value, PolyFraction):
            return value
        return PolyFraction(PolyT.coerce(value))

    def __add__(self, other):
        try:
            other = PolyFraction.coerce(other)
        except TypeError:
            return NotImplemented
        return PolyFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = PolyFraction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = PolyFraction.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return PolyFraction(-self.num, self.den)

    def __mul__(self, other):
        try:
            other = PolyFraction.coerce(other)
        except TypeError:
            return NotImplemented
        return PolyFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = PolyFraction.coerce(other)
        if other.num.is_zero:
            raise ZeroDivisionError("division by zero")
        return PolyFraction(self.num * other.den, self.den * other.num)

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, PolyT)):
            other = PolyFraction.coerce(other)
        if not isinstance(other, PolyFraction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"PolyFraction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == PolyT.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"
