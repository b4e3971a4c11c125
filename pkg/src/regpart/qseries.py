"""Truncated formal power series in q over exact rationals, and the
generating functions of the partition-family statistics.

A series carries coefficients c0..cN for a fixed truncation degree N; all
arithmetic is exact on the retained degrees.  Infinite products are
materialized by multiplying in only those factors whose smallest nonconstant
exponent is at most N.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import prod

from .partitions import ModulusTuple


class TruncatedSeries:
    """Power series truncated at a fixed degree, exact Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant coefficient")
        self.coeffs = cs

    @classmethod
    def zero(cls, degree):
        return cls((Fraction(0),) * (degree + 1))

    @classmethod
    def one(cls, degree):
        return cls((Fraction(1),) + (Fraction(0),) * degree)

    @classmethod
    def monomial(cls, k, degree):
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        cs = [Fraction(0)] * (degree + 1)
        if k <= degree:
            cs[k] = Fraction(1)
        return cls(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, n):
        if not 0 <= n <= self.degree:
            raise ValueError(f"coefficient index {n} outside 0..{self.degree}")
        return self.coeffs[n]

    def integer_coefficients(self):
        """All coefficients as ints; raises if any is not integral."""
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient of q^{i} is not an integer: {c}")
            out.append(c.numerator)
        return tuple(out)

    def _check_degree(self, other):
        if self.degree != other.degree:
            raise ValueError(
                f"truncation degrees differ: {self.degree} vs {other.degree}"
            )

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_degree(other)
            return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_degree(other)
            return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))
        return NotImplemented

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_degree(other)
            n = self.degree
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return TruncatedSeries(out)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("cannot invert a series with zero constant term")
        out = [Fraction(1) / c0]
        for n in range(1, self.degree + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc += self.coeffs[k] * out[n - k]
            out.append(-acc / c0)
        return TruncatedSeries(out)

    def times_monomial(self, k):
        """Multiply by q^k."""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        n = self.degree
        return TruncatedSeries(
            [Fraction(0)] * min(k, n + 1) + list(self.coeffs[: n + 1 - k])
        )

    def times_geometric(self, k):
        """Multiply by 1 / (1 - q^k)."""
        if k < 1:
            raise ValueError("exponent must be at least 1")
        out = list(self.coeffs)
        for i in range(k, len(out)):
            out[i] += out[i - k]
        return TruncatedSeries(out)

    def times_one_minus(self, k):
        """Multiply by (1 - q^k)."""
        if k < 1:
            raise ValueError("exponent must be at least 1")
        out = list(self.coeffs)
        for i in range(len(out) - 1, k - 1, -1):
            out[i] -= out[i - k]
        return TruncatedSeries(out)

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{i}" if c != 1 else f"q^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.degree + 1})"


def class_regular_gf(moduli, degree):
    """Generating function of class-regular partition counts: the product of
    1/(1 - q^n) over n not divisible by any modulus."""
    moduli = ModulusTuple.ensure(moduli)
    s = TruncatedSeries.one(degree)
    for n in range(1, degree + 1):
        if moduli.indivisible(n):
            s = s.times_geometric(n)
    return s


def class_regular_gf_by_sieve(moduli, degree):
    """The same series assembled by inclusion-exclusion over modulus subsets:
    the full partition product times, for each nonempty subset, the factors
    (1 - q^(n * R)) with R the subset product, multiplied for odd subsets and
    divided for even ones.  Independent route used to cross-check."""
    moduli = ModulusTuple.ensure(moduli)
    s = TruncatedSeries.one(degree)
    for n in range(1, degree + 1):
        s = s.times_geometric(n)
    m = len(moduli)
    for size in range(1, m + 1):
        for subset in combinations(moduli.moduli, size):
            r = prod(subset)
            for n in range(1, degree // r + 1):
                if size % 2:
                    s = s.times_one_minus(n * r)
                else:
                    s = s.times_geometric(n * r)
    return s


def multiplicity_total_gf(moduli, j, degree):
    """Generating function of the per-part multiplicity totals (statistic V):
    the class-regular product times q^j / (1 - q^j).

    Rejects j divisible by one of the moduli: the identity it feeds requires
    an admissible part value.
    """
    moduli = ModulusTuple.ensure(moduli)
    if j < 1:
        raise ValueError("j must be at least 1")
    if not moduli.indivisible(j):
        raise ValueError(f"j = {j} is divisible by one of the moduli {moduli}")
    phi = class_regular_gf(moduli, degree)
    return phi.times_monomial(j).times_geometric(j)


def _geometric_tail(e, degree):
    """q^e / (1 - q^e) as a truncated series."""
    return TruncatedSeries.monomial(e, degree).times_geometric(e)


def threshold_count_gf(moduli, j, degree):
    """Generating function of the multiplicity threshold counts (statistic W):
    the class-regular product times the signed subset sum of geometric tails
    q^(R*j) / (1 - q^(R*j)) over products R of modulus subsets."""
    moduli = ModulusTuple.ensure(moduli)
    if j < 1:
        raise ValueError("j must be at least 1")
    acc = TruncatedSeries.zero(degree)
    m = len(moduli)
    for size in range(0, m + 1):
        for subset in combinations(moduli.moduli, size):
            e = j * prod(subset)
            if e > degree:
                continue
            term = _geometric_tail(e, degree)
            acc = acc + term if size % 2 == 0 else acc - term
    return class_regular_gf(moduli, degree) * acc


def glaisher_exponent_gf(moduli, index, degree):
    """Generating function of the Glaisher step exponents (statistic c) for
    the modulus at `index`: the class-regular product times the sum of
    q^(r*n) / (1 - q^(r*n)) over n >= 1 not divisible by any other modulus."""
    moduli = ModulusTuple.ensure(moduli)
    r = moduli[index]
    others = moduli.others(index)
    acc = TruncatedSeries.zero(degree)
    for n in range(1, degree // r + 1):
        if any(n % ro == 0 for ro in others):
            continue
        acc = acc + _geometric_tail(r * n, degree)
    return class_regular_gf(moduli, degree) * acc


def regular_gf(moduli, degree):
    """Generating function of regular partition counts, assembled from the
    product of truncated geometric sums 1 + q^e + ... + q^((r1-1)*e): the base
    factors appear directly, those for odd-size subsets of the remaining
    moduli inverted, even-size subsets direct again.  Coefficientwise equal to
    the class-regular series."""
    moduli = ModulusTuple.ensure(moduli)
    r1 = moduli[0]
    rest = moduli.moduli[1:]
    s = TruncatedSeries.one(degree)
    for size in range(0, len(rest) + 1):
        for subset in combinations(rest, size):
            r = prod(subset)
            for n in range(1, degree // r + 1):
                # factor (1 - q^(r1*n*R)) / (1 - q^(n*R)), or its reciprocal
                if size % 2 == 0:
                    s = s.times_one_minus(r1 * n * r).times_geometric(n * r)
                else:
                    s = s.times_geometric(r1 * n * r).times_one_minus(n * r)
    return s
