"""Symmetric functions of a fixed degree in the power-sum basis.

Coefficients may be rationals, polynomials in the deformation parameter t, or
cyclotomic numbers after specializing t at a root of unity.  The module covers
Schur functions via symmetric-group characters, the one-parameter orthogonal
family P/Q and its Hall dual Q', reduction and plethysm by a modulus, the
deformed inner products, and exact transition matrices between the reduced
bases indexed by regular and class-regular partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .cyclotomic import CyclotomicNumber
from .partitions import (
    ModulusTuple,
    Partition,
    class_regular_partitions,
    partitions,
    regular_partitions,
)
from .polynomials import PolyFraction, PolyT, pochhammer_t
from .tableaux import inverse_kostka_matrix, kostka_matrix

GENERIC_T = "generic"


class SymFunc:
    """Homogeneous symmetric function of degree n, stored as a map from index
    partitions to power-sum coefficients.  Zero coefficients are absent."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        data = {}
        if coeffs:
            for part, c in coeffs.items():
                if part.weight != n:
                    raise ValueError(
                        f"index {part} does not have weight {n}"
                    )
                if not c:
                    continue
                data[part] = c
        self.coeffs = data

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def power_sum(cls, part):
        return cls(part.weight, {part: Fraction(1)})

    def coefficient(self, part):
        return self.coeffs.get(part, 0)

    def support(self):
        """Index partitions with nonzero coefficient, canonical order."""
        return sorted(self.coeffs, key=lambda p: tuple(-x for x in p.parts))

    @property
    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("cannot add symmetric functions of different degree")
        data = dict(self.coeffs)
        for part, c in other.coeffs.items():
            data[part] = data[part] + c if part in data else c
        return SymFunc(self.n, data)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, scalar):
        if not scalar:
            return SymFunc(self.n)
        return SymFunc(
            self.n, {part: scalar * c for part, c in self.coeffs.items()}
        )

    def __mul__(self, other):
        """Product of symmetric functions: power sums multiply by part-multiset
        union.  Scalars are accepted too."""
        if not isinstance(other, SymFunc):
            return self.scale(other)
        data = {}
        for pa, ca in self.coeffs.items():
            for pb, cb in other.coeffs.items():
                key = pa.union(pb)
                c = ca * cb
                data[key] = data[key] + c if key in data else c
        return SymFunc(self.n + other.n, data)

    def __rmul__(self, other):
        return self.scale(other)

    def map_coefficients(self, fn):
        return SymFunc(self.n, {part: fn(c) for part, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self):
        items = ", ".join(
            f"{part}: {c}" for part, c in sorted(
                self.coeffs.items(), key=lambda kv: tuple(-x for x in kv[0].parts)
            )
        )
        return f"SymFunc({self.n}, {{{items}}})"


def z_factor(part):
    """The centralizer order of the conjugacy class with cycle type `part`:
    the product of value^multiplicity * multiplicity! over distinct parts."""
    out = 1
    for value, mult in part.multiplicities().items():
        out *= value ** mult * factorial(mult)
    return out


def z_factor_at_root(part, zeta):
    """The deformed normalization z(part) / prod(1 - zeta^value) at a root of
    unity.  Signals a pole when some part is divisible by the root order."""
    for value in part.parts:
        if value % zeta.order == 0:
            raise ValueError(
                f"pole: part {value} is divisible by the root order {zeta.order}"
            )
    denominator = CyclotomicNumber.one(zeta.order)
    for value in part.parts:
        denominator = denominator * (1 - zeta ** value)
    return z_factor(part) * denominator.inverse()


def z_factor_generic(part):
    """The deformed normalization with t left symbolic, as an exact ratio of
    polynomials."""
    denominator = PolyT.one()
    for value in part.parts:
        denominator = denominator * PolyT([1] + [0] * (value - 1) + [-1])
    return PolyFraction(PolyT(z_factor(part)), denominator)


def character(lam, rho):
    """Irreducible symmetric-group character value, by the signed border-strip
    recursion, memoized."""
    if lam.weight != rho.weight:
        raise ValueError("character arguments must have equal weight")
    return _character(lam, rho)


@lru_cache(maxsize=None)
def _character(lam, rho):
    if rho.weight == 0:
        return 1
    k = rho.parts[0]
    rest = Partition(rho.parts[1:])
    total = 0
    for smaller, height in _strip_removals(lam, k):
        total += (-1) ** height * _character(smaller, rest)
    return total


def _strip_removals(lam, k):
    """All ways to remove a border strip of size k, as (partition, height)
    pairs, via first-column hook lengths."""
    ell = lam.length
    beta = [lam.parts[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    out = []
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        parts = []
        for i, x in enumerate(new_beta):
            value = x - (ell - 1 - i)
            if value > 0:
                parts.append(value)
        out.append((Partition(parts), height))
    return out


@lru_cache(maxsize=None)
def schur_in_p(lam):
    """The Schur function in the power-sum basis: coefficient of each index
    is the character value divided by the centralizer order."""
    n = lam.weight
    return SymFunc(
        n,
        {
            rho: Fraction(character(lam, rho), z_factor(rho))
            for rho in partitions(n)
        },
    )


def complete_homogeneous_in_p(k):
    """The complete homogeneous function of degree k in power sums."""
    return SymFunc(
        k, {rho: Fraction(1, z_factor(rho)) for rho in partitions(k)}
    )


def b_poly(lam):
    """The multiplicity product of finite t-factorials attached to a
    partition: prod over values of (1 - t)...(1 - t^multiplicity)."""
    out = PolyT.one()
    for mult in lam.multiplicities().values():
        out = out * pochhammer_t(mult)
    return out


@lru_cache(maxsize=None)
def hl_qprime(mu):
    """The Hall dual of the one-parameter P family: the Kostka-Foulkes
    combination of Schur functions, expanded into power sums over polynomial
    coefficients in t."""
    n = mu.weight
    ps = partitions(n)
    col = ps.index(mu)
    matrix = kostka_matrix(n)
    data = {}
    for i, lam in enumerate(ps):
        kpoly = matrix[i][col]
        if not kpoly:
            continue
        for rho, c in schur_in_p(lam).coeffs.items():
            term = kpoly * c
            data[rho] = data[rho] + term if rho in data else term
    return SymFunc(n, data)


@lru_cache(maxsize=None)
def hl_p(mu):
    """The one-parameter orthogonal family member P, obtained by inverting the
    unitriangular Kostka-Foulkes transition against the Schur functions."""
    n = mu.weight
    ps = partitions(n)
    row = ps.index(mu)
    inverse = inverse_kostka_matrix(n)
    acc = SymFunc.zero(n)
    for j, lam in enumerate(ps):
        entry = inverse[row][j]
        if entry:
            acc = acc + schur_in_p(lam).scale(entry)
    return acc


def hl_q(mu):
    """The rescaled family member Q = b(t) * P."""
    return hl_p(mu).scale(b_poly(mu))


def specialize(f, zeta):
    """Evaluate every coefficient at the given root of unity, returning a
    symmetric function over cyclotomic numbers."""

    def evaluate(c):
        if isinstance(c, PolyT):
            value = c(zeta)
            if isinstance(value, CyclotomicNumber):
                return value
            return CyclotomicNumber(zeta.order, value)
        if isinstance(c, (int, Fraction)):
            return CyclotomicNumber(zeta.order, c)
        if isinstance(c, CyclotomicNumber):
            return c
        raise TypeError(f"cannot specialize coefficient of type {type(c).__name__}")

    return f.map_coefficients(evaluate)


def r_reduce(f, r):
    """Drop every power-sum index containing a part divisible by r."""
    return SymFunc(
        f.n,
        {
            part: c
            for part, c in f.coeffs.items()
            if all(value % r for value in part.parts)
        },
    )


def power_substitution(f, r):
    """Replace each power sum by the one with r times its index, the effect of
    substituting r-th powers of the variables."""
    return SymFunc(
        f.n * r,
        {
            Partition([value * r for value in part.parts]): c
            for part, c in f.coeffs.items()
        },
    )


def hall_inner(f, g, t=0):
    """Deformed power-sum inner product: indices pair diagonally with weight
    z(part) at t = 0, the symbolic ratio for generic t, or the specialized
    value at a root of unity.

    At a root of unity both arguments must be supported on partitions with no
    part divisible by the root order, otherwise the weight has a pole.
    """
    if f.n != g.n:
        raise ValueError("inner product needs equal degrees")
    common = set(f.coeffs) & set(g.coeffs)
    if isinstance(t, CyclotomicNumber):
        acc = CyclotomicNumber.zero(t.order)
        for part in common:
            acc = acc + f.coeffs[part] * g.coeffs[part] * z_factor_at_root(part, t)
        return acc
    if t == 0:
        acc = 0
        for part in common:
            acc = acc + f.coeffs[part] * g.coeffs[part] * z_factor(part)
        return acc
    if t == GENERIC_T:
        acc = PolyFraction(PolyT.zero())
        for part in common:
            acc = acc + z_factor_generic(part) * PolyFraction.coerce(
                PolyT.coerce(f.coeffs[part]) * PolyT.coerce(g.coeffs[part])
            )
        return acc
    raise ValueError(f"unsupported inner product mode {t!r}")


@dataclass(frozen=True)
class TransitionMatrix:
    """Exact matrix expressing one family (rows) in another (columns)."""

    rows: tuple
    cols: tuple
    entries: tuple

    @property
    def is_square(self):
        return len(self.rows) == len(self.cols)

    def entry(self, row_part, col_part):
        return self.entries[self.rows.index(row_part)][self.cols.index(col_part)]

    def determinant(self):
        if not self.is_square:
            raise ValueError("determinant needs a square matrix")
        return bareiss_determinant(self.entries)

    def is_identity(self):
        if not self.is_square:
            return False
        return all(
            (e == 1 if i == j else not e)
            for i, row in enumerate(self.entries)
            for j, e in enumerate(row)
        )

    def is_lower_unitriangular(self):
        if not self.is_square:
            return False
        return all(
            (e == 1 if i == j else (not e if j > i else True))
            for i, row in enumerate(self.entries)
            for j, e in enumerate(row)
        )

    def __matmul__(self, other):
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("inner index sets do not match")
        entries = tuple(
            tuple(
                _dot(self.entries[i], [other.entries[k][j] for k in range(len(other.rows))])
                for j in range(len(other.cols))
            )
            for i in range(len(self.rows))
        )
        return TransitionMatrix(rows=self.rows, cols=other.cols, entries=entries)


def _dot(xs, ys):
    acc = None
    for x, y in zip(xs, ys):
        term = x * y
        acc = term if acc is None else acc + term
    return acc


def bareiss_determinant(rows):
    """Exact determinant by fraction-free elimination.  Intermediate divisions
    are exact in the coefficient domain: integer, rational, polynomial, or
    cyclotomic entries all work."""
    m = [list(r) for r in rows]
    size = len(m)
    if size == 0:
        return 1
    if any(len(r) != size for r in m):
        raise ValueError("matrix must be square")
    sign = 1
    previous = None
    for k in range(size - 1):
        if not m[k][k]:
            for i in range(k + 1, size):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                value = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = value if previous is None else _exact_entry_div(value, previous)
        previous = m[k][k]
    det = m[size - 1][size - 1]
    return det if sign == 1 else -det


def _exact_entry_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division during elimination")
        return q
    if isinstance(a, PolyT) or isinstance(b, PolyT):
        return PolyT.coerce(a).exact_div(PolyT.coerce(b))
    return a / b


def field_matrix_inverse(rows, one):
    """Gauss-Jordan inverse over a field; `one` is the multiplicative identity
    of the entry domain."""
    size = len(rows)
    a = [list(r) for r in rows]
    zero = one - one
    inv = [[one if i == j else zero for j in range(size)] for i in range(size)]
    for col in range(size):
        pivot = None
        for i in range(col, size):
            if a[i][col]:
                pivot = i
                break
        if pivot is None:
            raise ValueError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = one / a[col][col]
        a[col] = [scale * e for e in a[col]]
        inv[col] = [scale * e for e in inv[col]]
        for i in range(size):
            if i == col or not a[i][col]:
                continue
            factor = a[i][col]
            a[i] = [e - factor * p for e, p in zip(a[i], a[col])]
            inv[i] = [e - factor * p for e, p in zip(inv[i], inv[col])]
    return [list(r) for r in inv]


FAMILIES = ("s", "qprime", "p")


def _reduced_family_in_p(family, n, r, zeta):
    """Power-sum coefficient rows (over the class-regular index set) of the
    reduced family members, as cyclotomic numbers."""
    cp = class_regular_partitions((r,), n)
    rp = regular_partitions((r,), n)
    if family == "p":
        one = CyclotomicNumber.one(r)
        zero = CyclotomicNumber.zero(r)
        return cp, [
            [one if i == j else zero for j in range(len(cp))] for i in range(len(cp))
        ]
    if family == "s":
        members = [
            specialize(r_reduce(schur_in_p(lam), r), zeta) for lam in rp
        ]
    elif family == "qprime":
        members = [
            r_reduce(specialize(hl_qprime(lam), zeta), r) for lam in rp
        ]
    else:
        raise ValueError(f"unknown family {family!r}")
    zero = CyclotomicNumber.zero(r)
    rows = [
        [f.coeffs.get(rho, zero) for rho in cp] for f in members
    ]
    return rp, rows


def transition_matrix(u, v, n, r):
    """The exact matrix expressing the reduced family u in the reduced family
    v at a primitive root of unity of order r.  The reduced Schur and Hall
    dual families are indexed by the regular partitions, the power sums by the
    class-regular ones; all indices follow the canonical order."""
    if u not in FAMILIES or v not in FAMILIES:
        raise ValueError(f"families must be among {FAMILIES}")
    zeta = CyclotomicNumber.zeta(r)
    u_index, u_rows = _reduced_family_in_p(u, n, r, zeta)
    if u == v:
        one = CyclotomicNumber.one(r)
        zero = CyclotomicNumber.zero(r)
        entries = tuple(
            tuple(one if i == j else zero for j in range(len(u_index)))
            for i in range(len(u_index))
        )
        return TransitionMatrix(rows=u_index, cols=u_index, entries=entries)
    if v == "p":
        cp = class_regular_partitions((r,), n)
        return TransitionMatrix(
            rows=u_index, cols=cp, entries=tuple(tuple(row) for row in u_rows)
        )
    v_index, v_rows = _reduced_family_in_p(v, n, r, zeta)
    v_inverse = field_matrix_inverse(v_rows, CyclotomicNumber.one(r))
    entries = tuple(
        tuple(
            _dot(u_rows[i], [v_inverse[k][j] for k in range(len(v_inverse))])
            for j in range(len(v_index))
        )
        for i in range(len(u_index))
    )
    return TransitionMatrix(rows=u_index, cols=v_index, entries=entries)
