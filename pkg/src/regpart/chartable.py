"""Character tables of the symmetric group and their determinant identities.

The full table pairs all partitions of n against all cycle types; the
restricted table keeps regular row labels and class-regular column labels for
one modulus.  Its determinant magnitude is the product of all parts of all
class-regular partitions; the sign depends on the index order and is reported,
not predicted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import (
    Partition,
    class_regular_partitions,
    glaisher_exponent,
    part_product,
    partitions,
    regular_partitions,
)
from .symfunc import (
    bareiss_determinant,
    character,
    transition_matrix,
    z_factor,
)


@dataclass(frozen=True)
class CharacterTable:
    """Integer table of character values, rows labeled by representations and
    columns by conjugacy classes."""

    n: int
    rows: tuple
    cols: tuple
    entries: tuple

    def entry(self, lam, rho):
        return self.entries[self.rows.index(lam)][self.cols.index(rho)]

    @property
    def is_square(self):
        return len(self.rows) == len(self.cols)

    def determinant(self):
        if not self.is_square:
            raise ValueError("determinant needs a square table")
        return bareiss_determinant(self.entries)


def character_table(n):
    """The full table over all partitions of n, canonical order both ways."""
    if n < 1:
        raise ValueError("n must be at least 1")
    ps = partitions(n)
    entries = tuple(
        tuple(character(lam, rho) for rho in ps) for lam in ps
    )
    return CharacterTable(n=n, rows=ps, cols=ps, entries=entries)


def regular_character_table(r, n):
    """The square subtable with regular rows and class-regular columns for the
    modulus r."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = regular_partitions((r,), n)
    cols = class_regular_partitions((r,), n)
    entries = tuple(
        tuple(character(lam, rho) for rho in cols) for lam in rows
    )
    return CharacterTable(n=n, rows=rows, cols=cols, entries=entries)


@dataclass(frozen=True)
class OlssonReport:
    """Outcome of the determinant-magnitude check for one restricted table."""

    r: int
    n: int
    determinant: int
    predicted_magnitude: int
    sign: int
    ok: bool


def olsson_check(r, n):
    """Compare the restricted table determinant against the product of all
    parts of all class-regular partitions; the sign is reported relative to
    the canonical index order."""
    det = regular_character_table(r, n).determinant()
    predicted = part_product((r,), n)
    sign = 0 if det == 0 else (1 if det > 0 else -1)
    return OlssonReport(
        r=r,
        n=n,
        determinant=det,
        predicted_magnitude=predicted,
        sign=sign,
        ok=abs(det) == predicted,
    )


@dataclass(frozen=True)
class DetChainReport:
    """Outcome of the factorization chain linking the restricted character
    table to the transition determinants of the reduced bases."""

    r: int
    n: int
    exponent: int
    table_determinant: int
    schur_to_qprime_unimodular: bool
    qprime_to_power_magnitude_ok: bool
    chain_multiplicative: bool
    schur_rows_match_table: bool
    table_determinant_ok: bool

    @property
    def ok(self):
        return (
            self.schur_to_qprime_unimodular
            and self.qprime_to_power_magnitude_ok
            and self.chain_multiplicative
            and self.schur_rows_match_table
            and self.table_determinant_ok
        )


def det_chain_check(r, n):
    """Check every link of the determinant factorization at one (r, n):
    the Schur-to-dual transition is unimodular, the dual-to-power-sum
    determinant squares to 1 / (r^(2c) * product of parts squared), the two
    multiply to the Schur-to-power-sum determinant, whose rows are the table
    entries divided by centralizer orders, and the table determinant has the
    predicted magnitude."""
    m_sq = transition_matrix("s", "qprime", n, r)
    m_qp = transition_matrix("qprime", "p", n, r)
    m_sp = transition_matrix("s", "p", n, r)

    d_sq = m_sq.determinant()
    d_qp = m_qp.determinant()
    d_sp = m_sp.determinant()

    c = glaisher_exponent((r,), 0, n)
    a = part_product((r,), n)
    cp = class_regular_partitions((r,), n)
    rp = regular_partitions((r,), n)
    table = regular_character_table(r, n)

    unimodular = d_sq * d_sq == 1
    magnitude_ok = d_qp * d_qp == Fraction(1, r ** (2 * c) * a * a)
    chain_ok = d_sp == d_sq * d_qp

    rows_ok = True
    for i, lam in enumerate(rp):
        for j, rho in enumerate(cp):
            expected = Fraction(character(lam, rho), z_factor(rho))
            if m_sp.entries[i][j] != expected:
                rows_ok = False
                break
        if not rows_ok:
            break

    t_det = table.determinant()
    z_product = 1
    for rho in cp:
        z_product *= z_factor(rho)
    table_ok = (d_sp * d_sp) * (z_product * z_product) == t_det * t_det

    return DetChainReport(
        r=r,
        n=n,
        exponent=c,
        table_determinant=t_det,
        schur_to_qprime_unimodular=unimodular,
        qprime_to_power_magnitude_ok=magnitude_ok,
        chain_multiplicative=chain_ok,
        schur_rows_match_table=rows_ok,
        table_determinant_ok=table_ok,
    )
