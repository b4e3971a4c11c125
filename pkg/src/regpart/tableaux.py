"""Semistandard tableaux, the charge statistic, and Kostka-Foulkes polynomials.

A Kostka-Foulkes polynomial is the charge generating polynomial over all
semistandard tableaux of a given shape and content; at t = 1 it collapses to
the classical Kostka number.  Rows and columns of the full matrix follow the
canonical partition order, which makes it upper unitriangular.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import Partition, partitions
from .polynomials import PolyT


def semistandard_tableaux(shape, content):
    """All fillings of `shape` with content `content` having weakly increasing
    rows and strictly increasing columns.  Both arguments are partitions of
    the same weight; tableaux are returned as tuples of row tuples."""
    if shape.weight != content.weight:
        raise ValueError("shape and content must have equal weight")
    remaining = list(content.parts)
    letters = len(remaining)
    rows = [[0] * width for width in shape.parts]
    cells = [(i, j) for i, width in enumerate(shape.parts) for j in range(width)]
    out = []

    def fill(idx):
        if idx == len(cells):
            out.append(tuple(tuple(row) for row in rows))
            return
        i, j = cells[idx]
        lo = rows[i][j - 1] if j > 0 else 1
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, letters + 1):
            if not remaining[v - 1]:
                continue
            remaining[v - 1] -= 1
            rows[i][j] = v
            fill(idx + 1)
            remaining[v - 1] += 1
        rows[i][j] = 0

    fill(0)
    return out


def reading_word(tableau):
    """Rows read left to right, bottom row first."""
    return [v for row in reversed(tableau) for v in row]


def _validate_partition_content(word):
    counts = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
    if not counts:
        return 0
    top = max(counts)
    mults = [counts.get(a, 0) for a in range(1, top + 1)]
    if any(m == 0 for m in mults):
        raise ValueError("word letters must be 1..k with none missing")
    if any(mults[i] < mults[i + 1] for i in range(len(mults) - 1)):
        raise ValueError("word content must be a partition")
    return top


def charge(word):
    """Charge statistic of a word whose letter content is a partition.

    Standard subwords are extracted by marking the rightmost 1 and then
    scanning cyclically leftward for each next letter; each subword
    contributes the sum of its letter indices, where the index grows by one
    whenever the next letter sits strictly to the right of the previous one.
    """
    word = list(word)
    _validate_partition_content(word)
    active = [True] * len(word)
    remaining = len(word)
    total = 0
    while remaining:
        counts = {}
        for i, v in enumerate(word):
            if active[i]:
                counts[v] = counts.get(v, 0) + 1
        top = max(counts)
        pos = max(i for i, v in enumerate(word) if active[i] and v == 1)
        marked = [pos]
        for letter in range(2, top + 1):
            i = pos
            while True:
                i = i - 1 if i > 0 else len(word) - 1
                if active[i] and word[i] == letter:
                    break
            marked.append(i)
            pos = i
        position_of = {word[i]: i for i in marked}
        index = 0
        for letter in range(2, top + 1):
            if position_of[letter] > position_of[letter - 1]:
                index += 1
            total += index
        for i in marked:
            active[i] = False
        remaining -= len(marked)
    return total


def kostka_foulkes(shape, content):
    """The charge generating polynomial over semistandard tableaux of the
    given shape and content."""
    if shape.weight != content.weight:
        raise ValueError("shape and content must have equal weight")
    histogram = {}
    for tableau in semistandard_tableaux(shape, content):
        c = charge(reading_word(tableau))
        histogram[c] = histogram.get(c, 0) + 1
    if not histogram:
        return PolyT.zero()
    coeffs = [0] * (max(histogram) + 1)
    for c, count in histogram.items():
        coeffs[c] = count
    return PolyT(coeffs)


def kostka_number(shape, content):
    """The number of semistandard tableaux of the given shape and content."""
    if shape.weight != content.weight:
        raise ValueError("shape and content must have equal weight")
    return len(semistandard_tableaux(shape, content))


@lru_cache(maxsize=None)
def kostka_matrix(n):
    """The full matrix of Kostka-Foulkes polynomials for weight n, rows and
    columns in canonical partition order."""
    ps = partitions(n)
    return tuple(
        tuple(kostka_foulkes(lam, mu) for mu in ps) for lam in ps
    )


@lru_cache(maxsize=None)
def inverse_kostka_matrix(n):
    """Inverse of the Kostka-Foulkes matrix, computed by back substitution on
    its upper unitriangular form.  Entries are again polynomials."""
    ps = partitions(n)
    size = len(ps)
    matrix = kostka_matrix(n)
    inverse = [
        [PolyT.one() if i == j else PolyT.zero() for j in range(size)]
        for i in range(size)
    ]
    for j in range(size):
        for i in range(j - 1, -1, -1):
            acc = PolyT.zero()
            for k in range(i + 1, j + 1):
                if matrix[i][k] and inverse[k][j]:
                    acc = acc + matrix[i][k] * inverse[k][j]
            inverse[i][j] = -acc
    return tuple(tuple(row) for row in inverse)
