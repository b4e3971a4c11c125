"""Integer partitions, coprime modulus tuples, and partition-family statistics.

Given a tuple of pairwise coprime moduli (r1, ..., rm), a partition is
*class regular* when no part is divisible by any modulus, and *regular* when
every part multiplicity is below r1 and no part is divisible by r2, ..., rm.
The two families of a fixed weight are equinumerous; the explicit bijection
lives in `regpart.glaisher`.

All enumeration functions emit partitions in the canonical order: largest-first
lexicographic on part tuples, so (n) comes first and (1^n) last.  Every matrix
in the package indexes its rows and columns in this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, gcd


class Partition:
    """Weakly decreasing tuple of positive integer parts."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = tuple(int(p) for p in parts)
        previous = None
        for p in ps:
            if p <= 0:
                raise ValueError(f"parts must be positive, got {p}")
            if previous is not None and p > previous:
                raise ValueError(f"parts must be weakly decreasing, got {ps}")
            previous = p
        self.parts = ps

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def multiplicity(self, value):
        return self.parts.count(value)

    def multiplicities(self):
        """Map part value -> multiplicity, keys in decreasing value order."""
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def union(self, other):
        """Multiset union of parts (the index of a product of power sums)."""
        return Partition(sorted(self.parts + other.parts, reverse=True))

    def remove_rectangle(self, value, count):
        """Remove `count` parts equal to `value`."""
        if self.multiplicity(value) < count:
            raise ValueError(
                f"cannot remove {count} parts of size {value} from {self}"
            )
        parts = list(self.parts)
        for _ in range(count):
            parts.remove(value)
        return Partition(parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def canonical_key(partition):
    """Sort key for the canonical order: ascending on this key lists (n) first."""
    return tuple(-p for p in partition.parts)


def dominates(lam, mu):
    """True when the partial sums of `lam` weakly dominate those of `mu`.

    Both partitions must have the same weight.
    """
    if lam.weight != mu.weight:
        raise ValueError("dominance compares partitions of equal weight")
    total_l = total_m = 0
    for i in range(max(lam.length, mu.length)):
        total_l += lam.parts[i] if i < lam.length else 0
        total_m += mu.parts[i] if i < mu.length else 0
        if total_l < total_m:
            return False
    return True


class ModulusTuple:
    """Tuple (r1, ..., rm) of pairwise coprime integers, each at least 2.

    Order is significant: the first modulus bounds multiplicities in the
    regular family and drives the Glaisher bijection.
    """

    __slots__ = ("moduli",)

    def __init__(self, moduli):
        ms = tuple(int(r) for r in moduli)
        if not ms:
            raise ValueError("at least one modulus is required")
        for r in ms:
            if r < 2:
                raise ValueError(f"moduli must be at least 2, got {r}")
        for i in range(len(ms)):
            for j in range(i + 1, len(ms)):
                if gcd(ms[i], ms[j]) != 1:
                    raise ValueError(
                        f"moduli must be pairwise coprime, got {ms[i]} and {ms[j]}"
                    )
        self.moduli = ms

    @classmethod
    def ensure(cls, value):
        if isinstance(value, ModulusTuple):
            return value
        if isinstance(value, int):
            return cls((value,))
        return cls(value)

    def indivisible(self, x):
        """True when x is not divisible by any modulus."""
        return all(x % r for r in self.moduli)

    def others(self, index):
        """The moduli with position `index` removed, as a plain tuple."""
        if not 0 <= index < len(self.moduli):
            raise ValueError(f"modulus index {index} out of range")
        return self.moduli[:index] + self.moduli[index + 1:]

    def rotated_to_front(self, index):
        """A tuple with the modulus at `index` moved to the first position."""
        return ModulusTuple((self.moduli[index],) + self.others(index))

    def index_of(self, value):
        return self.moduli.index(value)

    def __iter__(self):
        return iter(self.moduli)

    def __len__(self):
        return len(self.moduli)

    def __getitem__(self, i):
        return self.moduli[i]

    def __eq__(self, other):
        return isinstance(other, ModulusTuple) and self.moduli == other.moduli

    def __hash__(self):
        return hash(self.moduli)

    def __repr__(self):
        return f"ModulusTuple({list(self.moduli)})"

    def __str__(self):
        return ",".join(str(r) for r in self.moduli)


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of n in canonical order, as a cached tuple."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def extend(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            extend(remaining - part, part, prefix + [part])

    extend(n, n, [])
    return tuple(out)


def is_class_regular(partition, moduli):
    """No part divisible by any modulus."""
    moduli = ModulusTuple.ensure(moduli)
    return all(moduli.indivisible(p) for p in partition.parts)


def is_regular(partition, moduli):
    """Every multiplicity below the first modulus, no part divisible by the rest.

    Parts divisible by the first modulus are allowed.
    """
    moduli = ModulusTuple.ensure(moduli)
    rest = moduli.moduli[1:]
    for value, mult in partition.multiplicities().items():
        if mult >= moduli.moduli[0]:
            return False
        if any(value % r == 0 for r in rest):
            return False
    return True


def class_regular_partitions(moduli, n):
    """The class-regular partitions of n in canonical order, as a cached tuple."""
    return _class_regular(ModulusTuple.ensure(moduli), n)


@lru_cache(maxsize=None)
def _class_regular(moduli, n):
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def extend(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            if not moduli.indivisible(part):
                continue
            extend(remaining - part, part, prefix + [part])

    extend(n, n, [])
    return tuple(out)


def regular_partitions(moduli, n):
    """The regular partitions of n in canonical order, as a cached tuple."""
    return _regular(ModulusTuple.ensure(moduli), n)


@lru_cache(maxsize=None)
def _regular(moduli, n):
    if n < 0:
        raise ValueError("n must be nonnegative")
    r1 = moduli.moduli[0]
    rest = moduli.moduli[1:]
    out = []

    def extend(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for value in range(min(cap, remaining), 0, -1):
            if any(value % r == 0 for r in rest):
                continue
            # emit runs of equal parts, longest first, to keep canonical order
            for count in range(min(r1 - 1, remaining // value), 0, -1):
                extend(remaining - count * value, value - 1, prefix + [value] * count)

    extend(n, n, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _multiplicity_profile(moduli, n):
    """Per-j totals over the class-regular family of n.

    Returns (v, w) where for 1 <= j <= n, v[j] is the total multiplicity of j
    and w[j] the number of (partition, part value) pairs whose multiplicity
    reaches j.  Index 0 is unused.
    """
    v = [0] * (n + 1)
    w = [0] * (n + 1)
    for p in _class_regular(moduli, n):
        for value, mult in p.multiplicities().items():
            v[value] += mult
            for j in range(1, mult + 1):
                w[j] += 1
    return tuple(v), tuple(w)


def multiplicity_total(moduli, j, n):
    """Total multiplicity of the part j across class-regular partitions of n.

    This is the statistic the command line calls V.
    """
    if j < 1:
        raise ValueError("j must be at least 1")
    moduli = ModulusTuple.ensure(moduli)
    if j > n:
        return 0
    return _multiplicity_profile(moduli, n)[0][j]


def threshold_count(moduli, j, n):
    """Number of (partition, part value) pairs with multiplicity at least j,
    over the class-regular partitions of n.

    This is the statistic the command line calls W.
    """
    if j < 1:
        raise ValueError("j must be at least 1")
    moduli = ModulusTuple.ensure(moduli)
    if j > n:
        return 0
    return _multiplicity_profile(moduli, n)[1][j]


def residue_count(r, j, n):
    """Number of parts congruent to j mod r across class-regular partitions
    of n for the single modulus r.

    This is the statistic the command line calls X.  Requires 1 <= j <= r - 1.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if not 1 <= j <= r - 1:
        raise ValueError(f"j must lie in 1..{r - 1}, got {j}")
    total = 0
    for p in class_regular_partitions((r,), n):
        total += sum(1 for part in p.parts if part % r == j)
    return total


def regular_threshold_count(r, j, n):
    """Number of (partition, part value) pairs with multiplicity at least j,
    over the regular partitions of n for the single modulus r.

    This is the statistic the command line calls Y.  Requires 1 <= j <= r - 1.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if not 1 <= j <= r - 1:
        raise ValueError(f"j must lie in 1..{r - 1}, got {j}")
    total = 0
    for p in regular_partitions((r,), n):
        total += sum(1 for mult in p.multiplicities().values() if mult >= j)
    return total


def part_product(moduli, n):
    """Product of all parts of all class-regular partitions of n.

    The command line calls this a.  Exact arbitrary-precision integer.
    """
    moduli = ModulusTuple.ensure(moduli)
    total = 1
    for p in class_regular_partitions(moduli, n):
        for part in p.parts:
            total *= part
    return total


def multiplicity_factorial_product(moduli, n):
    """Product of all multiplicity factorials of all class-regular partitions
    of n.

    The command line calls this b.  Exact arbitrary-precision integer.
    """
    moduli = ModulusTuple.ensure(moduli)
    total = 1
    for p in class_regular_partitions(moduli, n):
        for mult in p.multiplicities().values():
            total *= factorial(mult)
    return total


def _exponent_vectors(moduli, bound):
    """All exponent vectors k >= 0 with prod(moduli[l] ** k[l]) <= bound,
    paired with that product."""
    vecs = [((), 1)]
    for r in moduli:
        extended = []
        for kvec, power in vecs:
            k, pw = 0, power
            while pw <= bound:
                extended.append((kvec + (k,), pw))
                k += 1
                pw *= r
        vecs = extended
    return vecs


def glaisher_exponent(moduli, index, n):
    """The exponent of moduli[index] relating the two family products: the
    multiplicity-factorial product equals the part product times
    prod_i moduli[i] ** exponent_i.

    It also equals the total number of splitting steps the Glaisher bijection
    performs for that modulus; the command line calls this c.  Computed here
    as a finite double sum of threshold counts.
    """
    moduli = ModulusTuple.ensure(moduli)
    if not 0 <= index < len(moduli):
        raise ValueError(f"modulus index {index} out of range")
    total = 0
    for j in range(1, n + 1):
        if not moduli.indivisible(j):
            continue
        for kvec, power in _exponent_vectors(moduli.moduli, n // j):
            if kvec[index]:
                total += kvec[index] * threshold_count(moduli, power * j, n)
    return total


@dataclass(frozen=True)
class StatisticTable:
    """A row of statistic values indexed by j = 1..len(values)."""

    name: str
    moduli: ModulusTuple
    n: int
    values: tuple

    def value(self, j):
        if not 1 <= j <= len(self.values):
            raise ValueError(f"j must lie in 1..{len(self.values)}")
        return self.values[j - 1]


_TABLE_BUILDERS = {
    "V": multiplicity_total,
    "W": threshold_count,
}


def statistic_table(name, moduli, n):
    """Tabulate one of the named statistics: V and W over j = 1..n for any
    modulus tuple, X and Y over j = 1..r-1 for a single modulus."""
    moduli = ModulusTuple.ensure(moduli)
    if name in ("V", "W"):
        fn = _TABLE_BUILDERS[name]
        values = tuple(fn(moduli, j, n) for j in range(1, n + 1))
    elif name in ("X", "Y"):
        if len(moduli) != 1:
            raise ValueError(f"statistic {name} takes a single modulus")
        r = moduli.moduli[0]
        fn = residue_count if name == "X" else regular_threshold_count
        values = tuple(fn(r, j, n) for j in range(1, r))
    else:
        raise ValueError(f"unknown statistic {name!r}")
    return StatisticTable(name=name, moduli=moduli, n=n, values=values)
