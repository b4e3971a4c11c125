"""The Glaisher bijection between regular and class-regular partitions.

Forward direction: each part j * r1^v with j not divisible by r1 splits into
r1^v copies of j.  Inverse direction: each part value j of multiplicity m is
regrouped according to the base-r1 digits of m, each digit d_k contributing
d_k parts of size j * r1^k.  Every elementary step replaces one part k*r1 by
r1 copies of k and grows the length by r1 - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import ModulusTuple, Partition, is_class_regular, is_regular


@dataclass(frozen=True)
class GlaisherTrace:
    """Record of one application of the bijection.

    `start` is the input partition and `result` the output; `steps` counts the
    elementary replacements of the forward map connecting the two, and
    `class_step_counts` maps each residue class j (not divisible by r1) to the
    number of steps attributable to it, computed on the class-regular side.
    """

    start: Partition
    result: Partition
    steps: int
    class_step_counts: dict


def step_counts_by_class(partition, r1):
    """Per-class step counts of a class-regular partition: class j (with j not
    divisible by r1) receives sum over k >= 1 of k times the number of part
    values whose multiplicity reaches r1^k * j.  Only nonzero classes appear."""
    if r1 < 2:
        raise ValueError("r1 must be at least 2")
    mults = list(partition.multiplicities().values())
    max_mult = max(mults, default=0)
    counts = {}
    for j in range(1, max_mult + 1):
        if j % r1 == 0:
            continue
        total = 0
        k, power = 1, r1
        while power * j <= max_mult:
            total += k * sum(1 for m in mults if m >= power * j)
            k += 1
            power *= r1
        if total:
            counts[j] = total
    return counts


def total_steps(partition, r1):
    """Total number of Glaisher steps separating a class-regular partition
    from its regular preimage."""
    return sum(step_counts_by_class(partition, r1).values())


def glaisher_forward(partition, moduli):
    """Map a regular partition to its class-regular image.

    Rejects input that is not regular for the given moduli.
    """
    moduli = ModulusTuple.ensure(moduli)
    if not is_regular(partition, moduli):
        raise ValueError(f"{partition} is not regular for moduli {moduli}")
    r1 = moduli[0]
    out = []
    steps = 0
    for part in partition.parts:
        base, copies = part, 1
        while base % r1 == 0:
            base //= r1
            copies *= r1
        out.extend([base] * copies)
        steps += (copies - 1) // (r1 - 1)
    result = Partition(sorted(out, reverse=True))
    return GlaisherTrace(
        start=partition,
        result=result,
        steps=steps,
        class_step_counts=step_counts_by_class(result, r1),
    )


def glaisher_inverse(partition, moduli):
    """Map a class-regular partition back to its regular preimage.

    Rejects input that is not class regular for the given moduli.
    """
    moduli = ModulusTuple.ensure(moduli)
    if not is_class_regular(partition, moduli):
        raise ValueError(f"{partition} is not class regular for moduli {moduli}")
    r1 = moduli[0]
    out = []
    for value, mult in partition.multiplicities().items():
        scale = 1
        while mult:
            digit = mult % r1
            out.extend([value * scale] * digit)
            mult //= r1
            scale *= r1
    result = Partition(sorted(out, reverse=True))
    steps = (partition.length - result.length) // (r1 - 1)
    return GlaisherTrace(
        start=partition,
        result=result,
        steps=steps,
        class_step_counts=step_counts_by_class(partition, r1),
    )


def glaisher_forward_stepwise(partition, moduli, rng=None):
    """Reference implementation of the forward map: apply one elementary
    replacement at a time until no part is divisible by r1.  When `rng` is
    given, the eligible part is picked at random; the outcome is independent
    of the order."""
    moduli = ModulusTuple.ensure(moduli)
    if not is_regular(partition, moduli):
        raise ValueError(f"{partition} is not regular for moduli {moduli}")
    r1 = moduli[0]
    parts = list(partition.parts)
    steps = 0
    while True:
        eligible = [i for i, p in enumerate(parts) if p % r1 == 0]
        if not eligible:
            break
        i = rng.choice(eligible) if rng is not None else eligible[0]
        k = parts.pop(i) // r1
        parts.extend([k] * r1)
        steps += 1
    result = Partition(sorted(parts, reverse=True))
    return GlaisherTrace(
        start=partition,
        result=result,
        steps=steps,
        class_step_counts=step_counts_by_class(result, r1),
    )
