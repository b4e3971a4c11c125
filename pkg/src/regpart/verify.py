"""Exhaustive verification suites for the package's identities.

Each suite sweeps a configured range, counts the comparisons it makes, and
stops at the first counterexample.  The command line exposes every suite
under `verify`; the suite keys double as its subcommand names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .chartable import character_table, det_chain_check, olsson_check
from .cyclotomic import CyclotomicNumber
from .glaisher import total_steps
from .partitions import (
    ModulusTuple,
    _exponent_vectors,
    class_regular_partitions,
    glaisher_exponent,
    multiplicity_factorial_product,
    multiplicity_total,
    part_product,
    partitions,
    regular_partitions,
    regular_threshold_count,
    residue_count,
    threshold_count,
)
from .qseries import (
    glaisher_exponent_gf,
    multiplicity_total_gf,
    threshold_count_gf,
)
from .symfunc import (
    complete_homogeneous_in_p,
    hl_q,
    hl_qprime,
    power_substitution,
    r_reduce,
    specialize,
    transition_matrix,
)
from .tableaux import inverse_kostka_matrix

DEFAULT_TUPLES = ((2,), (3,), (5,), (2, 3), (2, 5), (3, 5), (2, 3, 5), (3, 4), (4, 9))
DEFAULT_R_VALUES = (2, 3)


@dataclass
class VerificationResult:
    """Outcome of one suite run."""

    name: str
    params: dict
    checked: int
    ok: bool
    counterexample: dict | None = None
    details: list = field(default_factory=list)


def _result(name, params, checked, counterexample=None, details=None):
    return VerificationResult(
        name=name,
        params=params,
        checked=checked,
        ok=counterexample is None,
        counterexample=counterexample,
        details=details or [],
    )


def verify_multiplicity_identity(tuples=DEFAULT_TUPLES, max_n=20):
    """For admissible j, the per-part multiplicity total V equals the sum of
    threshold counts W over all modulus-power multiples of j; checked by
    enumeration and again at the level of series coefficients."""
    checked = 0
    for raw in tuples:
        moduli = ModulusTuple.ensure(raw)
        for n in range(0, max_n + 1):
            for j in range(1, n + 1):
                if not moduli.indivisible(j):
                    continue
                v = multiplicity_total(moduli, j, n)
                w_sum = sum(
                    threshold_count(moduli, power * j, n)
                    for _, power in _exponent_vectors(moduli.moduli, n // j)
                )
                checked += 1
                if v != w_sum:
                    return _result(
                        "thm21",
                        {"tuples": list(tuples), "max_n": max_n},
                        checked,
                        {
                            "moduli": str(moduli),
                            "n": n,
                            "j": j,
                            "lhs": v,
                            "rhs": w_sum,
                            "route": "enumeration",
                        },
                    )
        for j in range(1, max_n + 1):
            if not moduli.indivisible(j):
                continue
            v_series = multiplicity_total_gf(moduli, j, max_n)
            acc = None
            for _, power in _exponent_vectors(moduli.moduli, max_n // j):
                term = threshold_count_gf(moduli, power * j, max_n)
                acc = term if acc is None else acc + term
            checked += 1
            if v_series != acc:
                return _result(
                    "thm21",
                    {"tuples": list(tuples), "max_n": max_n},
                    checked,
                    {
                        "moduli": str(moduli),
                        "j": j,
                        "route": "series",
                    },
                )
    return _result("thm21", {"tuples": list(tuples), "max_n": max_n}, checked)


def _exponents_by_three_routes(moduli, n):
    """The per-modulus exponents via the threshold double sum, the series
    coefficient, and the Glaisher step totals.  Raises on disagreement."""
    out = []
    for i in range(len(moduli)):
        by_sum = glaisher_exponent(moduli, i, n)
        by_series = glaisher_exponent_gf(moduli, i, n).coefficient(n)
        rotated = moduli.rotated_to_front(i)
        by_steps = sum(
            total_steps(rho, rotated[0])
            for rho in class_regular_partitions(moduli, n)
        )
        out.append((by_sum, by_series, by_steps))
    return out


def verify_product_identity(tuples=DEFAULT_TUPLES, max_n=20):
    """The multiplicity-factorial product equals the part product times the
    product of moduli raised to their exponents, with each exponent agreeing
    across its three independent computations."""
    checked = 0
    for raw in tuples:
        moduli = ModulusTuple.ensure(raw)
        for n in range(0, max_n + 1):
            routes = _exponents_by_three_routes(moduli, n)
            for i, (by_sum, by_series, by_steps) in enumerate(routes):
                checked += 1
                if not by_sum == by_series == by_steps:
                    return _result(
                        "thm22",
                        {"tuples": list(tuples), "max_n": max_n},
                        checked,
                        {
                            "moduli": str(moduli),
                            "n": n,
                            "index": i,
                            "sum": by_sum,
                            "series": by_series,
                            "glaisher": by_steps,
                        },
                    )
            b = multiplicity_factorial_product(moduli, n)
            a = part_product(moduli, n)
            predicted = a
            for i, (by_sum, _, _) in enumerate(routes):
                predicted *= moduli[i] ** by_sum
            checked += 1
            if b != predicted:
                return _result(
                    "thm22",
                    {"tuples": list(tuples), "max_n": max_n},
                    checked,
                    {"moduli": str(moduli), "n": n, "lhs": b, "rhs": predicted},
                )
    return _result("thm22", {"tuples": list(tuples), "max_n": max_n}, checked)


def verify_exponent_series(tuples=DEFAULT_TUPLES, max_n=20):
    """The exponent series coefficients match the double-sum statistic."""
    checked = 0
    for raw in tuples:
        moduli = ModulusTuple.ensure(raw)
        for i in range(len(moduli)):
            series = glaisher_exponent_gf(moduli, i, max_n)
            for n in range(0, max_n + 1):
                checked += 1
                direct = glaisher_exponent(moduli, i, n)
                if series.coefficient(n) != direct:
                    return _result(
                        "thm23",
                        {"tuples": list(tuples), "max_n": max_n},
                        checked,
                        {
                            "moduli": str(moduli),
                            "index": i,
                            "n": n,
                            "series": str(series.coefficient(n)),
                            "direct": direct,
                        },
                    )
    return _result("thm23", {"tuples": list(tuples), "max_n": max_n}, checked)


def verify_residue_difference(r_values=(2, 3, 4, 5), max_n=20):
    """The residue count X minus the regular threshold count Y is independent
    of the residue class and equals the exponent statistic c."""
    checked = 0
    details = []
    for r in r_values:
        for n in range(0, max_n + 1):
            c = glaisher_exponent((r,), 0, n)
            for j in range(1, r):
                x = residue_count(r, j, n)
                y = regular_threshold_count(r, j, n)
                checked += 1
                details.append(
                    {"r": r, "j": j, "n": n, "x": x, "y": y, "c": c}
                )
                if x - y != c:
                    return _result(
                        "thm41",
                        {"r_values": list(r_values), "max_n": max_n},
                        checked,
                        {"r": r, "j": j, "n": n, "x": x, "y": y, "c": c},
                        details,
                    )
    return _result(
        "thm41", {"r_values": list(r_values), "max_n": max_n}, checked, details=details
    )


def verify_permutation_invariance(tuples=DEFAULT_TUPLES, max_n=20):
    """Regular partition counts are invariant under permuting the moduli, and
    agree with the class-regular counts."""
    checked = 0
    for raw in tuples:
        moduli = ModulusTuple.ensure(raw)
        for n in range(0, max_n + 1):
            base = len(regular_partitions(moduli, n))
            cp = len(class_regular_partitions(moduli, n))
            checked += 1
            if base != cp:
                return _result(
                    "prop31",
                    {"tuples": list(tuples), "max_n": max_n},
                    checked,
                    {"moduli": str(moduli), "n": n, "regular": base, "class_regular": cp},
                )
            for perm in permutations(moduli.moduli):
                other = len(regular_partitions(ModulusTuple(perm), n))
                checked += 1
                if other != base:
                    return _result(
                        "prop31",
                        {"tuples": list(tuples), "max_n": max_n},
                        checked,
                        {
                            "moduli": str(moduli),
                            "permutation": list(perm),
                            "n": n,
                            "count": other,
                            "base": base,
                        },
                    )
    return _result("prop31", {"tuples": list(tuples), "max_n": max_n}, checked)


def verify_step_sum(tuples=DEFAULT_TUPLES, max_n=20):
    """The exponent statistic equals the total of Glaisher step counts over
    the class-regular family, for each modulus position."""
    checked = 0
    for raw in tuples:
        moduli = ModulusTuple.ensure(raw)
        for n in range(0, max_n + 1):
            cp = class_regular_partitions(moduli, n)
            for i in range(len(moduli)):
                r_front = moduli.rotated_to_front(i)[0]
                steps = sum(total_steps(rho, r_front) for rho in cp)
                c = glaisher_exponent(moduli, i, n)
                checked += 1
                if steps != c:
                    return _result(
                        "prop32",
                        {"tuples": list(tuples), "max_n": max_n},
                        checked,
                        {
                            "moduli": str(moduli),
                            "index": i,
                            "n": n,
                            "steps": steps,
                            "c": c,
                        },
                    )
    return _result("prop32", {"tuples": list(tuples), "max_n": max_n}, checked)


def verify_reduced_vanishing(r_values=DEFAULT_R_VALUES, max_n=6):
    """The reduced Hall dual vanishes at the root of unity unless its index is
    regular."""
    checked = 0
    for r in r_values:
        zeta = CyclotomicNumber.zeta(r)
        for n in range(1, max_n + 1):
            regular = set(regular_partitions((r,), n))
            for lam in partitions(n):
                if lam in regular:
                    continue
                reduced = r_reduce(specialize(hl_qprime(lam), zeta), r)
                checked += 1
                if not reduced.is_zero:
                    return _result(
                        "lem44",
                        {"r_values": list(r_values), "max_n": max_n},
                        checked,
                        {"r": r, "n": n, "lam": list(lam.parts)},
                    )
    return _result("lem44", {"r_values": list(r_values), "max_n": max_n}, checked)


def verify_coefficient_ratio(r_values=DEFAULT_R_VALUES, max_n=6):
    """For regular indices, each reduced Hall dual coefficient equals the
    rescaled family coefficient divided by prod(1 - zeta^part); the rescaled
    family is supported on class-regular indices only."""
    checked = 0
    for r in r_values:
        zeta = CyclotomicNumber.zeta(r)
        for n in range(1, max_n + 1):
            cp = set(class_regular_partitions((r,), n))
            for lam in regular_partitions((r,), n):
                q_spec = specialize(hl_q(lam), zeta)
                qp_spec = r_reduce(specialize(hl_qprime(lam), zeta), r)
                for rho in q_spec.coeffs:
                    checked += 1
                    if rho not in cp:
                        return _result(
                            "prop45",
                            {"r_values": list(r_values), "max_n": max_n},
                            checked,
                            {
                                "r": r,
                                "n": n,
                                "lam": list(lam.parts),
                                "rho": list(rho.parts),
                                "issue": "support outside the class-regular set",
                            },
                        )
                for rho in cp:
                    factor = CyclotomicNumber.one(r)
                    for value in rho.parts:
                        factor = factor * (1 - zeta ** value)
                    lhs = qp_spec.coefficient(rho)
                    rhs = q_spec.coefficient(rho) * factor.inverse()
                    checked += 1
                    if not lhs == rhs:
                        return _result(
                            "prop45",
                            {"r_values": list(r_values), "max_n": max_n},
                            checked,
                            {
                                "r": r,
                                "n": n,
                                "lam": list(lam.parts),
                                "rho": list(rho.parts),
                            },
                        )
    return _result("prop45", {"r_values": list(r_values), "max_n": max_n}, checked)


def verify_factorization(r_values=DEFAULT_R_VALUES, max_n=6):
    """Removing an r-fold repeated part i from the index multiplies the Hall
    dual at the root of unity by a sign and the degree-i complete homogeneous
    function in r-th powers of the variables."""
    checked = 0
    for r in r_values:
        zeta = CyclotomicNumber.zeta(r)
        for n in range(1, max_n + 1):
            for lam in partitions(n):
                for value, mult in lam.multiplicities().items():
                    if mult < r:
                        continue
                    smaller = lam.remove_rectangle(value, r)
                    lhs = specialize(hl_qprime(lam), zeta)
                    sign = (-1) ** (value * (r - 1))
                    rhs = (
                        specialize(hl_qprime(smaller), zeta)
                        * specialize(
                            power_substitution(complete_homogeneous_in_p(value), r),
                            zeta,
                        )
                    ).scale(sign)
                    checked += 1
                    if not lhs == rhs:
                        return _result(
                            "prop43",
                            {"r_values": list(r_values), "max_n": max_n},
                            checked,
                            {
                                "r": r,
                                "n": n,
                                "lam": list(lam.parts),
                                "value": value,
                            },
                        )
    return _result("prop43", {"r_values": list(r_values), "max_n": max_n}, checked)


def verify_unitriangular(r_values=DEFAULT_R_VALUES, max_n=6):
    """The matrix expressing reduced Schur functions in the reduced Hall duals
    is lower unitriangular and matches the regular-indexed block of the
    transposed inverse Kostka-Foulkes matrix at the root of unity."""
    checked = 0
    for r in r_values:
        zeta = CyclotomicNumber.zeta(r)
        for n in range(1, max_n + 1):
            matrix = transition_matrix("s", "qprime", n, r)
            checked += 1
            if not matrix.is_lower_unitriangular():
                return _result(
                    "prop48",
                    {"r_values": list(r_values), "max_n": max_n},
                    checked,
                    {"r": r, "n": n, "issue": "not lower unitriangular"},
                )
            ps = partitions(n)
            inverse = inverse_kostka_matrix(n)
            rp = regular_partitions((r,), n)
            for i, lam in enumerate(rp):
                for j, mu in enumerate(rp):
                    expected = inverse[ps.index(mu)][ps.index(lam)](zeta)
                    checked += 1
                    if not matrix.entries[i][j] == expected:
                        return _result(
                            "prop48",
                            {"r_values": list(r_values), "max_n": max_n},
                            checked,
                            {
                                "r": r,
                                "n": n,
                                "lam": list(lam.parts),
                                "mu": list(mu.parts),
                            },
                        )
    return _result("prop48", {"r_values": list(r_values), "max_n": max_n}, checked)


def verify_det_magnitude(r_values=DEFAULT_R_VALUES, max_n=6):
    """The determinant of the dual-to-power-sum transition is rational with
    magnitude 1 / (r^c * product of all class-regular parts)."""
    checked = 0
    details = []
    for r in r_values:
        for n in range(1, max_n + 1):
            det = transition_matrix("qprime", "p", n, r).determinant()
            rational = det.as_rational()
            c = glaisher_exponent((r,), 0, n)
            a = part_product((r,), n)
            expected = Fraction(1, r ** c * a)
            checked += 1
            entry = {
                "r": r,
                "n": n,
                "determinant": str(rational),
                "magnitude": str(expected),
                "sign": 0 if rational in (None, 0) else (1 if rational > 0 else -1),
            }
            details.append(entry)
            if rational is None or abs(rational) != expected:
                return _result(
                    "thm49",
                    {"r_values": list(r_values), "max_n": max_n},
                    checked,
                    entry,
                    details,
                )
    return _result(
        "thm49",
        {"r_values": list(r_values), "max_n": max_n},
        checked,
        details=details,
    )


def verify_table_det(r_values=(2, 3, 5), max_n=8):
    """The restricted character table determinant has the predicted magnitude,
    and the full table determinant squares to the product of all squared
    parts."""
    checked = 0
    details = []
    for r in r_values:
        for n in range(1, max_n + 1):
            report = olsson_check(r, n)
            checked += 1
            details.append(
                {
                    "r": r,
                    "n": n,
                    "determinant": report.determinant,
                    "magnitude": report.predicted_magnitude,
                    "sign": report.sign,
                }
            )
            if not report.ok:
                return _result(
                    "thm410",
                    {"r_values": list(r_values), "max_n": max_n},
                    checked,
                    details[-1],
                    details,
                )
    for n in range(1, max_n + 1):
        det = character_table(n).determinant()
        expected = 1
        for rho in partitions(n):
            for value in rho.parts:
                expected *= value * value
        checked += 1
        if det * det != expected:
            return _result(
                "thm410",
                {"r_values": list(r_values), "max_n": max_n},
                checked,
                {"n": n, "det_squared": det * det, "expected": expected},
                details,
            )
    return _result(
        "thm410",
        {"r_values": list(r_values), "max_n": max_n},
        checked,
        details=details,
    )


def verify_det_chain(r_values=DEFAULT_R_VALUES, max_n=6):
    """Every link of the determinant factorization chain holds."""
    checked = 0
    details = []
    for r in r_values:
        for n in range(1, max_n + 1):
            report = det_chain_check(r, n)
            checked += 1
            details.append(
                {
                    "r": r,
                    "n": n,
                    "exponent": report.exponent,
                    "table_determinant": report.table_determinant,
                }
            )
            if not report.ok:
                return _result(
                    "detchain",
                    {"r_values": list(r_values), "max_n": max_n},
                    checked,
                    {
                        "r": r,
                        "n": n,
                        "unimodular": report.schur_to_qprime_unimodular,
                        "magnitude": report.qprime_to_power_magnitude_ok,
                        "chain": report.chain_multiplicative,
                        "rows": report.schur_rows_match_table,
                        "table": report.table_determinant_ok,
                    },
                    details,
                )
    return _result(
        "detchain",
        {"r_values": list(r_values), "max_n": max_n},
        checked,
        details=details,
    )


SUITES = {
    "thm21": verify_multiplicity_identity,
    "thm22": verify_product_identity,
    "thm23": verify_exponent_series,
    "thm41": verify_residue_difference,
    "prop31": verify_permutation_invariance,
    "prop32": verify_step_sum,
    "lem44": verify_reduced_vanishing,
    "prop45": verify_coefficient_ratio,
    "prop43": verify_factorization,
    "prop48": verify_unitriangular,
    "thm49": verify_det_magnitude,
    "thm410": verify_table_det,
    "detchain": verify_det_chain,
}
