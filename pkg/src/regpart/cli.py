"""Command-line front end.

Subcommands cover enumeration, the scalar statistics, series coefficients,
the Glaisher maps, Kostka-Foulkes polynomials, the one-parameter symmetric
function families, character tables, and the verification suites.  Output is
JSON by default ({"meta": ..., "data": ...}), CSV for flat statistic tables,
or plain text.  Identical invocations produce byte-identical output.

Exit codes: 0 success or verified, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from .chartable import character_table, regular_character_table
from .cyclotomic import CyclotomicNumber
from .glaisher import (
    glaisher_forward,
    glaisher_inverse,
    step_counts_by_class,
    total_steps,
)
from .partitions import (
    ModulusTuple,
    Partition,
    class_regular_partitions,
    glaisher_exponent,
    multiplicity_factorial_product,
    multiplicity_total,
    part_product,
    regular_partitions,
    regular_threshold_count,
    residue_count,
    statistic_table,
    threshold_count,
)
from .polynomials import PolyT
from .qseries import (
    class_regular_gf,
    glaisher_exponent_gf,
    multiplicity_total_gf,
    regular_gf,
    threshold_count_gf,
)
from .symfunc import SymFunc, hl_p, hl_q, hl_qprime, specialize
from .tableaux import kostka_foulkes, kostka_matrix
from .partitions import partitions as all_partitions
from .verify import SUITES

DEFAULT_DEGREE = 64
DEFAULT_MAX_N = 30
DEFAULT_MAX_N_TABLES = 8
MAX_DEGREE = 1024


class UsageError(Exception):
    pass


def _parse_moduli(text):
    try:
        return ModulusTuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parse_parts(text):
    text = text.strip()
    try:
        if not text:
            return Partition()
        return Partition(sorted((int(x) for x in text.split(",")), reverse=True))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def encode(value):
    """Lossless JSON form: partitions as decreasing arrays, rationals as ints
    or "p/q" strings, polynomials as constant-first coefficient arrays,
    cyclotomic numbers as {order, coefficients}."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, Partition):
        return [int(p) for p in value.parts]
    if isinstance(value, ModulusTuple):
        return [int(r) for r in value.moduli]
    if isinstance(value, PolyT):
        return [encode(c) for c in value.coeffs]
    if isinstance(value, CyclotomicNumber):
        return {
            "order": value.order,
            "coefficients": [encode(c) for c in value.coeffs],
        }
    if isinstance(value, SymFunc):
        return {
            "degree": value.n,
            "terms": [
                {"index": encode(part), "coefficient": encode(value.coeffs[part])}
                for part in value.support()
            ],
        }
    if is_dataclass(value):
        return {k: encode(v) for k, v in asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def decode_rational(value):
    """Inverse of the rational encoding used by `encode`."""
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and "/" in value:
        num, den = value.split("/")
        return Fraction(int(num), int(den))
    raise ValueError(f"not an encoded rational: {value!r}")


def _guard_n(args, limit_default):
    limit = args.max_n if args.max_n is not None else limit_default
    if args.n is not None and args.n > limit:
        raise UsageError(
            f"n = {args.n} exceeds the resource limit {limit}; raise it with --max-n"
        )
    if args.n is not None and args.n < 0:
        raise UsageError("n must be nonnegative")


def _guard_degree(degree):
    if degree < 0:
        raise UsageError("degree must be nonnegative")
    if degree > MAX_DEGREE:
        raise UsageError(f"degree {degree} exceeds the hard limit {MAX_DEGREE}")


def _need(args, name):
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required here")
    return value


def _handle_enumerate(args):
    moduli = _need(args, "moduli")
    n = _need(args, "n")
    _guard_n(args, DEFAULT_MAX_N)
    fn = class_regular_partitions if args.family == "cp" else regular_partitions
    return {"partitions": list(fn(moduli, n))}, 0


def _moduli_index(moduli, r_value):
    if r_value is None:
        return 0
    try:
        return moduli.index_of(r_value)
    except ValueError:
        raise UsageError(f"--r {r_value} is not one of the moduli {moduli}")


def _handle_stats(args):
    name = args.statistic
    n = _need(args, "n")
    _guard_n(args, DEFAULT_MAX_N)
    if name in ("V", "W"):
        moduli = _need(args, "moduli")
        if args.j is not None:
            fn = multiplicity_total if name == "V" else threshold_count
            return {"value": fn(moduli, args.j, n)}, 0
        return {"table": statistic_table(name, moduli, n)}, 0
    if name in ("X", "Y"):
        r = _need(args, "r")
        if args.j is not None:
            fn = residue_count if name == "X" else regular_threshold_count
            try:
                return {"value": fn(r, args.j, n)}, 0
            except ValueError as exc:
                raise UsageError(str(exc))
        return {"table": statistic_table(name, (r,), n)}, 0
    moduli = _need(args, "moduli")
    if name == "a":
        return {"value": part_product(moduli, n)}, 0
    if name == "b":
        return {"value": multiplicity_factorial_product(moduli, n)}, 0
    index = _moduli_index(moduli, args.r)
    return {"value": glaisher_exponent(moduli, index, n)}, 0


def _handle_series(args):
    moduli = _need(args, "moduli")
    degree = args.degree
    _guard_degree(degree)
    kind = args.series
    try:
        if kind == "phi":
            series = class_regular_gf(moduli, degree)
        elif kind == "v":
            series = multiplicity_total_gf(moduli, _need(args, "j"), degree)
        elif kind == "w":
            series = threshold_count_gf(moduli, _need(args, "j"), degree)
        elif kind == "c":
            series = glaisher_exponent_gf(
                moduli, _moduli_index(moduli, args.r), degree
            )
        else:
            series = regular_gf(moduli, degree)
    except ValueError as exc:
        raise UsageError(str(exc))
    return {"degree": degree, "coefficients": list(series.integer_coefficients())}, 0


def _handle_glaisher(args):
    moduli = _need(args, "moduli")
    partition = args.partition
    try:
        if args.direction == "forward":
            trace = glaisher_forward(partition, moduli)
        elif args.direction == "inverse":
            trace = glaisher_inverse(partition, moduli)
        else:
            counts = step_counts_by_class(partition, moduli[0])
            return {
                "partition": partition,
                "r1": moduli[0],
                "class_step_counts": counts,
                "total": sum(counts.values()),
            }, 0
    except ValueError as exc:
        raise UsageError(str(exc))
    return {
        "start": trace.start,
        "result": trace.result,
        "steps": trace.steps,
        "class_step_counts": trace.class_step_counts,
    }, 0


def _handle_kostka(args):
    if args.shape is not None or args.content is not None:
        shape = _need(args, "shape")
        content = _need(args, "content")
        try:
            poly = kostka_foulkes(shape, content)
        except ValueError as exc:
            raise UsageError(str(exc))
        return {"shape": shape, "content": content, "polynomial": poly}, 0
    n = _need(args, "n")
    _guard_n(args, DEFAULT_MAX_N_TABLES)
    ps = all_partitions(n)
    matrix = kostka_matrix(n)
    return {
        "index": list(ps),
        "entries": [[matrix[i][j] for j in range(len(ps))] for i in range(len(ps))],
    }, 0


def _handle_hl(args):
    partition = _need(args, "partition")
    fn = {"p": hl_p, "q": hl_q, "qprime": hl_qprime}[args.family]
    f = fn(partition)
    if args.r is not None:
        if args.r < 2:
            raise UsageError("--r must be at least 2")
        f = specialize(f, CyclotomicNumber.zeta(args.r))
    return {"family": args.family, "index": partition, "expansion": f}, 0


def _handle_chartable(args):
    n = _need(args, "n")
    _guard_n(args, DEFAULT_MAX_N_TABLES)
    if n < 1:
        raise UsageError("n must be at least 1")
    if args.kind == "full":
        table = character_table(n)
    else:
        table = regular_character_table(_need(args, "r"), n)
    return {
        "n": n,
        "rows": list(table.rows),
        "cols": list(table.cols),
        "entries": [list(row) for row in table.entries],
        "determinant": table.determinant() if table.is_square else None,
    }, 0


def _handle_verify(args):
    suite = SUITES[args.identity]
    kwargs = {}
    if args.max_n is not None:
        kwargs["max_n"] = args.max_n
    if args.identity in ("thm21", "thm22", "thm23", "prop31", "prop32"):
        if args.moduli is not None:
            kwargs["tuples"] = (args.moduli.moduli,)
    else:
        if args.r is not None:
            kwargs["r_values"] = (args.r,)
    result = suite(**kwargs)
    payload = {
        "identity": result.name,
        "params": result.params,
        "checked": result.checked,
        "ok": result.ok,
        "counterexample": result.counterexample,
        "details": result.details,
    }
    return payload, 0 if result.ok else 1


def _format_csv(data):
    table = data.get("table")
    if table is None:
        raise UsageError("csv output is only available for flat statistic tables")
    lines = ["j,value"]
    for j, value in enumerate(table.values, start=1):
        lines.append(f"{j},{value}")
    return "\n".join(lines) + "\n"


def _format_text(data):
    def walk(value, indent=""):
        value = encode(value)
        return json.dumps(value, indent=2, sort_keys=True)

    return walk(data) + "\n"


def _render(args, data):
    if args.format == "csv":
        return _format_csv(data)
    if args.format == "text":
        return _format_text(data)
    meta = {"command": args.command, "params": _meta_params(args)}
    document = {"meta": meta, "data": encode(data)}
    return json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"


_META_FIELDS = (
    "family",
    "statistic",
    "series",
    "direction",
    "identity",
    "kind",
    "moduli",
    "n",
    "max_n",
    "j",
    "r",
    "degree",
    "partition",
    "shape",
    "content",
)


def _meta_params(args):
    out = {}
    for name in _META_FIELDS:
        if name == "degree" and args.command != "series":
            continue
        value = getattr(args, name, None)
        if value is not None:
            out[name] = encode(value)
    return out


def build_parser():
    parser = argparse.ArgumentParser(
        prog="regpart",
        description="Exact computations with regular and class-regular partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--moduli", type=_parse_moduli, default=None,
                       help="comma-separated pairwise coprime moduli, e.g. 2,3")
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--max-n", dest="max_n", type=int, default=None,
                       help="resource limit / sweep bound")
        p.add_argument("--j", type=int, default=None)
        p.add_argument("--r", type=int, default=None)
        p.add_argument("--degree", type=int, default=DEFAULT_DEGREE,
                       help="series truncation degree")
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", default=None, help="write output to this path")

    p = sub.add_parser("enumerate", help="list class-regular or regular partitions")
    p.add_argument("family", choices=("cp", "rp"))
    add_common(p)
    p.set_defaults(handler=_handle_enumerate)

    p = sub.add_parser("stats", help="scalar statistics of the partition families")
    p.add_argument("statistic", choices=("V", "W", "X", "Y", "a", "b", "c"))
    add_common(p)
    p.set_defaults(handler=_handle_stats)

    p = sub.add_parser("series", help="generating function coefficients")
    p.add_argument("series", choices=("phi", "v", "w", "c", "rp"))
    add_common(p)
    p.set_defaults(handler=_handle_series)

    p = sub.add_parser("glaisher", help="the bijection and its step statistics")
    p.add_argument("direction", choices=("forward", "inverse", "gstats"))
    p.add_argument("partition", type=_parse_parts,
                   help="comma-separated parts, e.g. 6,1 (empty string for the empty partition)")
    add_common(p)
    p.set_defaults(handler=_handle_glaisher)

    p = sub.add_parser("kostka", help="Kostka-Foulkes polynomials")
    add_common(p)
    p.add_argument("--shape", type=_parse_parts, default=None)
    p.add_argument("--content", type=_parse_parts, default=None)
    p.set_defaults(handler=_handle_kostka)

    p = sub.add_parser("hl", help="one-parameter symmetric function families")
    p.add_argument("family", choices=("p", "q", "qprime"))
    p.add_argument("--partition", type=_parse_parts, required=True)
    add_common(p)
    p.set_defaults(handler=_handle_hl)

    p = sub.add_parser("chartable", help="symmetric group character tables")
    p.add_argument("kind", choices=("full", "regular"))
    add_common(p)
    p.set_defaults(handler=_handle_chartable)

    p = sub.add_parser("verify", help="run one verification suite")
    p.add_argument("identity", choices=sorted(SUITES))
    add_common(p)
    p.set_defaults(handler=_handle_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, code = args.handler(args)
        rendered = _render(args, data)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
