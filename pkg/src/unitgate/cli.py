"""Command-line front end: field ingestion, single-field analysis, batch
runs over newline-delimited JSON records, and the coefficient scan used to
discover fixture fields.

Coefficient lists are little-endian (constant term first); --lmfdb-order
accepts big-endian lists (leading coefficient first) and reverses them.
Reports are JSON lines; exit codes: 0 ok, 1 oracle-vs-certificate violation
(the critical alarm), 2 input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from . import exactmath
from .criteria import YES, Verdict, all_verdicts, verify_solutions_against_certificate
from .errors import HypothesisError, InputError
from .exactmath import IntPoly
from .numberfield import NumberField
from .search import SearchConfig, SolutionSet, enumerate_sunit_solutions, enumerate_unit_solutions
from .splitting import splitting_shape
from .sunit import check_FS_conditions, check_valbound_lemma, sunit_context

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


@dataclass(frozen=True)
class FieldRecord:
    label: str
    coeffs: tuple[int, ...]

    def to_json(self) -> dict:
        return {"label": self.label, "coeffs": list(self.coeffs)}


def parse_poly_string(text: str) -> tuple[int, ...]:
    """Parse polynomials like 'x^3-6x^2+9x-3', 'x**2 + x + 1' or 'x' into a
    little-endian coefficient tuple."""
    s = text.translate(_SUPERSCRIPTS)
    for sup in ("⁰", "¹"):
        s = s.replace(sup, "")
    s = s.replace("−", "-").replace("**", "^").replace("*", "").replace(" ", "")
    if not s:
        raise InputError("empty polynomial")
    # normalize superscript form xN produced by the translation above
    s = re.sub(r"x(\d)", lambda m: "x^" + m.group(1), s, count=0)
    chunks = re.findall(r"[+-]?[^+-]+", s)
    coeffs: dict[int, int] = {}
    term = re.compile(r"^([+-]?)(\d+)?(x)(?:\^(\d+))?$|^([+-]?)(\d+)$")
    for chunk in chunks:
        m = term.match(chunk)
        if not m:
            raise InputError(f"cannot parse term {chunk!r} in {text!r}")
        if m.group(6) is not None:
            sign = -1 if m.group(5) == "-" else 1
            coeffs[0] = coeffs.get(0, 0) + sign * int(m.group(6))
        else:
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            exp = int(m.group(4)) if m.group(4) else 1
            coeffs[exp] = coeffs.get(exp, 0) + sign * mag
    deg = max(coeffs)
    return tuple(coeffs.get(i, 0) for i in range(deg + 1))


def record_from_arg(arg: str, lmfdb_order: bool = False) -> FieldRecord:
    """Accept either a polynomial expression or a comma-separated coefficient
    list."""
    arg = arg.strip()
    if re.fullmatch(r"[-+0-9,\s]+", arg) and "," in arg:
        coeffs = tuple(int(tok) for tok in arg.split(",") if tok.strip())
    else:
        coeffs = parse_poly_string(arg)
    if lmfdb_order:
        coeffs = tuple(reversed(coeffs))
    return FieldRecord(str(IntPoly(coeffs)), coeffs)


def field_from_record(rec: FieldRecord) -> NumberField:
    try:
        return NumberField.from_minpoly(rec.coeffs)
    except ValueError as exc:
        raise InputError(f"{rec.label}: {exc}") from exc


def _parse_kv(tokens: Iterable[str], allowed: dict[str, int]) -> dict[str, int]:
    out = dict(allowed)
    for tok in tokens:
        if "=" not in tok:
            raise InputError(f"expected KEY=VALUE, got {tok!r}")
        key, val = tok.split("=", 1)
        key = key.strip()
        if key not in allowed:
            raise InputError(f"unknown option {key!r} (allowed: {sorted(allowed)})")
        try:
            out[key] = int(val)
        except ValueError as exc:
            raise InputError(f"bad integer in {tok!r}") from exc
    return out


# ---------------------------------------------------------------------------
# report assembly


def build_report(
    rec: FieldRecord,
    primes: list[int],
    p: int = 5,
    search_height: int | None = None,
    sunit_height: int | None = None,
    denom_exp: int | None = None,
    include_timings: bool = True,
) -> dict:
    """Analysis report for one field: splitting shapes, all seven verdicts,
    optional unit/S-unit oracle runs, violations, and warnings."""
    t0 = time.monotonic()
    field = field_from_record(rec)
    warnings: list[str] = []
    if field.degree == 1:
        warnings.append("degree-1 field: hypotheses are evaluated literally")
    shown = sorted(set(primes) | {2, 3, p})
    shapes = {}
    for q in shown:
        shape = splitting_shape(field, q)
        shapes[str(q)] = shape.to_json()
        if not shape.p_maximal:
            warnings.append(
                f"Z[t] is not {q}-maximal: shape of {q} indeterminate, the "
                f"bounded search may not see all solutions above {q}"
            )
    verdicts = all_verdicts(field, p)
    report: dict = {
        "label": rec.label,
        "coeffs": list(rec.coeffs),
        "degree": field.degree,
        "disc_presentation": field.disc_f,
        "totally_real": field.totally_real,
        "irreducible": "certified_irreducible",
        "splitting": shapes,
        "verdicts": [v.to_json() for v in verdicts],
    }
    violations: list[str] = []

    if search_height is not None:
        sols = enumerate_unit_solutions(field, SearchConfig(search_height))
        report["unit_search"] = {"height": search_height, **sols.to_json()}
        for v in verdicts:
            if v.theorem_id in ("unitcrit", "triantafillou") and v.holds == YES:
                violations += verify_solutions_against_certificate(v, sols.solutions)

    if sunit_height is not None:
        try:
            ctx = sunit_context(field)
        except HypothesisError as exc:
            report["sunit_search"] = {"error": str(exc)}
            ctx = None
        if ctx is not None:
            cfg = SearchConfig(sunit_height, denom_exp_max=denom_exp)
            sols = enumerate_sunit_solutions(field, ctx, cfg)
            try:
                fs = check_FS_conditions(ctx, sols.solutions)
                fs_json = {
                    "route": fs.route,
                    "bound": fs.bound,
                    "passed": fs.passed,
                    "violations": [list(v) for v in fs.violations],
                }
            except HypothesisError as exc:
                fs_json = {"error": str(exc)}
            vb = check_valbound_lemma(ctx, sols.solutions)
            report["sunit_search"] = {
                "height": sunit_height,
                "denom_exp_max": cfg.denom_exp_max
                if cfg.denom_exp_max is not None
                else 4 * ctx.ord_q_of_2 + 1,
                "context": ctx.to_json(),
                **sols.to_json(),
                "fs_conditions": fs_json,
                "valuation_bound": {
                    "strict_bound": vb.bound,
                    "passed": vb.passed,
                    "violations": list(vb.violations),
                    "unit_solution_flags": list(vb.unit_solution_flags),
                },
            }
            for v in verdicts:
                if v.theorem_id in ("pram", "t23", "t23ram") and v.holds == YES:
                    violations += verify_solutions_against_certificate(v, sols.solutions)

    report["warnings"] = warnings
    report["violations"] = violations
    if include_timings:
        report["timings"] = {"total_ms": round((time.monotonic() - t0) * 1000, 3)}
    return report


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report) + "\n")
        return
    # table format, for human reading
    out.write(f"field {report['label']}  (degree {report['degree']}, ")
    out.write(f"disc {report['disc_presentation']}, totally real: {report['totally_real']})\n")
    for q, shape in report["splitting"].items():
        out.write(f"  {q}: {shape['classification']}  pairs {shape['pairs']}\n")
    for v in report["verdicts"]:
        p_txt = f"(p={v['p']})" if "p" in v else ""
        out.write(f"  {v['theorem']}{p_txt}: {v['holds']}\n")
    for key in ("unit_search", "sunit_search"):
        if key in report:
            blk = report[key]
            if "error" in blk:
                out.write(f"  {key}: {blk['error']}\n")
                continue
            out.write(f"  {key}: {blk['count']} solutions at height {blk['height']}\n")
            for s in blk["solutions"]:
                out.write(
                    f"    lambda={s['lambda']} mu={s['mu']} "
                    f"v=({s['v_lambda']},{s['v_mu']}) m={s['m']}\n"
                )
    for w in report["warnings"]:
        out.write(f"  warning: {w}\n")
    for v in report["violations"]:
        out.write(f"  VIOLATION: {v}\n")


# ---------------------------------------------------------------------------
# scan


_SCAN_PREDICATES = (
    "any",
    "totally_real",
    "eisenstein",
    "pram",
    "t23",
    "t23ram",
    "unitcrit",
    "triantafillou",
    "pram_conditional",
    "t23ram_conditional",
)


def _parse_predicate(text: str) -> tuple[str, int | None]:
    name, _, ptxt = text.partition(":")
    if name not in _SCAN_PREDICATES:
        raise InputError(f"unknown predicate {name!r} (allowed: {_SCAN_PREDICATES})")
    p = int(ptxt) if ptxt else None
    if name in ("pram", "unitcrit", "pram_conditional", "eisenstein") and p is None:
        p = 5
    return name, p


def scan_fields(
    degree: int,
    coeff_bound: int,
    predicate: str = "any",
    limit: int | None = None,
) -> Iterator[tuple[FieldRecord, NumberField, str]]:
    """Deterministic scan over monic integer polynomials of the given degree
    with |coefficients| <= coeff_bound, yielding fields whose verdict for the
    predicate is yes (records stream in lexicographic coefficient order)."""
    if degree < 1 or degree > 7:
        raise InputError("scan degree must be between 1 and 7")
    if coeff_bound < 0 or coeff_bound > 50:
        raise InputError("scan coefficient bound must be between 0 and 50")
    name, p = _parse_predicate(predicate)
    count = 0
    if name == "eisenstein":
        # only multiples of p can appear, a much smaller grid
        lower = [c for c in range(-coeff_bound, coeff_bound + 1) if c % p == 0]
        const = [c for c in lower if c != 0 and c % (p * p) != 0]
        grid: Iterable[tuple[int, ...]] = (
            (c0, *rest) for c0 in const for rest in product(lower, repeat=degree - 1)
        )
    else:
        rng = range(-coeff_bound, coeff_bound + 1)
        grid = product(rng, repeat=degree)
    for tail in grid:
        coeffs = tuple(tail) + (1,)
        poly = IntPoly(coeffs)
        if poly.degree != degree:
            continue
        try:
            field = NumberField.from_minpoly(poly)
        except ValueError:
            continue
        if name == "totally_real" and not field.totally_real:
            continue
        if name == "eisenstein":
            from .splitting import eisenstein_at

            if not eisenstein_at(poly, p):
                continue
        if name == "pram":
            from .criteria import check_pram

            if check_pram(field, p).holds != YES:
                continue
        elif name == "t23":
            from .criteria import check_t23

            if check_t23(field).holds != YES:
                continue
        elif name == "t23ram":
            from .criteria import check_t23ram

            if check_t23ram(field).holds != YES:
                continue
        elif name == "unitcrit":
            from .criteria import check_unitcrit

            if check_unitcrit(field, p).holds != YES:
                continue
        elif name == "triantafillou":
            from .criteria import check_triantafillou

            if check_triantafillou(field).holds != YES:
                continue
        elif name in ("pram_conditional", "t23ram_conditional"):
            from .criteria import check_conditional

            if check_conditional(field, name, p).holds != YES:
                continue
        rec = FieldRecord(str(poly), coeffs)
        yield rec, field, predicate
        count += 1
        if limit is not None and count >= limit:
            return


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args: argparse.Namespace, out, err) -> int:
    rec = (
        record_from_arg(args.field, args.lmfdb_order)
        if args.coeffs is None
        else FieldRecord(
            args.field,
            tuple(reversed([int(t) for t in args.coeffs.split(",")]))
            if args.lmfdb_order
            else tuple(int(t) for t in args.coeffs.split(",")),
        )
    )
    search_height = None
    if args.search is not None:
        search_height = _parse_kv(args.search, {"H": 10})["H"]
    sunit_height = denom = None
    if args.sunits is not None:
        opts = _parse_kv(args.sunits, {"H": 4, "denom": -1})
        sunit_height = opts["H"]
        denom = None if opts["denom"] < 0 else opts["denom"]
    report = build_report(
        rec,
        primes=[int(t) for t in args.primes.split(",") if t.strip()],
        p=args.p,
        search_height=search_height,
        sunit_height=sunit_height,
        denom_exp=denom,
        include_timings=not args.no_timings,
    )
    _emit(report, args.format, out)
    return EXIT_VIOLATION if report["violations"] else EXIT_OK


def cmd_batch(args: argparse.Namespace, out, err) -> int:
    path = args.corpus
    skipped = 0
    any_violation = False
    counts: dict[str, dict[str, int]] = {}
    n_fields = 0
    stream = sys.stdin if path == "-" else open(path, "r", encoding="utf-8")
    try:
        for line_no, line in enumerate(stream, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                coeffs = [int(c) for c in obj["coeffs"]]
                if args.lmfdb_order:
                    coeffs = list(reversed(coeffs))
                rec = FieldRecord(str(obj.get("label", f"line{line_no}")), tuple(coeffs))
                report = build_report(
                    rec,
                    primes=[int(t) for t in args.primes.split(",") if t.strip()],
                    p=args.p,
                    search_height=_parse_kv(args.search, {"H": 10})["H"]
                    if args.search is not None
                    else None,
                    include_timings=not args.no_timings,
                )
            except (KeyError, ValueError, TypeError, InputError) as exc:
                err.write(f"warning: line {line_no} skipped: {exc}\n")
                skipped += 1
                continue
            n_fields += 1
            any_violation = any_violation or bool(report["violations"])
            for v in report["verdicts"]:
                counts.setdefault(v["theorem"], {"yes": 0, "no": 0, "indeterminate": 0})
                counts[v["theorem"]][v["holds"]] += 1
            _emit(report, args.format, out)
    finally:
        if stream is not sys.stdin:
            stream.close()
    summary = {"summary": {"fields": n_fields, "skipped": skipped, "verdicts": counts}}
    if args.format == "json":
        out.write(json.dumps(summary) + "\n")
    else:
        out.write(f"summary: {n_fields} fields, {skipped} skipped\n")
    if any_violation:
        return EXIT_VIOLATION
    if skipped and args.strict:
        return EXIT_INPUT
    return EXIT_OK


def cmd_scan(args: argparse.Namespace, out, err) -> int:
    for rec, field, predicate in scan_fields(
        args.degree, args.bound, args.predicate, args.limit
    ):
        obj = rec.to_json()
        obj["predicate"] = predicate
        obj["holds"] = "yes"
        obj["totally_real"] = field.totally_real
        out.write(json.dumps(obj) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitgate",
        description=(
            "Local criteria for the unit equation and the asymptotic Fermat's "
            "Last Theorem over number fields, with a brute-force cross-checking "
            "oracle.  Coefficient lists are little-endian (constant term first)."
        ),
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for the randomized factorization step (default: env UNITGATE_SEED or fixed)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze a single field")
    pa.add_argument("field", help="polynomial in x (e.g. 'x^3-6x^2+9x-3') or coefficient list")
    pa.add_argument("--coeffs", default=None, help="little-endian coefficients, comma-separated")
    pa.add_argument("--primes", default="2,3", help="primes to report splitting shapes for")
    pa.add_argument("--p", type=int, default=5, help="prime for the p-dependent criteria")
    pa.add_argument(
        "--search", nargs="*", metavar="H=N", default=None, help="run the unit-equation oracle"
    )
    pa.add_argument(
        "--sunits",
        nargs="*",
        metavar="K=V",
        default=None,
        help="run the S-unit oracle (H=height, denom=max 2-exponent)",
    )
    pa.add_argument("--lmfdb-order", action="store_true", help="coefficients are big-endian")
    pa.add_argument("--format", choices=("json", "table"), default="json")
    pa.add_argument("--no-timings", action="store_true")
    pa.set_defaults(func=cmd_analyze)

    pb = sub.add_parser("batch", help="analyze newline-delimited JSON field records")
    pb.add_argument("corpus", help="path to NDJSON records, or - for stdin")
    pb.add_argument("--primes", default="2,3")
    pb.add_argument("--p", type=int, default=5)
    pb.add_argument("--search", nargs="*", metavar="H=N", default=None)
    pb.add_argument("--strict", action="store_true", help="exit 2 if any line was skipped")
    pb.add_argument("--lmfdb-order", action="store_true")
    pb.add_argument("--format", choices=("json", "table"), default="json")
    pb.add_argument("--no-timings", action="store_true")
    pb.set_defaults(func=cmd_batch)

    ps = sub.add_parser("scan", help="scan monic polynomials for fields matching a predicate")
    ps.add_argument("--degree", type=int, required=True)
    ps.add_argument("--bound", type=int, required=True, help="max |coefficient|")
    ps.add_argument(
        "--predicate",
        default="any",
        help="any, totally_real, eisenstein[:p], pram[:p], t23, t23ram, "
        "unitcrit[:p], triantafillou, pram_conditional[:p], t23ram_conditional",
    )
    ps.add_argument("--limit", type=int, default=None, help="stop after N fields")
    ps.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    seed = args.seed
    if seed is None:
        env = os.environ.get("UNITGATE_SEED")
        if env is not None:
            try:
                seed = int(env)
            except ValueError:
                err.write(f"error: UNITGATE_SEED={env!r} is not an integer\n")
                return EXIT_INPUT
    if seed is not None:
        exactmath.set_default_seed(seed)
    try:
        return args.func(args, out, err)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (HypothesisError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
