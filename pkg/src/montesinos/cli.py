"""Command-line front end: reports, sweeps, oracle runs and diagram dumps."""
from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from .edgepath import DECREASING, INCREASING, enumerate_basic_edgepaths
from .farey import DiagramError, third_vertices, u_coord
from .invariants import LinkInputError, component_count
from .oracles import ORACLES, first_mismatch, knot_suite, run_oracles
from .system import (
    KnotSpec,
    classify_class,
    final_r_cycle,
    monotone_system,
    system_function,
    to_fraction,
)
from .theorems import VERIFIERS, Interval, KnotReport, WitnessError, knot_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

VERDICT_NAMES = {
    "thm1": "theorem1",
    "cor12": "corollary12",
    "prop31": "proposition31",
    "prop42": "proposition42",
    "thm3": "theorem3",
    "cor14": "corollary14",
}


class KnotParseError(DiagramError):
    pass


_KNOT = re.compile(r"^\s*M\s*\((.*)\)\s*$")
_FRAC = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def parse_fraction(text: str) -> Fraction:
    m = _FRAC.match(text)
    if not m:
        raise KnotParseError(f"not a fraction: {text!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise KnotParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_knot(text: str) -> KnotSpec:
    m = _KNOT.match(text)
    if not m:
        raise KnotParseError(f"expected M(p1/q1,...,pN/qN), got {text!r}")
    parts = [p for p in m.group(1).split(",")]
    tangles = tuple(parse_fraction(p) for p in parts)
    if len(tangles) <= 2:
        raise KnotParseError(f"{text}: two-bridge input (N = {len(tangles)}) is out of scope")
    return KnotSpec(tangles)


def expand_family(template: str, spec: str) -> list[KnotSpec]:
    """Instantiate ``template`` for every value of ``var=a..b`` in ``spec``."""
    m = re.match(r"^\s*([A-Za-z_]\w*)\s*=\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$", spec)
    if not m:
        raise KnotParseError(f"expected a range like n=3..40, got {spec!r}")
    var, lo, hi = m.group(1), int(m.group(2)), int(m.group(3))
    pattern = re.compile(rf"\b{re.escape(var)}\b")
    return [parse_knot(pattern.sub(str(v), template)) for v in range(lo, hi + 1)]


# -- serialization ---------------------------------------------------------------


def frac(x) -> Optional[str]:
    return None if x is None else str(to_fraction(x))


def interval(iv: Interval) -> dict:
    return {"lo": frac(iv.lo), "hi": frac(iv.hi)}


def system_summary(system, report=None) -> dict:
    cycle = final_r_cycle(system)
    out = {
        "type": system.type_tag,
        "class": classify_class(system),
        "u0": frac(system.cut_u),
        "r_cycle": cycle.labels(),
        "paths": [str(p) for p in system.paths],
    }
    if report is not None:
        out.update({
            "twist": frac(report.twist),
            "cancel": frac(report.cancel),
            "chi_per_sheet": frac(report.chi_per_sheet),
            "remainder": frac(report.remainder),
            "essentiality": report.essentiality.status,
            "rule": report.essentiality.rule,
            "slope": frac(report.slope),
        })
    return out


def report_dict(r: KnotReport) -> dict:
    verdicts = {
        VERDICT_NAMES[k]: {
            "status": "pass" if v.passed else "fail",
            "margins": [frac(m) for m in v.margins],
            "detail": v.detail,
        }
        for k, v in r.verdicts.items()
    }
    diam = frac(r.diameter.lo) if r.diameter.is_point else None
    summary = {"diameter": diam, "crossing_number": str(r.crossing_number)}
    summary.update({name: v["status"] for name, v in verdicts.items()})
    return {
        "knot": str(r.knot),
        "tangles": [frac(t) for t in r.knot.tangles],
        "case_tag": r.case.tag,
        "min_case_tag": r.min_case.tag,
        "normalized_tangles": None if r.case.normalized is None else [frac(t) for t in r.case.normalized],
        "lambda_dec_0": r.lam_dec0,
        "lambda_inc_0": r.lam_inc0,
        "tau_dec": frac(r.tau_dec),
        "tau_inc": frac(r.tau_inc),
        "tau_max": interval(r.tau_max),
        "tau_min": interval(r.tau_min),
        "diameter_bounds": interval(r.diameter),
        "diameter": diam,
        "crossing_number": str(r.crossing_number),
        "alternating": r.alternating,
        "seifert_offset": frac(r.offset),
        "witnesses": {
            "max": system_summary(r.max_witness, r.max_witness_report),
            "min": system_summary(r.min_witness, r.min_witness_report),
        },
        "verdicts": verdicts,
        "summary": summary,
        "all_pass": r.all_pass,
    }


CSV_FIELDS = [
    "knot", "case_tag", "min_case_tag", "lambda_dec_0", "lambda_inc_0", "tau_dec", "tau_inc",
    "tau_max_lo", "tau_max_hi", "tau_min_lo", "tau_min_hi", "diameter_lo", "diameter_hi",
    "crossing_number", "alternating", "seifert_offset",
] + list(VERDICT_NAMES.values())


def csv_row(d: dict) -> dict:
    row = {k: d.get(k) for k in CSV_FIELDS if k in d}
    for key in ("tau_max", "tau_min"):
        row[f"{key}_lo"], row[f"{key}_hi"] = d[key]["lo"], d[key]["hi"]
    row["diameter_lo"], row["diameter_hi"] = d["diameter_bounds"]["lo"], d["diameter_bounds"]["hi"]
    for name in VERDICT_NAMES.values():
        row[name] = d["verdicts"].get(name, {}).get("status", "")
    return row


def emit(rows: Sequence[dict], fmt: str, out, meta: Optional[dict] = None) -> None:
    if fmt == "json":
        payload = {"reports": list(rows)} if len(rows) != 1 or meta else rows[0]
        if meta:
            payload["meta"] = meta
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        w = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for d in rows:
            w.writerow(csv_row(d))


# -- commands ---------------------------------------------------------------------


def _checks(arg: Optional[str]) -> tuple[str, ...]:
    if not arg or arg == "all":
        return tuple(VERIFIERS)
    names = tuple(a.strip() for a in arg.split(","))
    for n in names:
        if n not in VERIFIERS:
            raise KnotParseError(f"unknown check {n!r}; choose from {sorted(VERIFIERS)} or all")
    return names


def _report_one(args: tuple[KnotSpec, tuple[str, ...]]) -> dict:
    knot, checks = args
    return report_dict(knot_report(knot, checks))


def _map(func, items: list, jobs: int) -> list:
    if jobs <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=8))


def _knots_from_args(args) -> list[KnotSpec]:
    if args.knot and args.family:
        raise KnotParseError("give exactly one of --knot and --family")
    if args.knot:
        return [parse_knot(args.knot)]
    if args.family:
        if not args.range:
            raise KnotParseError("--family needs --range, e.g. n=3..40")
        return expand_family(args.family, args.range)
    if getattr(args, "max_den", None):
        return list(knot_suite(args.max_den, args.tangles))
    raise KnotParseError("give --knot, --family with --range, or --max-den")


def _open_out(path: Optional[str]):
    return open(path, "w", encoding="utf-8") if path else sys.stdout


def cmd_report(args) -> int:
    knots = _knots_from_args(args)
    checks = _checks(args.verify)
    knots = [k for k in knots if component_count(k) == 1] if len(knots) > 1 else knots
    rows = _map(_report_one, [(k, checks) for k in knots], args.jobs)
    meta = {"version": _version()} if args.meta else None
    out = _open_out(args.out)
    try:
        emit(rows, args.format, out, meta)
    finally:
        if out is not sys.stdout:
            out.close()
    if args.dump_diagram:
        with open(args.dump_diagram, "w", encoding="utf-8") as fh:
            dump_diagram(knots[0], fh)
    return EXIT_OK if all(r["all_pass"] for r in rows) else EXIT_FAIL


def cmd_verify(args) -> int:
    knots = _knots_from_args(args)
    checks = _checks(args.verify)
    failed = 0
    out = _open_out(args.out)
    for k in knots:
        if component_count(k) != 1:
            continue
        r = knot_report(k, checks)
        for name, v in r.verdicts.items():
            status = "pass" if v.passed else "FAIL"
            margins = ",".join(str(m) for m in v.margins)
            out.write(f"{k}\t{VERDICT_NAMES[name]}\t{status}\t{margins}\n")
            failed += not v.passed
    if out is not sys.stdout:
        out.close()
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_oracle(args) -> int:
    knots = _knots_from_args(args)
    names = ORACLES if args.oracle in (None, "all") else tuple(args.oracle.split(","))
    for n in names:
        if n not in ORACLES:
            raise KnotParseError(f"unknown oracle {n!r}; choose from {list(ORACLES)} or all")
    tallies = run_oracles(knots, names)
    bad = first_mismatch(tallies)
    out = _open_out(args.out)
    for name, t in tallies.items():
        out.write(f"{name}: {t.checked} systems, {len(t.mismatches)} mismatches\n")
    out.write("all agree\n" if bad is None else f"first counterexample: {bad}\n")
    if out is not sys.stdout:
        out.close()
    return EXIT_OK if bad is None else EXIT_FAIL


def dump_diagram(knot: KnotSpec, out) -> None:
    """CSV of the part of the diagram touched by the knot's basic edgepaths."""
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["record", "a", "b", "c", "d", "e"])
    vertices, edges, tris = set(), set(), set()
    for t in knot.tangles:
        for p in enumerate_basic_edgepaths(t):
            vertices.update(p.vertices)
            for a, b in zip(p.vertices, p.vertices[1:]):
                edges.add((a, b))
    for x in sorted(vertices):
        w.writerow(["vertex", frac(x), frac(u_coord(x)), frac(x), "", ""])
    for a, b in sorted(edges):
        w.writerow(["edge", frac(a), frac(b), frac(u_coord(a)), frac(u_coord(b)), ""])
        for c in third_vertices((a.numerator, a.denominator), (b.numerator, b.denominator)):
            if c[1] == 0:
                continue
            cf = Fraction(*c)
            if cf in vertices:
                tris.add(tuple(sorted((a, b, cf))))
    for tri in sorted(tris):
        w.writerow(["triangle", *(frac(x) for x in tri), "", ""])
    for label, direction in (("dec", DECREASING), ("inc", INCREASING)):
        f = system_function(monotone_system(knot, direction))
        for u, v in f.points:
            w.writerow(["breakpoint", label, frac(u), frac(v), "", ""])


def cmd_dump(args) -> int:
    knot = parse_knot(args.knot) if args.knot else None
    if knot is None:
        raise KnotParseError("dump-diagram needs --knot")
    out = _open_out(args.out)
    dump_diagram(knot, out)
    if out is not sys.stdout:
        out.close()
    return EXIT_OK


def _version() -> str:
    try:
        from importlib.metadata import version

        return version("artifact")
    except Exception:
        return "unknown"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="montesinos", description="Boundary-slope diameters of Montesinos knots.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, suite=True):
        sp.add_argument("--knot", help='e.g. "M(-1/2,1/3,1/7)"')
        sp.add_argument("--family", help='template such as "M(-1/3,1/3,1/n)"')
        sp.add_argument("--range", help="range for the family variable, e.g. n=3..40")
        if suite:
            sp.add_argument("--max-den", type=int, help="all tangle multisets in (-1,1) up to this denominator")
            sp.add_argument("--tangles", type=int, default=3, help="number of tangles for --max-den")
        sp.add_argument("--out", help="write to this file instead of stdout")

    r = sub.add_parser("report", help="full report for one knot or a family")
    common(r)
    r.add_argument("--format", choices=("json", "csv"), default="json")
    r.add_argument("--verify", default="all", help="comma list of checks: " + ",".join(VERIFIERS) + " or all")
    r.add_argument("--jobs", type=int, default=1)
    r.add_argument("--meta", action="store_true", help="add a version block")
    r.add_argument("--dump-diagram", metavar="PATH", help="also write the diagram CSV")
    r.set_defaults(func=cmd_report)

    s = sub.add_parser("sweep", help="one row per knot over a family or a denominator bound")
    common(s)
    s.add_argument("--format", choices=("json", "csv"), default="csv")
    s.add_argument("--verify", default="all")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--meta", action="store_true")
    s.set_defaults(func=cmd_report, dump_diagram=None)

    v = sub.add_parser("verify", help="pass/fail lines for the inequality checks")
    common(v)
    v.add_argument("--verify", default="all")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="cross-check twists, L/V counts and remainders")
    common(o)
    o.add_argument("--oracle", default="all", help="integration, lv, remainder or all")
    o.set_defaults(func=cmd_oracle)

    d = sub.add_parser("dump-diagram", help="CSV of the diagram near a knot's edgepaths")
    common(d, suite=False)
    d.set_defaults(func=cmd_dump)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DiagramError, LinkInputError) as e:
        err = {"error": {"code": type(e).__name__, "message": str(e)}}
        sys.stderr.write(json.dumps(err) + "\n")
        return EXIT_USAGE
    except WitnessError as e:
        err = {"error": {"code": "WitnessError", "message": str(e)}}
        sys.stderr.write(json.dumps(err) + "\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
