"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run alone with ``pytest tests/test_acceptance.py -v``; the lines are printed
in the terminal summary. The full run takes roughly twenty minutes on one core.
"""
import time
from dataclasses import dataclass
from fractions import Fraction as F

import pytest

from conftest import ACCEPTANCE_LINES
from montesinos.essentiality import essentiality
from montesinos.experiments import (
    EqualitySearchConfig,
    FamilyConfig,
    SuiteConfig,
    equality_search,
    family_gaps,
)
from montesinos.farey import fractions_up_to, parents, partial_edge_length, u_coord
from montesinos.invariants import (
    boundary_slope,
    cancel,
    component_count,
    is_orientable_compatible,
    remainder,
    seifert_offset,
)
from montesinos.oracles import knot_suite, run_oracles
from montesinos.system import KnotSpec, candidate_systems
from montesinos.theorems import candidates, knot_report

SUITE_DEN = 9
SPOT_N4_DEN, SPOT_N4_STEP = 5, 10
SWEEP_DEN = 7


@dataclass(frozen=True)
class Row:
    knot: KnotSpec
    report: object
    mirror: object
    verdict_mismatches: int
    offset: F
    orientable_slopes: tuple
    diameter_no_offset: object


def report(n: int, ok: bool, detail: str) -> None:
    line = f"ACC {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def _spot_n4():
    return list(knot_suite(SPOT_N4_DEN, n=4))[::SPOT_N4_STEP]


@pytest.fixture(scope="module")
def twist_oracles():
    t0 = time.perf_counter()
    main = run_oracles(knot_suite(SUITE_DEN), ("integration", "lv"))
    elapsed = time.perf_counter() - t0
    spot = run_oracles(_spot_n4(), ("integration", "lv"))
    return main, spot, elapsed


def test_acc1_twist_integration(twist_oracles):
    main, spot, elapsed = twist_oracles
    a, b = main["integration"], spot["integration"]
    ok = a.ok and b.ok and a.checked > 0
    report(1, ok, f"twist == integration on {a.checked} systems (N=3, den<={SUITE_DEN}) "
                  f"+ {b.checked} (N=4 spot); mismatches {len(a.mismatches) + len(b.mismatches)}; "
                  f"N=3 oracles took {elapsed:.0f}s")
    assert ok, (a.mismatches + b.mismatches)[:3]


def test_acc2_LV_identity(twist_oracles):
    main, spot, _ = twist_oracles
    a, b = main["lv"], spot["lv"]
    ok = a.ok and b.ok and a.checked > 0
    report(2, ok, f"tau = tau_dec - 2(L+V) on {a.checked} + {b.checked} basic systems; "
                  f"mismatches {len(a.mismatches) + len(b.mismatches)}")
    assert ok, (a.mismatches + b.mismatches)[:3]


def test_acc3_remainder_closed_forms():
    tallies = run_oracles(list(knot_suite(SUITE_DEN)) + _spot_n4(), ("remainder",))
    t = tallies["remainder"]
    standalone = 0
    bad = []
    for k in knot_suite(5):
        for s in candidate_systems(k):
            if s.augmented or s.partial_infinity or s.type_tag == "I":
                continue
            expected = 4 - 4 * cancel(s) if s.type_tag == "II" else -4 * cancel(s)
            standalone += 1
            if remainder(s) != expected:
                bad.append(s)
    ok = t.ok and not bad
    report(3, ok, f"definition == closed form on {t.checked} systems; "
                  f"type II/III identities on {standalone}; mismatches {len(t.mismatches) + len(bad)}")
    assert ok


def test_acc4_partial_edge_endpoints():
    edges = 0
    bad = []
    for t in fractions_up_to(32, F(-1), F(1)):
        if t.denominator == 1:
            continue
        for far in parents(t):
            edges += 1
            lo, hi = u_coord(far), u_coord(t)
            if partial_edge_length(t, far, hi) != 0 or partial_edge_length(t, far, lo) != 1:
                bad.append((t, far))
                continue
            grid = [hi - (hi - lo) * F(i, 16) for i in range(17)]
            vals = [partial_edge_length(t, far, u) for u in grid]
            if any(a >= b for a, b in zip(vals, vals[1:])):
                bad.append((t, far))
    ok = not bad
    report(4, ok, f"{edges} edges with den<=32: exact 0/1 at endpoints, strictly monotone on a 17-point grid; "
                  f"failures {len(bad)}")
    assert ok, bad[:3]


def test_acc5_named_knots():
    r = knot_report(KnotSpec((F(-1, 2), F(1, 3), F(1, 7))))
    got = (r.case.tag, r.tau_max, r.tau_min, r.diameter, r.crossing_number, r.verdicts["thm1"].margins)
    ok1 = (
        r.case.tag == "2-2-2-1b-b"
        and r.tau_max.is_point and r.tau_max.lo == 2
        and r.tau_min.is_point and r.tau_min.lo == -18
        and r.diameter.is_point and r.diameter.lo == 20
        and r.crossing_number == 12
        and r.verdicts["thm1"].margins == (2, 4)
    )
    a = knot_report(KnotSpec((F(1, 2), F(1, 3), F(1, 7))))
    ok2 = a.alternating and a.diameter.is_point and a.diameter.lo == 24 == 2 * a.crossing_number
    report(5, ok1 and ok2, f"M(-1/2,1/3,1/7): {r.case.tag}, tau_max {r.tau_max.lo}, tau_min {r.tau_min.lo}, "
                           f"Diam {r.diameter.lo}, cr {r.crossing_number}, margins "
                           f"({', '.join(str(m) for m in r.verdicts['thm1'].margins)}); "
                           f"M(1/2,1/3,1/7): Diam {a.diameter.lo} = 2cr {2 * a.crossing_number}")
    assert ok1 and ok2, got


@pytest.fixture(scope="module")
def sweep_with_mirrors():
    """Every N=3 knot with den <= 7 and its mirror, with the per-knot checks for criteria 9 and 10.

    Everything per knot is done in one visit so the report caches stay warm.
    """
    t0 = time.perf_counter()
    rows = []
    for k in SuiteConfig(SWEEP_DEN).knots():
        r = knot_report(k)
        m = knot_report(k.mirror())
        mirrored = {c.system: c.verdict.status for c in candidates(k.mirror())}
        verdict_bad = 0
        off = seifert_offset(k)
        slopes = []
        for c in candidates(k):
            ms = c.system.mirror()
            status = mirrored.get(ms) or essentiality(ms).status
            verdict_bad += status != c.verdict.status
            if is_orientable_compatible(c.system):
                slopes.append(boundary_slope(c.system, off))
        r0 = knot_report(k, with_offset=False)
        rows.append(Row(k, r, m, verdict_bad, off, tuple(slopes), r0.diameter))
    return rows, time.perf_counter() - t0


def test_acc6_theorem_sweep(sweep_with_mirrors):
    rows, elapsed = sweep_with_mirrors
    failed = [(w.knot, name) for w in rows for name, v in w.report.verdicts.items() if not v.passed]
    bounded = sum(not w.report.diameter.is_point for w in rows)
    ok = not failed and len(rows) > 0
    report(6, ok, f"{len(rows)} knots (N=3, den<={SWEEP_DEN}): all six verdicts pass on "
                  f"{len(rows) - len({k for k, _ in failed})}; {bounded} diameters are intervals; "
                  f"sweep with mirrors took {elapsed:.0f}s")
    assert ok, failed[:5]


def test_acc7_family():
    rows = family_gaps(FamilyConfig("M(-1/3,1/3,1/n)", 3, 40))
    gaps = [r.gap for r in rows]
    ok = all(g > -6 for g in gaps) and all(a >= b for a, b in zip(gaps, gaps[1:]))
    report(7, ok, f"M(-1/3,1/3,1/n), n=3..40: Diam-2cr from {gaps[0]} to {gaps[-1]}, "
                  f"> -6 and non-increasing")
    assert ok


def test_acc8_equality_instance():
    cfg = EqualitySearchConfig()
    natural = KnotSpec(cfg.natural)
    r, seen = equality_search(cfg)
    ok = r is not None
    detail = (f"natural candidate {natural} has {component_count(natural)} components; "
              + (f"found {r.knot} after {seen} inputs: Lambda_dec(0)={r.lam_dec0}, "
                 f"Lambda_inc(0)={r.lam_inc0}, margin {r.verdicts['thm3'].margins[0]}"
                 if ok else f"no instance among {seen} inputs"))
    report(8, ok, detail)
    assert ok


def test_acc9_mirror_symmetry(sweep_with_mirrors):
    rows, _ = sweep_with_mirrors
    bad = []
    verdicts_bad = 0
    for w in rows:
        k, r, m, vb = w.knot, w.report, w.mirror, w.verdict_mismatches
        if m.tau_max != -r.tau_min or m.tau_min != -r.tau_max:
            bad.append((k, "tau"))
        if m.diameter != r.diameter or m.crossing_number != r.crossing_number:
            bad.append((k, "diam/cr"))
        verdicts_bad += vb
    ok = not bad and verdicts_bad == 0
    report(9, ok, f"{len(rows)} knots: twists negate and swap, Diam and cr invariant, "
                  f"essentiality preserved under mirroring; failures {len(bad) + verdicts_bad}")
    assert ok, bad[:5]


def test_acc10_offset_parity(sweep_with_mirrors):
    rows, _ = sweep_with_mirrors
    checked = 0
    bad = []
    for w in rows:
        for slope in w.orientable_slopes:
            checked += 1
            if slope.denominator != 1 or slope.numerator % 2:
                bad.append((w.knot, slope))
        r = w.report
        shifted = (r.tau_max.lo - w.offset) - (r.tau_min.hi - w.offset)
        if w.diameter_no_offset != r.diameter or shifted != r.diameter.lo:
            bad.append((w.knot, "diameter"))
    ok = not bad and checked > 0
    report(10, ok, f"{checked} orientable-compatible slopes all even integers; "
                   f"diameter unchanged with offset 0 on {len(rows)} knots; failures {len(bad)}")
    assert ok, bad[:5]
