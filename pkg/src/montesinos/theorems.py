"""Extremal twists, diameters, crossing numbers and the inequality checks."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .edgepath import DECREASING, INCREASING, Edgepath, enumerate_basic_edgepaths, monotone_basic_edgepath
from .essentiality import EssentialityVerdict, essentiality, special_system_filter
from .invariants import (
    InvariantReport,
    chi_per_sheet,
    distance,
    invariant_report,
    remainder,
    require_knot,
    seifert_offset,
    twist,
)
from .system import (
    TYPE_II,
    TYPE_III,
    BasicSystem,
    EdgepathSystem,
    KnotSpec,
    candidate_systems,
    condition_star,
    final_r_cycle,
    monotone_system,
    type_I_systems,
)

CASE_TAGS = (
    "1", "2-1", "2-2-1", "2-2-2-1a", "2-2-2-1b-a", "2-2-2-1b-b",
    "2-2-2-2", "2-2-3", "2-3-1", "2-3-2", "3",
)


class WitnessError(RuntimeError):
    pass


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class CaseInfo:
    tag: str
    r_cycle: tuple[int, ...]
    normalized: Optional[tuple[Fraction, ...]] = None


def _normalize_2221(knot: KnotSpec, r: tuple[int, ...]) -> tuple[Fraction, ...]:
    """Move integer parts onto the tangle with r = -1 and put it first."""
    one = r.index(-1)
    rest = [i for i in range(knot.n) if i != one]
    shift = sum(math.floor(knot.tangles[i]) for i in rest)
    t1 = knot.tangles[one] + shift
    others = [knot.tangles[i] - math.floor(knot.tangles[i]) for i in rest]
    if not Fraction(-1, 2) <= t1 < 0:
        raise WitnessError(f"{knot}: normalization gives T1 = {t1}")
    others.sort(key=lambda t: -monotone_r(t))
    return (t1, *others)


def monotone_r(t: Fraction) -> int:
    (r,) = final_r_cycle(BasicSystem(None, (monotone_path(t),))).values
    return r


def monotone_path(t: Fraction) -> Edgepath:
    return monotone_basic_edgepath(t, DECREASING)


@lru_cache(maxsize=None)
def classify_case(knot: KnotSpec) -> CaseInfo:
    dec = monotone_system(knot, DECREASING)
    m = dec.value_at_zero
    cycle = final_r_cycle(dec)
    r = cycle.values
    if m >= 0:
        return CaseInfo("1", r)
    if m <= -2:
        return CaseInfo("3", r)
    ones = sum(v == -1 for v in r)
    twos = sum(v == -2 for v in r)
    big = sum(v <= -3 for v in r)
    if ones == 0:
        return CaseInfo("2-1", r)
    if ones >= 2:
        return CaseInfo("2-3-1" if condition_star(cycle) else "2-3-2", r)
    if big == 0:
        return CaseInfo("2-2-1", r)
    if big >= 2:
        return CaseInfo("2-2-3", r)
    if twos >= 2:
        return CaseInfo("2-2-2-2", r)
    norm = _normalize_2221(knot, r)
    r3 = min(r)
    if norm[0] >= Fraction(-1, 3):
        tag = "2-2-2-1a"
    elif r3 >= -4:
        tag = "2-2-2-1b-a"
    else:
        tag = "2-2-2-1b-b"
    return CaseInfo(tag, r, norm)


# -- witnesses ---------------------------------------------------------------------


def _vertical_system(basic: BasicSystem, steps: int, step: int, idx: int = 0) -> EdgepathSystem:
    paths = list(basic.paths)
    p = paths[idx]
    paths[idx] = Edgepath(p.tangle, p.vertices, vertical=(step,) * steps)
    return EdgepathSystem(basic, tuple(paths), TYPE_II)


def _type_I_witness(dec: BasicSystem, lo: Fraction, hi: Fraction) -> EdgepathSystem:
    for s in type_I_systems(dec):
        if lo < s.cut_u <= hi:
            return s
    raise WitnessError(f"no decreasing type I system with {lo} < u0 <= {hi}")


def _class_B_witness(dec: BasicSystem) -> EdgepathSystem:
    r = final_r_cycle(dec).values
    i = r.index(-1)
    p = dec.paths[i]
    far = p.vertices[-1]
    vs = p.vertices[:-1] + (far + 1,)
    if vs not in {q.vertices for q in enumerate_basic_edgepaths(p.tangle)}:
        raise WitnessError(f"replacing the final edge of {p} breaks minimality")
    paths = dec.paths[:i] + (Edgepath(p.tangle, vs),) + dec.paths[i + 1:]
    basic = BasicSystem(dec.knot, paths)
    if basic.value_at_zero != 0:
        raise WitnessError("class B replacement does not close up at u = 0")
    return EdgepathSystem(basic, paths, TYPE_II)


def max_witness(knot: KnotSpec) -> EdgepathSystem:
    """The certified system realizing the case bound on the maximal twist."""
    tag = classify_case(knot).tag
    dec = monotone_system(knot, DECREASING)
    m = dec.value_at_zero
    if tag == "1":
        w = _vertical_system(dec, m, -1)
    elif tag == "3":
        w = EdgepathSystem(dec, tuple(Edgepath(p.tangle, p.vertices, infinity_u=Fraction(-1)) for p in dec.paths), TYPE_III)
    elif tag in ("2-1", "2-2-3", "2-3-2"):
        w = _vertical_system(dec, 1, 1)
    elif tag in ("2-2-1", "2-2-2-2", "2-3-1"):
        w = _type_I_witness(dec, Fraction(0), Fraction(1, 2))
    elif tag in ("2-2-2-1a", "2-2-2-1b-a"):
        w = _type_I_witness(dec, Fraction(1, 2), Fraction(2, 3))
    else:
        w = _class_B_witness(dec)
    if not essentiality(w).certified:
        raise WitnessError(f"case {tag} witness {w} is not certified: {essentiality(w)}")
    return w


def min_witness(knot: KnotSpec) -> EdgepathSystem:
    return max_witness(knot.mirror()).mirror()


# -- enumeration -------------------------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    system: EdgepathSystem
    twist: Fraction
    verdict: EssentialityVerdict
    keep_max: bool
    keep_min: bool


@lru_cache(maxsize=256)
def candidates(knot: KnotSpec) -> tuple[Candidate, ...]:
    out = []
    for s in candidate_systems(knot):
        out.append(Candidate(
            s, twist(s), essentiality(s),
            special_system_filter(s, "max").keep, special_system_filter(s, "min").keep,
        ))
    return tuple(out)


def _bounds(cands, side: str) -> Interval:
    sign = 1 if side == "max" else -1
    keep = [c for c in cands if (c.keep_max if side == "max" else c.keep_min)]
    certified = [sign * c.twist for c in keep if c.verdict.certified]
    possible = [sign * c.twist for c in keep if c.verdict.possibly_essential]
    if not certified:
        raise WitnessError(f"no certified {side} candidate")
    lo, hi = max(certified), max(possible)
    return Interval(lo, hi) if sign == 1 else Interval(-hi, -lo)


def extremal_twists(knot: KnotSpec) -> tuple[Interval, Interval, EdgepathSystem, EdgepathSystem]:
    cands = candidates(knot)
    return _bounds(cands, "max"), _bounds(cands, "min"), max_witness(knot), min_witness(knot)


def is_alternating(knot: KnotSpec) -> bool:
    return (
        monotone_system(knot, DECREASING).value_at_zero >= 0
        or monotone_system(knot, INCREASING).value_at_zero <= 0
    )


def diameter(knot: KnotSpec) -> Interval:
    require_knot(knot)
    tmax, tmin, _, _ = extremal_twists(knot)
    return tmax - tmin


def crossing_number(knot: KnotSpec) -> int:
    """Crossings of a minimal diagram.

    Non-alternating: half the twist gap of the monotone systems.  Alternating:
    the reduced alternating diagram adds one crossing per integer step of the
    vertical completion.
    """
    require_knot(knot)
    dec = monotone_system(knot, DECREASING)
    inc = monotone_system(knot, INCREASING)
    cr = (dec.twist - inc.twist) / 2
    if dec.value_at_zero >= 0:
        cr += dec.value_at_zero
    elif inc.value_at_zero <= 0:
        cr -= inc.value_at_zero
    if cr.denominator != 1 or cr <= 0:
        raise ValueError(f"{knot}: crossing number {cr} is not a positive integer")
    return int(cr)


# -- verdicts ----------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    passed: bool
    margins: tuple[Fraction, ...] = ()
    detail: str = ""


@dataclass
class KnotReport:
    knot: KnotSpec
    case: CaseInfo
    min_case: CaseInfo
    lam_dec0: int
    lam_inc0: int
    tau_dec: Fraction
    tau_inc: Fraction
    tau_max: Interval
    tau_min: Interval
    diameter: Interval
    crossing_number: int
    alternating: bool
    offset: Optional[Fraction]
    max_witness: EdgepathSystem
    min_witness: EdgepathSystem
    max_witness_report: InvariantReport
    min_witness_report: InvariantReport
    thm3_witnesses: tuple[Optional[EdgepathSystem], Optional[EdgepathSystem]]
    verdicts: dict[str, Verdict] = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return all(v.passed for v in self.verdicts.values())


def _prop31_side(tau_ext: Interval, tau_mono: Fraction, m: int, sign: int) -> Verdict:
    """Maximal-twist statement for sign=+1; the minimal one via sign=-1."""
    lo = sign * (tau_ext.lo if sign == 1 else tau_ext.hi)
    hi = sign * (tau_ext.hi if sign == 1 else tau_ext.lo)
    t = sign * tau_mono
    m = sign * m
    if m >= 0:
        target = t + 2 * m
        ok = lo == target and target >= t
        return Verdict(ok, (lo - target, hi - target), "equality case")
    if m == -1:
        return Verdict(lo >= t - 6, (lo - (t - 6),), "window case")
    return Verdict(lo == t, (lo - t, hi - t), "equality case")


_WINDOWS = {
    "1": None,
    "3": (0, 0),
    "2-1": (-2, -2), "2-2-3": (-2, -2), "2-3-2": (-2, -2),
    "2-2-1": (-4, -2), "2-2-2-2": (-4, -2), "2-3-1": (-4, -2),
    "2-2-2-1a": (-6, -4), "2-2-2-1b-a": (-6, -4),
    "2-2-2-1b-b": (-4, -4),
}


def _witness_window_ok(tag: str, tau_w: Fraction, tau_dec: Fraction, m: int) -> bool:
    win = _WINDOWS[tag]
    if win is None:
        return tau_w == tau_dec + 2 * m
    a, b = win
    d = tau_w - tau_dec
    if a == b:
        return d == a
    return a <= d < b


def verify_prop31(r: KnotReport) -> Verdict:
    vmax = _prop31_side(r.tau_max, r.tau_dec, r.lam_dec0, 1)
    vmin = _prop31_side(r.tau_min, r.tau_inc, r.lam_inc0, -1)
    wmax = _witness_window_ok(r.case.tag, twist(r.max_witness), r.tau_dec, r.lam_dec0)
    wmin = _witness_window_ok(r.min_case.tag, -twist(r.min_witness), -r.tau_inc, -r.lam_inc0)
    ok = vmax.passed and vmin.passed and wmax and wmin
    detail = f"max: {vmax.detail}, min: {vmin.detail}, witness windows {wmax}/{wmin}"
    return Verdict(ok, vmax.margins + vmin.margins, detail)


def verify_theorem1(r: KnotReport) -> Verdict:
    lower = r.diameter.lo - (2 * r.crossing_number - 6)
    upper = 2 * r.crossing_number - r.diameter.hi
    return Verdict(lower >= 0, (lower, upper), "Diam >= 2cr - 6")


def verify_cor12(r: KnotReport) -> Verdict:
    lower = r.diameter.lo - (2 * r.crossing_number - 6)
    upper = 2 * r.crossing_number - r.diameter.hi
    ok = lower >= 0 and upper >= 0
    detail = "2cr - 6 <= Diam <= 2cr"
    if r.alternating:
        ok = ok and r.diameter.is_point and r.diameter.lo == 2 * r.crossing_number
        detail += "; alternating equality"
    return Verdict(ok, (lower, upper), detail)


def _thm3_choice(knot: KnotSpec, target: Fraction, side: str) -> Optional[tuple[EdgepathSystem, Fraction]]:
    """Certified kept candidate at the extremal twist with the smallest non-negative remainder."""
    best = None
    for c in candidates(knot):
        keep = c.keep_max if side == "max" else c.keep_min
        if not keep or not c.verdict.certified or c.twist != target:
            continue
        rho = remainder(c.system)
        if rho >= 0 and (best is None or rho < best[1]):
            best = (c.system, rho)
    return best


def verify_prop42(r: KnotReport) -> Verdict:
    a = _thm3_choice(r.knot, r.tau_max.lo, "max")
    b = _thm3_choice(r.knot, r.tau_min.hi, "min")
    ok = a is not None and b is not None
    margins = tuple(x[1] for x in (a, b) if x is not None)
    return Verdict(ok, margins, "extremal certified systems with remainder >= 0")


def verify_theorem3(r: KnotReport) -> Verdict:
    a, b = r.thm3_witnesses
    if a is None or b is None:
        return Verdict(False, (), "no witness with non-negative remainder")
    t1, t2 = twist(a), twist(b)
    x1, x2 = chi_per_sheet(a), chi_per_sheet(b)
    rho1, rho2 = remainder(a), remainder(b)
    lhs = t1 - t2
    identity = lhs == abs(t1) + abs(t2) == 2 * (x1 + x2) + rho1 + rho2
    ok = identity and rho1 >= 0 and rho2 >= 0 and t1 >= 0 >= t2
    return Verdict(ok, (rho1 + rho2,), "|R1-R2| = 2(x1+x2) + rho1 + rho2")


def verify_cor14(r: KnotReport) -> Verdict:
    a, b = r.thm3_witnesses
    if a is None or b is None:
        return Verdict(False, (), "no witnesses")
    off = r.offset if r.offset is not None else Fraction(0)
    R1, R2 = twist(a) - off, twist(b) - off
    bound = 2 * (chi_per_sheet(a) * R1.denominator + chi_per_sheet(b) * R2.denominator)
    d = distance(R1, R2)
    return Verdict(d >= bound, (d - bound,), "Delta(R1,R2) >= 2(-chi/#b sum)")


VERIFIERS = {
    "thm1": verify_theorem1,
    "cor12": verify_cor12,
    "prop31": verify_prop31,
    "prop42": verify_prop42,
    "thm3": verify_theorem3,
    "cor14": verify_cor14,
}


@lru_cache(maxsize=256)
def knot_report(knot: KnotSpec, checks: tuple[str, ...] = tuple(VERIFIERS), with_offset: bool = True) -> KnotReport:
    require_knot(knot)
    dec = monotone_system(knot, DECREASING)
    inc = monotone_system(knot, INCREASING)
    tmax, tmin, wmax, wmin = extremal_twists(knot)
    offset = seifert_offset(knot) if with_offset else None
    a = _thm3_choice(knot, tmax.lo, "max")
    b = _thm3_choice(knot, tmin.hi, "min")
    report = KnotReport(
        knot=knot,
        case=classify_case(knot),
        min_case=classify_case(knot.mirror()),
        lam_dec0=dec.value_at_zero,
        lam_inc0=inc.value_at_zero,
        tau_dec=dec.twist,
        tau_inc=inc.twist,
        tau_max=tmax,
        tau_min=tmin,
        diameter=tmax - tmin,
        crossing_number=crossing_number(knot),
        alternating=is_alternating(knot),
        offset=offset,
        max_witness=wmax,
        min_witness=wmin,
        max_witness_report=invariant_report(wmax, offset),
        min_witness_report=invariant_report(wmin, offset),
        thm3_witnesses=(a and a[0], b and b[0]),
    )
    for name in checks:
        report.verdicts[name] = VERIFIERS[name](report)
    return report
