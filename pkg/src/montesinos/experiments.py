"""Experiment configs and drivers shared by scripts/ and the acceptance tests."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .edgepath import DECREASING, INCREASING
from .invariants import component_count
from .oracles import ORACLES, OracleTally, knot_suite, run_oracles
from .system import KnotSpec, monotone_system
from .theorems import VERIFIERS, KnotReport, knot_report


@dataclass(frozen=True)
class SuiteConfig:
    max_den: int = 7
    tangles: int = 3
    ordered: bool = False
    knots_only: bool = True

    def knots(self) -> Iterator[KnotSpec]:
        for k in knot_suite(self.max_den, self.tangles, self.ordered):
            if not self.knots_only or component_count(k) == 1:
                yield k


@dataclass(frozen=True)
class SweepConfig:
    suite: SuiteConfig = field(default_factory=SuiteConfig)
    checks: tuple[str, ...] = tuple(VERIFIERS)
    mirror: bool = False


@dataclass(frozen=True)
class OracleConfig:
    suite: SuiteConfig = field(default_factory=lambda: SuiteConfig(max_den=9, knots_only=False))
    oracles: tuple[str, ...] = ORACLES


@dataclass(frozen=True)
class FamilyConfig:
    template: str = "M(-1/3,1/3,1/n)"
    lo: int = 3
    hi: int = 40

    def knots(self) -> list[KnotSpec]:
        from .cli import parse_knot

        return [parse_knot(re.sub(r"\bn\b", str(n), self.template)) for n in range(self.lo, self.hi + 1)]


@dataclass(frozen=True)
class EqualitySearchConfig:
    natural: tuple[Fraction, ...] = (Fraction(1, 3), Fraction(1, 3), Fraction(-1, 3), Fraction(-1, 3))
    suite: SuiteConfig = field(default_factory=lambda: SuiteConfig(max_den=5, tangles=4, ordered=True))
    lam_dec0: int = -2
    lam_inc0: int = 2


def sweep(cfg: SweepConfig) -> dict[KnotSpec, KnotReport]:
    out = {}
    for k in cfg.suite.knots():
        out[k] = knot_report(k, cfg.checks)
        if cfg.mirror:
            m = k.mirror()
            out[m] = knot_report(m, cfg.checks)
    return out


def run_oracle_suite(cfg: OracleConfig) -> dict[str, OracleTally]:
    return run_oracles(cfg.suite.knots(), cfg.oracles)


@dataclass(frozen=True)
class FamilyRow:
    n: int
    knot: KnotSpec
    diameter: Fraction
    crossing_number: int

    @property
    def gap(self) -> Fraction:
        return self.diameter - 2 * self.crossing_number


def family_gaps(cfg: FamilyConfig) -> list[FamilyRow]:
    rows = []
    for n, k in zip(range(cfg.lo, cfg.hi + 1), cfg.knots()):
        r = knot_report(k, ("thm1",))
        if not r.diameter.is_point:
            raise ValueError(f"{k}: diameter only bounded, {r.diameter}")
        rows.append(FamilyRow(n, k, r.diameter.lo, r.crossing_number))
    return rows


def _lambda_pair(k: KnotSpec) -> tuple[int, int]:
    return monotone_system(k, DECREASING).value_at_zero, monotone_system(k, INCREASING).value_at_zero


def equality_search(cfg: EqualitySearchConfig) -> tuple[Optional[KnotReport], int]:
    """First knot with the requested monotone values at u = 0 and a zero remainder sum.

    Returns the report (or None) and the number of inputs inspected.
    """
    seen = 0
    natural = KnotSpec(cfg.natural)
    for k in (natural, *cfg.suite.knots()):
        seen += 1
        if component_count(k) != 1 or _lambda_pair(k) != (cfg.lam_dec0, cfg.lam_inc0):
            continue
        r = knot_report(k, ("thm3",))
        v = r.verdicts["thm3"]
        if v.passed and v.margins == (0,):
            return r, seen
    return None, seen
