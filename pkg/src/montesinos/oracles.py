"""Cross-checks between independent computations, shared by the CLI, scripts and tests."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .farey import fractions_up_to
from .invariants import remainder, remainder_closed_form, twist, twist_by_integration
from .system import (
    KnotSpec,
    candidate_systems,
    count_L_V,
    enumerate_basic_systems,
    monotone_system,
    type_I_systems,
)

ORACLES = ("integration", "lv", "remainder")


@dataclass(frozen=True)
class Mismatch:
    oracle: str
    knot: KnotSpec
    system: str
    expected: Fraction
    got: Fraction

    def __str__(self) -> str:
        return f"{self.oracle}: {self.knot} {self.system}: {self.expected} != {self.got}"


@dataclass
class OracleTally:
    checked: int = 0
    mismatches: list = None

    def __post_init__(self):
        if self.mismatches is None:
            self.mismatches = []

    @property
    def ok(self) -> bool:
        return not self.mismatches


def tangle_range(max_den: int, lo: Fraction = Fraction(-1), hi: Fraction = Fraction(1)) -> list[Fraction]:
    """Non-integral fractions in (lo, hi) with denominator at most ``max_den``."""
    return [f for f in fractions_up_to(max_den, lo, hi) if f.denominator > 1]


def knot_suite(max_den: int, n: int = 3, ordered: bool = False) -> Iterator[KnotSpec]:
    """Montesinos inputs with tangles in (-1, 1); multisets unless ``ordered``."""
    fr = tangle_range(max_den)
    combos = itertools.product(fr, repeat=n) if ordered else itertools.combinations_with_replacement(fr, n)
    for c in combos:
        yield KnotSpec(c)


def check_integration(knot: KnotSpec, tally: OracleTally) -> None:
    for b in enumerate_basic_systems(knot):
        for s in (b, *type_I_systems(b)):
            tally.checked += 1
            t, i = twist(s), twist_by_integration(s)
            if t != i:
                tally.mismatches.append(Mismatch("integration", knot, str(s), t, i))


def check_lv(knot: KnotSpec, tally: OracleTally) -> None:
    dec = monotone_system(knot)
    for b in enumerate_basic_systems(knot):
        tally.checked += 1
        L, V = count_L_V(b)
        expected = dec.twist - 2 * (L + V)
        if twist(b) != expected:
            tally.mismatches.append(Mismatch("lv", knot, str(b), expected, twist(b)))


def check_remainder(knot: KnotSpec, tally: OracleTally) -> None:
    for s in candidate_systems(knot):
        if s.augmented or s.partial_infinity:
            continue
        tally.checked += 1
        a, b = remainder(s), remainder_closed_form(s)
        if a != b:
            tally.mismatches.append(Mismatch("remainder", knot, str(s), b, a))


CHECKS = {"integration": check_integration, "lv": check_lv, "remainder": check_remainder}


def run_oracles(knots: Iterable[KnotSpec], names: Iterable[str] = ORACLES) -> dict[str, OracleTally]:
    names = tuple(names)
    out = {name: OracleTally() for name in names}
    for k in knots:
        for name in names:
            CHECKS[name](k, out[name])
    return out


def first_mismatch(tallies: dict[str, OracleTally]) -> Optional[Mismatch]:
    for t in tallies.values():
        if t.mismatches:
            return t.mismatches[0]
    return None
