"""Incompressibility verdicts for candidate systems, and the special-system filter."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .edgepath import DECREASING, INCREASING, is_completely_reversible
from .farey import third_vertices
from .system import (
    CLASS_B,
    CLASS_C,
    TYPE_I,
    TYPE_II,
    TYPE_III,
    EdgepathSystem,
    classify_class,
    classify_mirror_class,
    condition_star,
    final_r_cycle,
    monotone_system,
)

INCOMPRESSIBLE = "Incompressible"
COMPRESSIBLE = "Compressible"
INDETERMINATE = "Indeterminate"
UNKNOWN = "Unknown"


class ClauseConflict(RuntimeError):
    pass


@dataclass(frozen=True)
class EssentialityVerdict:
    status: str
    rule: str
    family_certified: bool = False

    @property
    def certified(self) -> bool:
        """Counts toward certified extremal twists."""
        return self.status in (INCOMPRESSIBLE, INDETERMINATE) or self.family_certified

    @property
    def possibly_essential(self) -> bool:
        return self.status != COMPRESSIBLE


def _is_monotone(system: EdgepathSystem, direction: str) -> bool:
    """All edges of the system carry the sign of ``direction``."""
    want = -1 if direction == DECREASING else 1
    signs = [e.direction_sign for p in system.paths for e in p.edges() if e.direction_sign]
    return bool(signs) and all(s == want for s in signs)


def _last_edge_exception(system: EdgepathSystem, idx: int) -> bool:
    """Does the last edge of path ``idx`` share a triangle of the strip and its
    ending point with an edge of unsigned r-value 1?"""
    near, far = system.paths[idx].final_edge()
    for c in third_vertices((near.numerator, near.denominator), (far.numerator, far.denominator)):
        if c[1] == 0:
            continue
        if abs(c[1] - far.denominator) == 1:
            return True
    return False


def _clause_r_pattern(system: EdgepathSystem, sign: int) -> Optional[str]:
    """(+1, -2, r3 <= -5) pattern; ``sign=-1`` checks the mirrored (-1, +2, r3 >= 5)."""
    if system.type_tag not in (TYPE_I, TYPE_II) or system.n != 3:
        return None
    if system.type_tag == TYPE_I and any(p.is_constant for p in system.paths):
        return None
    vals = final_r_cycle(system).values
    if any(v is None for v in vals):
        return None
    s = [sign * v for v in vals]
    if sorted(s)[1:] != [-2, 1] or min(s) > -5:
        return None
    idx = s.index(min(s))
    if _last_edge_exception(system, idx):
        return None
    return INCOMPRESSIBLE


def _upward_family(system: EdgepathSystem, sign: int) -> tuple[bool, bool]:
    """(applies, star) for a type II system carrying vertical edges toward ``sign``.

    sign=+1 looks at upward edges added to a basic system with Λ(0) < 0.
    """
    basic = system.basic
    m = basic.value_at_zero
    if system.type_tag != TYPE_II or system.redundant_vertical or sign * m >= 0:
        return False, False
    star = condition_star(final_r_cycle(basic), sign=-sign)
    return True, star


def _type_III_clause(system: EdgepathSystem) -> tuple[str, str]:
    m = system.basic.value_at_zero
    if abs(m) >= 2:
        return INCOMPRESSIBLE, "type-III |L(0)|>=2"
    reversible = sum(is_completely_reversible(p) for p in system.paths)
    if reversible >= system.n - 2:
        return COMPRESSIBLE, "type-III reversible"
    return INDETERMINATE, "type-III not compressible"


def essentiality(system: EdgepathSystem) -> EssentialityVerdict:
    decisive: list[tuple[str, str]] = []
    family = False
    if system.is_special:
        return EssentialityVerdict(UNKNOWN, "special system")

    if system.type_tag == TYPE_III:
        decisive.append(_type_III_clause(system))
    for sign, name in ((1, "dec"), (-1, "inc")):
        direction = DECREASING if sign == 1 else INCREASING
        if system.type_tag in (TYPE_I, TYPE_II) and _is_monotone(system, direction):
            decisive.append((INCOMPRESSIBLE, f"monotone-{name} type {system.type_tag}"))
        r = _clause_r_pattern(system, sign)
        if r:
            decisive.append((r, f"r-cycle pattern ({name})"))
        applies, star = _upward_family(system, sign)
        if applies:
            if star:
                decisive.append((COMPRESSIBLE, f"vertical family with (*) ({name})"))
            else:
                family = True

    statuses = {s for s, _ in decisive}
    if INCOMPRESSIBLE in statuses and COMPRESSIBLE in statuses:
        raise ClauseConflict(f"conflicting clauses for {system}: {decisive}")
    if decisive:
        # prefer the strongest statement
        for status in (INCOMPRESSIBLE, COMPRESSIBLE, INDETERMINATE):
            for s, rule in decisive:
                if s == status:
                    return EssentialityVerdict(s, rule, family and s != COMPRESSIBLE)
    if family:
        return EssentialityVerdict(UNKNOWN, "vertical family without (*)", True)
    return EssentialityVerdict(UNKNOWN, "undecided")


@dataclass(frozen=True)
class FilterDecision:
    keep: bool
    reason: str = ""


KEEP = FilterDecision(True)


def special_system_filter(system: EdgepathSystem, side: str = "max") -> FilterDecision:
    """Drop systems that never realize an extremal twist.

    ``side`` is "max" or "min"; the class B/C type III rule is applied
    relative to the decreasing side for "max" and to the increasing side for
    "min".
    """
    if system.augmented:
        return FilterDecision(False, "augmented type III")
    if system.partial_infinity:
        return FilterDecision(False, "partial infinity-edges")
    if system.redundant_vertical:
        return FilterDecision(False, "redundant vertical edges")
    if system.type_tag == TYPE_III:
        knot = system.knot
        if side == "max":
            ok = monotone_system(knot, DECREASING).value_at_zero in (-1, 0)
            cls = ok and classify_class(system)
        else:
            ok = monotone_system(knot, INCREASING).value_at_zero in (0, 1)
            cls = ok and classify_mirror_class(system)
        if cls in (CLASS_B, CLASS_C):
            return FilterDecision(False, f"class {cls} type III beaten by another essential surface")
    return KEEP
