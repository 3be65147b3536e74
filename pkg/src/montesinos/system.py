"""Candidate edgepath systems for a whole Montesinos knot."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional, Sequence

from .edgepath import (
    DECREASING,
    Edgepath,
    breakpoints,
    enumerate_basic_edgepaths,
    final_r_value,
    is_completely_reversible,
    monotone_basic_edgepath,
    path_twist,
)
from .farey import DiagramError, is_integer, u_coord

TYPE_BASIC = "basic"
TYPE_I = "I"
TYPE_II = "II"
TYPE_III = "III"

CLASS_A, CLASS_B, CLASS_C, CLASS_OTHER = "A", "B", "C", "Other"


class GluingError(DiagramError):
    pass


@dataclass(frozen=True)
class KnotSpec:
    tangles: tuple[Fraction, ...]

    def __post_init__(self):
        ts = tuple(Fraction(t) for t in self.tangles)
        object.__setattr__(self, "tangles", ts)
        if len(ts) < 3:
            raise DiagramError(
                f"{len(ts)} tangles: two-bridge knots are out of scope, need N >= 3"
            )
        for t in ts:
            if is_integer(t):
                raise DiagramError(f"integral tangle {t}")

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash(self.tangles)

    @property
    def n(self) -> int:
        return len(self.tangles)

    def mirror(self) -> "KnotSpec":
        return KnotSpec(tuple(-t for t in self.tangles))

    def __str__(self) -> str:
        return "M(" + ",".join(str(t) for t in self.tangles) + ")"


@dataclass(frozen=True)
class BasicSystem:
    knot: KnotSpec
    paths: tuple[Edgepath, ...]

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash(self.paths)

    @cached_property
    def value_at_zero(self) -> int:
        return int(sum(p.vertices[-1] for p in self.paths))

    @cached_property
    def twist(self) -> Fraction:
        return sum((path_twist(p) for p in self.paths), Fraction(0))

    def mirror(self) -> "BasicSystem":
        return BasicSystem(self.knot.mirror(), tuple(p.mirror() for p in self.paths))

    def __str__(self) -> str:
        return " | ".join(str(p) for p in self.paths)


@dataclass(frozen=True)
class EdgepathSystem:
    """A candidate edgepath system built from the basic system ``basic``."""

    basic: BasicSystem
    paths: tuple[Edgepath, ...]
    type_tag: str
    cut_u: Optional[Fraction] = None
    augmented: bool = False
    partial_infinity: bool = False
    redundant_vertical: bool = False

    def __post_init__(self):
        ends = [p.endpoint() for p in self.paths]
        us = {u for u, _ in ends}
        if len(us) != 1 or sum(v for _, v in ends) != 0:
            raise GluingError(f"gluing consistency fails for {self}: {ends}")
        u = us.pop()
        expected = {TYPE_I: u > 0, TYPE_II: u == 0, TYPE_III: u < 0}[self.type_tag]
        if not expected:
            raise GluingError(f"type {self.type_tag} system ends at u={u}")

    @property
    def knot(self) -> KnotSpec:
        return self.basic.knot

    @property
    def n(self) -> int:
        return len(self.paths)

    @cached_property
    def vertical_counts(self) -> tuple[int, ...]:
        return tuple(sum(p.vertical) for p in self.paths)

    @property
    def is_special(self) -> bool:
        return self.augmented or self.partial_infinity or self.redundant_vertical

    def mirror(self) -> "EdgepathSystem":
        return EdgepathSystem(
            self.basic.mirror(),
            tuple(p.mirror() for p in self.paths),
            self.type_tag,
            self.cut_u,
            self.augmented,
            self.partial_infinity,
            self.redundant_vertical,
        )

    def __str__(self) -> str:
        return f"type {self.type_tag}: " + " | ".join(str(p) for p in self.paths)


# -- basic systems -------------------------------------------------------------


def enumerate_basic_systems(knot: KnotSpec) -> list[BasicSystem]:
    per_tangle = [enumerate_basic_edgepaths(t) for t in knot.tangles]
    return [BasicSystem(knot, combo) for combo in itertools.product(*per_tangle)]


@lru_cache(maxsize=4096)
def monotone_system(knot: KnotSpec, direction: str = DECREASING) -> BasicSystem:
    return BasicSystem(knot, tuple(monotone_basic_edgepath(t, direction) for t in knot.tangles))


try:  # gmpy2 rationals are an order of magnitude faster in the hot loops below
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction


def to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous PL function given by sorted corners (u, value).

    Corners may hold gmpy2 rationals; values handed back out are Fractions.
    """

    points: tuple[tuple[Fraction, Fraction], ...]

    def __call__(self, u: Fraction) -> Fraction:
        u = Q(u)
        pts = self.points
        if not pts[0][0] <= u <= pts[-1][0]:
            raise DiagramError(f"u={u} outside the domain")
        for (u1, v1), (u2, v2) in zip(pts, pts[1:]):
            if u1 <= u <= u2:
                return to_fraction(v1 + (v2 - v1) * (u - u1) / (u2 - u1))
        return to_fraction(pts[0][1])

    def segments(self):
        return zip(self.points, self.points[1:])

    def slopes(self) -> list[Fraction]:
        return [to_fraction((v2 - v1) / (u2 - u1)) for (u1, v1), (u2, v2) in self.segments()]


@lru_cache(maxsize=1 << 16)
def _fast_breakpoints(path: Edgepath):
    return tuple((Q(u), Q(v)) for u, v in breakpoints(path))


def _path_function(path: Edgepath) -> PiecewiseLinear:
    return PiecewiseLinear(_fast_breakpoints(path))


def _merged_values(pts, us):
    """Values of the PL function with corners ``pts`` at the sorted points ``us``."""
    out = []
    j = 0
    last = len(pts) - 1
    for u in us:
        while j < last and pts[j + 1][0] <= u:
            j += 1
        u1, v1 = pts[j]
        if u == u1 or j == last:
            out.append(v1)
        else:
            u2, v2 = pts[j + 1]
            out.append(v1 + (v2 - v1) * (u - u1) / (u2 - u1))
    return out


@lru_cache(maxsize=1 << 12)
def system_function(basic: BasicSystem) -> PiecewiseLinear:
    """The sum of the extended basic edgepaths as one PL function on [0, 1]."""
    corners = [_fast_breakpoints(p) for p in basic.paths]
    us = sorted({u for pts in corners for u, _ in pts})
    total = [Q(0)] * len(us)
    for pts in corners:
        total = [a + b for a, b in zip(total, _merged_values(pts, us))]
    return PiecewiseLinear(tuple(zip(us, total)))


@dataclass(frozen=True)
class RootScan:
    roots: tuple[Fraction, ...]
    degenerate: tuple[tuple[Fraction, Fraction], ...]


def scan_roots(f: PiecewiseLinear) -> RootScan:
    """Isolated zeros of f in the open interval (0, 1), found segment by segment."""
    roots: set[Fraction] = set()
    flat: list[tuple[Fraction, Fraction]] = []
    for (u1, v1), (u2, v2) in f.segments():
        if v1 == 0 and v2 == 0:
            flat.append((u1, u2))
        elif v1 == 0:
            roots.add(u1)
        elif v2 == 0:
            roots.add(u2)
        elif (v1 < 0) != (v2 < 0):
            roots.add(u1 + (u2 - u1) * v1 / (v1 - v2))
    isolated = [
        to_fraction(r) for r in roots if 0 < r < 1 and not any(a <= r <= b for a, b in flat)
    ]
    flat = [(to_fraction(a), to_fraction(b)) for a, b in flat]
    return RootScan(tuple(sorted(isolated)), tuple(flat))


def cut_path(path: Edgepath, u0: Fraction) -> Edgepath:
    """Cut a basic edgepath at u = u0, keeping the part with u >= u0."""
    q = path.tangle.denominator
    if u0 > u_coord(path.tangle):
        return Edgepath(path.tangle, constant_u=u0)
    vs = path.vertices
    for i, x in enumerate(vs):
        ux = u_coord(x)
        if ux == u0:
            return Edgepath(path.tangle, vs[: i + 1])
        if ux < u0:
            return Edgepath(path.tangle, vs[:i], partial=x, cut_u=u0)
    raise DiagramError(f"cannot cut {path} at u={u0} (q={q})")


def type_I_systems(basic: BasicSystem) -> list[EdgepathSystem]:
    scan = scan_roots(system_function(basic))
    return [
        EdgepathSystem(basic, tuple(cut_path(p, u0) for p in basic.paths), TYPE_I, cut_u=u0)
        for u0 in scan.roots
    ]


def compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` non-negative integers."""
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def _with_vertical(path: Edgepath, steps: tuple[int, ...]) -> Edgepath:
    return Edgepath(path.tangle, path.vertices, vertical=steps)


def type_II_systems(basic: BasicSystem, redundant: bool = False) -> list[EdgepathSystem]:
    """Vertical completions of ``basic``; one system per distribution of the edges.

    With ``redundant`` an extra system carrying one cancelling up/down pair on
    the first path is appended, flagged ``redundant_vertical``.
    """
    m = basic.value_at_zero
    step = 1 if m < 0 else -1
    out = []
    for comp in compositions(abs(m), basic.knot.n):
        paths = tuple(_with_vertical(p, (step,) * k) for p, k in zip(basic.paths, comp))
        out.append(EdgepathSystem(basic, paths, TYPE_II))
    if redundant:
        first = out[0].paths
        bumped = (Edgepath(first[0].tangle, first[0].vertices, vertical=first[0].vertical + (1, -1)),)
        out.append(EdgepathSystem(basic, bumped + first[1:], TYPE_II, redundant_vertical=True))
    return out


def _with_infinity(path: Edgepath, u: Fraction = Fraction(-1), augmented: bool = False) -> Edgepath:
    return Edgepath(path.tangle, path.vertices, infinity_u=u, augmented=augmented)


def type_III_systems(basic: BasicSystem, special: bool = False) -> list[EdgepathSystem]:
    """The complete-infinity type III system of ``basic``.

    With ``special`` the augmented variant and, when the basic system
    vanishes at u = 0, one representative with partial infinity-edges are
    appended for classification.
    """
    out = [EdgepathSystem(basic, tuple(_with_infinity(p) for p in basic.paths), TYPE_III)]
    if special:
        aug = (_with_infinity(basic.paths[0], augmented=True),) + out[0].paths[1:]
        out.append(EdgepathSystem(basic, aug, TYPE_III, augmented=True))
        if basic.value_at_zero == 0:
            half = Fraction(-1, 2)
            paths = tuple(_with_infinity(p, half) for p in basic.paths)
            out.append(EdgepathSystem(basic, paths, TYPE_III, partial_infinity=True))
    return out


@lru_cache(maxsize=64)
def candidate_systems(knot: KnotSpec, special: bool = True) -> tuple[EdgepathSystem, ...]:
    """All candidate systems, first occurrence kept when two basic systems
    produce the same cut system."""
    out, seen = [], set()
    for basic in enumerate_basic_systems(knot):
        for s in (
            type_I_systems(basic)
            + type_II_systems(basic, redundant=special)
            + type_III_systems(basic, special=special)
        ):
            key = (s.type_tag, s.paths)
            if key not in seen:
                seen.add(key)
                out.append(s)
    return tuple(out)


# -- L/V counts and classes ------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def count_path_L_V(path: Edgepath, dec: Edgepath) -> tuple[int, int]:
    """Triangles and vertical edges of S enclosed between ``path`` and ``dec``.

    The region is cut at the shared vertices into simple polygons made of
    Farey triangles with no interior vertices, so each polygon with n corners
    holds n - 2 triangles.
    """
    a, b = path.vertices, dec.vertices
    if a[0] != b[0]:
        raise DiagramError("paths start at different tangles")
    shared = sorted(set(a) & set(b), key=u_coord, reverse=True)
    pos_a = {x: i for i, x in enumerate(a)}
    pos_b = {x: i for i, x in enumerate(b)}
    triangles = 0
    for s, t in zip(shared, shared[1:]):
        na = pos_a[t] - pos_a[s] + 1
        nb = pos_b[t] - pos_b[s] + 1
        if na == 2 and nb == 2:
            continue
        triangles += na + nb - 2 - 2
    z_path, z_dec = a[-1], b[-1]
    if z_path < z_dec:
        raise DiagramError(f"{path} runs below the decreasing path")
    verticals = int(z_path - z_dec)
    if verticals:
        last = shared[-1]
        na = len(a) - pos_a[last]
        nb = len(b) - pos_b[last]
        corners = na + nb - 1 + (verticals - 1)
        triangles += corners - 2
    return triangles, verticals


def count_L_V(basic: BasicSystem) -> tuple[int, int]:
    L = V = 0
    for p in basic.paths:
        li, vi = count_path_L_V(p, monotone_basic_edgepath(p.tangle, DECREASING))
        L += li
        V += vi
    return L, V


@lru_cache(maxsize=1 << 16)
def path_class(path: Edgepath) -> str:
    lv = count_path_L_V(path, monotone_basic_edgepath(path.tangle, DECREASING))
    return {(0, 0): CLASS_A, (1, 1): CLASS_B, (2, 0): CLASS_C}.get(lv, CLASS_OTHER)


@lru_cache(maxsize=1 << 16)
def _is_minimal(path: Edgepath) -> bool:
    return path.vertices in {p.vertices for p in enumerate_basic_edgepaths(path.tangle)}


def classify_basic(basic: BasicSystem) -> str:
    classes = []
    for p in basic.paths:
        c = path_class(p) if _is_minimal(p) else CLASS_OTHER
        classes.append(c)
    others = [c for c in classes if c != CLASS_A]
    if not others:
        return CLASS_A
    if len(others) == 1 and others[0] in (CLASS_B, CLASS_C):
        return others[0]
    return CLASS_OTHER


def classify_class(system) -> str:
    """Class relative to the decreasing side; type II/III inherit from their basic system."""
    if isinstance(system, BasicSystem):
        return classify_basic(system)
    if system.type_tag == TYPE_III and any(p.infinity_u is None for p in system.paths):
        return CLASS_OTHER
    return classify_basic(system.basic)


def classify_mirror_class(system) -> str:
    """Class relative to the increasing side (class of the mirror image)."""
    return classify_class(system.mirror())


# -- r-values ------------------------------------------------------------------


@dataclass(frozen=True)
class RCycle:
    values: tuple[Optional[int], ...]
    reversible: tuple[bool, ...]

    @property
    def complete(self) -> bool:
        return all(v is not None for v in self.values)

    def labels(self) -> list[str]:
        out = []
        for v, rev in zip(self.values, self.reversible):
            if v is None:
                out.append("-")
            elif abs(v) == 2 and rev:
                out.append(f"{v}~")
            else:
                out.append(f"{v:+d}")
        return out


def final_r_cycle(system) -> RCycle:
    paths = system.paths
    values = tuple(final_r_value(p) for p in paths)
    basics = system.paths if isinstance(system, BasicSystem) else system.basic.paths
    rev = tuple(is_completely_reversible(p) for p in basics)
    return RCycle(values, rev)


def condition_star(cycle: RCycle, sign: int = -1) -> bool:
    """Condition (*) on a cycle of signed final r-values.

    At least one entry equal to ``sign`` (-1), and between consecutive such
    entries (cyclically) all but at most one entry are reversible 2*sign's.
    ``sign=+1`` gives the mirrored condition.
    """
    vals = cycle.values
    ones = [i for i, v in enumerate(vals) if v == sign]
    if not ones:
        return False
    n = len(vals)
    for k, i in enumerate(ones):
        j = ones[(k + 1) % len(ones)]
        gap = (j - i - 1) % n if len(ones) > 1 else n - 1
        bad = 0
        for step in range(1, gap + 1):
            idx = (i + step) % n
            if not (vals[idx] == 2 * sign and cycle.reversible[idx]):
                bad += 1
        if bad > 1:
            return False
    return True


def condition_star_values(values: Sequence[int], reversible: Sequence[bool], sign: int = -1) -> bool:
    return condition_star(RCycle(tuple(values), tuple(reversible)), sign)
