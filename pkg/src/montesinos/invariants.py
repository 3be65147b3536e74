"""Numerical invariants of candidate systems and a few knot-level helpers."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .edgepath import Edgepath, path_twist
from .essentiality import EssentialityVerdict, essentiality
from .farey import HORIZONTAL, INFINITE, DiagramError
from .system import (
    TYPE_I,
    TYPE_II,
    TYPE_III,
    BasicSystem,
    EdgepathSystem,
    KnotSpec,
    PiecewiseLinear,
    Q,
    to_fraction,
    candidate_systems,
    system_function,
)


class LinkInputError(DiagramError):
    pass


def twist(system) -> Fraction:
    return sum((path_twist(p) for p in system.paths), Fraction(0))


def _integrate(f: PiecewiseLinear, start: Fraction = Fraction(0)) -> Fraction:
    """2 * integral of f'(u)/(u-1)^2 over [start, 1], in closed form per segment.

    This is the integral of -2 f'(u)/(u-1)^2 from 1 down to ``start``.
    """
    total, start = 0, Q(start)
    for (a, va), (b, vb) in f.segments():
        if b <= start:
            continue
        m = (vb - va) / (b - a)
        if m == 0:
            continue
        a = max(a, start)
        # integral of m/(u-1)^2 from a to b is m*(1/(a-1) - 1/(b-1))
        total += 2 * m * (1 / (a - 1) - 1 / (b - 1))
    return to_fraction(Q(total))


def twist_by_integration(system) -> Fraction:
    """Twist of a basic or type I system from the slope profile of its sum function."""
    if isinstance(system, BasicSystem):
        return _integrate(system_function(system))
    if system.type_tag == TYPE_I:
        return _integrate(system_function(system.basic), system.cut_u)
    raise DiagramError("integration applies to basic and type I systems only")


@lru_cache(maxsize=1 << 16)
def path_signed_lengths(path: Edgepath) -> tuple[Fraction, Fraction]:
    plus = minus = Fraction(0)
    for e in path.edges():
        if e.kind in (HORIZONTAL, INFINITE):
            continue
        if e.direction_sign > 0:
            plus += e.fraction
        elif e.direction_sign < 0:
            minus += e.fraction
    return plus, minus


@lru_cache(maxsize=1 << 12)
def signed_lengths(system) -> tuple[Fraction, Fraction]:
    """(l+, l-): total length of increasing and of decreasing edges."""
    plus = minus = Fraction(0)
    for p in system.paths:
        a, b = path_signed_lengths(p)
        plus += a
        minus += b
    return plus, minus


def cancel(system) -> Fraction:
    return min(signed_lengths(system))


def total_length(system) -> Fraction:
    return sum(signed_lengths(system))


def _constant_data(system: EdgepathSystem) -> tuple[int, Fraction]:
    consts = [p for p in system.paths if p.is_constant]
    return len(consts), sum((Fraction(1, p.tangle.denominator) for p in consts), Fraction(0))


def chi_per_sheet(system: EdgepathSystem) -> Fraction:
    if system.augmented or system.partial_infinity:
        raise DiagramError("-chi/#s is only defined here for complete, non-augmented systems")
    A = total_length(system)
    if system.type_tag == TYPE_II:
        return A - 2
    if system.type_tag == TYPE_III:
        return A
    n = system.n
    nc, inv = _constant_data(system)
    return A + nc - n + (n - 2 - inv) / (1 - system.cut_u)


def remainder(system: EdgepathSystem) -> Fraction:
    return abs(twist(system)) - 2 * chi_per_sheet(system)


def remainder_closed_form(system: EdgepathSystem) -> Fraction:
    k = cancel(system)
    if system.type_tag == TYPE_II:
        return 4 - 4 * k
    if system.type_tag == TYPE_III:
        return -4 * k
    n = system.n
    nc, inv = _constant_data(system)
    return -4 * k + 2 * (n - nc) - (n - 2 - inv) * 2 / (1 - system.cut_u)


# -- link components and orientation ---------------------------------------------

NW, NE, SW, SE = "NW", "NE", "SW", "SE"

# pairing of the four corners realized by a curve or tangle of each parity class
PAIRINGS = {
    "1/0": ((NW, SW), (NE, SE)),
    "0/1": ((NW, NE), (SW, SE)),
    "1/1": ((NW, SE), (NE, SW)),
}


def parity_class(x: Optional[Fraction]) -> str:
    if x is None:
        return "1/0"
    return {(1, 0): "1/0", (0, 1): "0/1", (1, 1): "1/1"}[(x.numerator % 2, x.denominator % 2)]


def _internal(t: Fraction) -> dict[str, str]:
    out = {}
    for a, b in PAIRINGS[parity_class(t)]:
        out[a], out[b] = b, a
    return out


def _external(i: int, corner: str, n: int) -> tuple[int, str]:
    if corner == NE:
        return (i + 1) % n, NW
    if corner == SE:
        return (i + 1) % n, SW
    if corner == NW:
        return (i - 1) % n, NE
    return (i - 1) % n, SE


def _trace(tangles: tuple[Fraction, ...]) -> list[list[tuple[int, str, str]]]:
    """Components as lists of (tangle, corner, 'in'|'out') in tracing order."""
    n = len(tangles)
    inner = [_internal(t) for t in tangles]
    seen: set[tuple[int, str]] = set()
    comps = []
    for i in range(n):
        for c in (NW, NE, SW, SE):
            if (i, c) in seen:
                continue
            comp = []
            cur = (i, c)
            while cur not in seen:
                j, corner = cur
                exit_corner = inner[j][corner]
                seen.add(cur)
                seen.add((j, exit_corner))
                comp.append((j, corner, "in"))
                comp.append((j, exit_corner, "out"))
                cur = _external(j, exit_corner, n)
            comps.append(comp)
    return comps


@lru_cache(maxsize=None)
def _component_count(tangles: tuple[Fraction, ...]) -> int:
    return len(_trace(tangles))


def component_count(knot: KnotSpec) -> int:
    return _component_count(knot.tangles)


def require_knot(knot: KnotSpec) -> None:
    c = component_count(knot)
    if c != 1:
        raise LinkInputError(f"{knot} is a {c}-component link, not a knot")


@lru_cache(maxsize=1024)
def forbidden_classes(knot: KnotSpec) -> tuple[str, ...]:
    """Per tangle, the parity class whose pairing joins the two incoming corners."""
    require_knot(knot)
    (comp,) = _trace(knot.tangles)
    entries: dict[int, set[str]] = {}
    for j, corner, d in comp:
        if d == "in":
            entries.setdefault(j, set()).add(corner)
    out = []
    for j in range(knot.n):
        for cls, pairs in PAIRINGS.items():
            if any(set(pair) == entries[j] for pair in pairs):
                out.append(cls)
                break
    return tuple(out)


def _path_vertices(path: Edgepath) -> list[Optional[Fraction]]:
    if path.is_constant:
        return [path.tangle]
    vs: list[Optional[Fraction]] = list(path.vertices)
    if path.partial is not None:
        vs.append(path.partial)
    z = path.vertices[-1]
    for step in path.vertical:
        z += step
        vs.append(z)
    if path.infinity_u is not None:
        vs.append(None)
    return vs


def is_orientable_compatible(system: EdgepathSystem) -> bool:
    """No vertex of any path lies in its tangle's forbidden parity class.

    The test reads curve systems off complete edges only, so systems with
    partial edges or constant paths are never marked compatible.
    """
    if any(p.is_constant or p.partial is not None for p in system.paths):
        return False
    bad = forbidden_classes(system.knot)
    return all(
        parity_class(x) != b for p, b in zip(system.paths, bad) for x in _path_vertices(p)
    )


class SeifertOffsetError(DiagramError):
    pass


@lru_cache(maxsize=None)
def seifert_offset(knot: KnotSpec) -> Fraction:
    """Common twist of the type II/III candidates compatible with an orientation."""
    require_knot(knot)
    twists = {
        twist(s)
        for s in candidate_systems(knot)
        if s.type_tag != TYPE_I and not s.is_special and is_orientable_compatible(s)
    }
    if len(twists) != 1:
        raise SeifertOffsetError(f"{knot}: orientable candidates have twists {sorted(twists)}")
    return twists.pop()


def boundary_slope(system, offset: Fraction) -> Fraction:
    return twist(system) - offset


def sheets_and_boundaries(slope: Fraction, num_boundaries: int) -> int:
    if num_boundaries < 1:
        raise ValueError("need at least one boundary component")
    return Fraction(slope).denominator * num_boundaries


def distance(r1: Fraction, r2: Fraction) -> int:
    r1, r2 = Fraction(r1), Fraction(r2)
    return abs(r1.numerator * r2.denominator - r1.denominator * r2.numerator)


@dataclass(frozen=True)
class InvariantReport:
    twist: Fraction
    cancel: Fraction
    chi_per_sheet: Optional[Fraction]
    remainder: Optional[Fraction]
    essentiality: EssentialityVerdict
    slope: Optional[Fraction] = None


def invariant_report(system: EdgepathSystem, offset: Optional[Fraction] = None) -> InvariantReport:
    t = twist(system)
    special = system.augmented or system.partial_infinity
    chi = None if special else chi_per_sheet(system)
    rho = None if chi is None else abs(t) - 2 * chi
    slope = None if offset is None else t - offset
    return InvariantReport(t, cancel(system), chi, rho, essentiality(system), slope)
