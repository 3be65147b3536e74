"""Exact rationals and the combinatorics of the Farey-type diagram D.

Vertices of D are <p/q> at ((q-1)/q, p/q), circles o(p/q) at (1, p/q) and
<1/0> at (-1, 0).  Every finite fraction is a ``fractions.Fraction``; the
point at infinity is represented by ``None`` wherever a bare vertex value is
needed, and by ``Vertex(INFINITY)`` otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional

ANGLE = "angle"
CIRCLE = "circle"
INFINITY = "infinity"

NON_HORIZONTAL = "non-horizontal"
HORIZONTAL = "horizontal"
VERTICAL = "vertical"
INFINITE = "infinity"


class DiagramError(ValueError):
    pass


def reduce(num: int, den: int) -> Fraction:
    if den == 0:
        raise DiagramError("zero denominator")
    return Fraction(num, den)


def u_coord(x: Optional[Fraction]) -> Fraction:
    """u-coordinate of the angle vertex <x>; ``None`` stands for <1/0>."""
    if x is None:
        return Fraction(-1)
    return Fraction(x.denominator - 1, x.denominator)


def is_integer(x: Fraction) -> bool:
    return x.denominator == 1


def determinant(a: Fraction, b: Fraction) -> int:
    return a.numerator * b.denominator - a.denominator * b.numerator


def is_farey_pair(a: Fraction, b: Fraction) -> bool:
    if a == b:
        raise DiagramError("a Farey pair needs two distinct fractions")
    return abs(determinant(a, b)) == 1


def mediant(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a.numerator + b.numerator, a.denominator + b.denominator)


def parents(f: Fraction) -> tuple[Fraction, Fraction]:
    """The two Farey parents (smaller, larger) of a non-integral fraction.

    They are the far ends of the decreasing and the increasing leftward edge
    at <f> respectively.
    """
    p, q = f.numerator, f.denominator
    if q < 2:
        raise DiagramError(f"integer {f} has no Farey parents")
    # p*b - q*a = 1 with 0 < b < q gives the left parent a/b
    b = pow(p, -1, q)
    a = (p * b - 1) // q
    return Fraction(a, b), Fraction(p - a, q - b)


@dataclass(frozen=True)
class Vertex:
    kind: str
    value: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind == INFINITY and self.value is not None:
            raise DiagramError("<1/0> carries no value")
        if self.kind in (ANGLE, CIRCLE) and self.value is None:
            raise DiagramError(f"{self.kind} vertex needs a value")

    @property
    def u(self) -> Fraction:
        if self.kind == ANGLE:
            return u_coord(self.value)
        if self.kind == CIRCLE:
            return Fraction(1)
        return Fraction(-1)

    @property
    def v(self) -> Fraction:
        return Fraction(0) if self.value is None else self.value

    def __str__(self) -> str:
        if self.kind == INFINITY:
            return "<1/0>"
        if self.kind == CIRCLE:
            return f"o({self.value})"
        return f"<{self.value}>"


def angle(x: Optional[Fraction]) -> Vertex:
    return Vertex(INFINITY) if x is None else Vertex(ANGLE, Fraction(x))


@dataclass(frozen=True)
class Edge:
    """A possibly partial edge, oriented right to left (near -> far)."""

    near: Vertex
    far: Vertex
    kind: str
    fraction: Fraction = Fraction(1)
    direction_sign: int = 0

    def __post_init__(self):
        if not 0 <= self.fraction <= 1:
            raise DiagramError(f"edge fraction {self.fraction} outside [0, 1]")
        if self.kind == NON_HORIZONTAL:
            a, b = self.near.value, self.far.value
            if a is None or b is None or not is_farey_pair(a, b):
                raise DiagramError(f"no edge between {self.near} and {self.far}")

    @property
    def is_complete(self) -> bool:
        return self.fraction == 1

    @property
    def twist(self) -> Fraction:
        if self.kind in (NON_HORIZONTAL, VERTICAL):
            return -2 * self.direction_sign * self.fraction
        return Fraction(0)


def leftward_edge(near: Fraction, far: Fraction, fraction: Fraction = Fraction(1)) -> Edge:
    kind = VERTICAL if is_integer(near) and is_integer(far) else NON_HORIZONTAL
    sign = 1 if far > near else -1
    return Edge(angle(near), angle(far), kind, Fraction(fraction), sign)


def partial_edge_length(near: Fraction, far: Fraction, u0: Fraction) -> Fraction:
    """Length of the part of the complete edge <near>--<far> between <near> and u0.

    The edge runs leftward, so den(near) > den(far).  Evaluates
    (1 + s(u0-1)) / ((s-q)(u0-1)) with s = den(near), q = den(far).
    """
    s, q = near.denominator, far.denominator
    if s == q:
        raise DiagramError("partial lengths are defined for non-vertical edges only")
    lo, hi = sorted((u_coord(near), u_coord(far)))
    u0 = Fraction(u0)
    if not lo <= u0 <= hi:
        raise DiagramError(f"u0={u0} outside the edge span [{lo}, {hi}]")
    return (1 + s * (u0 - 1)) / ((s - q) * (u0 - 1))


def v_at(near: Fraction, far: Fraction, u: Fraction) -> Fraction:
    """v-coordinate of the straight edge <near>--<far> at u."""
    un, uf = u_coord(near), u_coord(far)
    return far + (near - far) * (u - uf) / (un - uf)


def r_value(near: Fraction, far: Fraction, signed: bool = True) -> int:
    """Final r-value of an edgepath whose last edge lies in <near>--<far>.

    Unsigned it is den(far) - den(near); signed it is |den(near) - den(far)|
    carrying the sign of the edge direction.
    """
    if near is None or far is None:
        raise DiagramError("infinity edges have no r-value")
    if is_integer(near) and is_integer(far):
        raise DiagramError("vertical edges have no r-value")
    if not signed:
        return far.denominator - near.denominator
    sign = 1 if far > near else -1
    return sign * abs(near.denominator - far.denominator)


# -- triangles ---------------------------------------------------------------

Point = tuple[int, int]  # (p, q) with q >= 0; (1, 0) is 1/0
INF_POINT: Point = (1, 0)


def _point(x: Optional[Fraction]) -> Point:
    return INF_POINT if x is None else (x.numerator, x.denominator)


def _normal(p: int, q: int) -> Point:
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    g = gcd(p, q)
    return (p // g, q // g)


def third_vertices(a: Point, b: Point) -> tuple[Point, Point]:
    """Third corners of the two triangles of D containing the edge {a, b}."""
    if abs(a[0] * b[1] - a[1] * b[0]) != 1:
        raise DiagramError(f"{a} and {b} are not joined by an edge")
    return (_normal(a[0] + b[0], a[1] + b[1]), _normal(a[0] - b[0], a[1] - b[1]))


def triangles_containing(a: Optional[Fraction], b: Optional[Fraction]) -> list[frozenset]:
    pa, pb = _point(a), _point(b)
    return [frozenset((pa, pb, c)) for c in third_vertices(pa, pb)]


def triangle_edges(t: frozenset) -> set[frozenset]:
    x, y, z = tuple(t)
    return {frozenset((x, y)), frozenset((y, z)), frozenset((x, z))}


def is_reversible_pair(x: Optional[Fraction], y: Optional[Fraction], w: Optional[Fraction]) -> bool:
    """Are the successive edges x--y and y--w reversible?

    True iff some triangle through x--y and a different triangle through y--w
    share an edge other than the two given ones.
    """
    e1 = frozenset((_point(x), _point(y)))
    e2 = frozenset((_point(y), _point(w)))
    for t1 in triangles_containing(x, y):
        for t2 in triangles_containing(y, w):
            if t1 == t2:
                continue
            if (triangle_edges(t1) & triangle_edges(t2)) - {e1, e2}:
                return True
    return False


@dataclass(frozen=True)
class Triangle:
    corners: tuple[Fraction, Fraction, Fraction]

    @classmethod
    def from_pair(cls, a: Fraction, b: Fraction) -> "Triangle":
        if not is_farey_pair(a, b):
            raise DiagramError(f"{a}, {b} is not a Farey pair")
        return cls(tuple(sorted((a, b, mediant(a, b)))))


def fractions_up_to(max_den: int, lo: Fraction = Fraction(0), hi: Fraction = Fraction(1)) -> Iterator[Fraction]:
    """Reduced fractions in [lo, hi] with denominator at most max_den, sorted."""
    seen = set()
    for q in range(1, max_den + 1):
        for p in range(int(lo * q) - 1, int(hi * q) + 2):
            f = Fraction(p, q)
            if lo <= f <= hi:
                seen.add(f)
    return iter(sorted(seen))
