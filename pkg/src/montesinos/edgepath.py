"""Edgepaths for a single rational tangle."""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .farey import (
    HORIZONTAL,
    INFINITE,
    INFINITY,
    DiagramError,
    Edge,
    Vertex,
    angle,
    is_integer,
    is_reversible_pair,
    leftward_edge,
    parents,
    partial_edge_length,
    r_value,
    u_coord,
    v_at,
)

INCREASING = "increasing"
DECREASING = "decreasing"


@dataclass(frozen=True)
class Edgepath:
    """An edgepath for the tangle ``tangle``, read right to left.

    ``vertices`` are joined by complete edges.  The remaining fields describe
    what is attached at the left end: a partial edge toward ``partial`` ending
    at ``cut_u``; unit vertical steps (+1 upward, -1 downward); an
    infinity-edge ending at ``infinity_u`` (-1 when complete); the augmented
    edge o(1/0)--<1/0>.  A constant edgepath has no vertices and sits at
    (constant_u, tangle).
    """

    tangle: Fraction
    vertices: tuple[Fraction, ...] = ()
    partial: Optional[Fraction] = None
    cut_u: Optional[Fraction] = None
    vertical: tuple[int, ...] = ()
    infinity_u: Optional[Fraction] = None
    augmented: bool = False
    constant_u: Optional[Fraction] = None

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.tangle, self.vertices, self.partial, self.cut_u, self.vertical,
                     self.infinity_u, self.augmented, self.constant_u))

    @property
    def is_constant(self) -> bool:
        return self.constant_u is not None

    @property
    def is_basic(self) -> bool:
        return (
            not self.is_constant
            and self.partial is None
            and not self.vertical
            and self.infinity_u is None
            and is_integer(self.vertices[-1])
        )

    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @cached_property
    def _edges(self) -> tuple[Edge, ...]:
        out = [leftward_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:])]
        if self.partial is not None:
            near = self.vertices[-1]
            length = partial_edge_length(near, self.partial, self.cut_u)
            out.append(leftward_edge(near, self.partial, length))
        z = self.vertices[-1] if self.vertices else None
        for step in self.vertical:
            out.append(leftward_edge(z, z + step))
            z += step
        if self.infinity_u is not None:
            out.append(Edge(angle(z), Vertex(INFINITY), INFINITE, -self.infinity_u, 0))
        if self.augmented:
            out.append(Edge(Vertex(INFINITY), Vertex(INFINITY), HORIZONTAL, Fraction(1), 0))
        return tuple(out)

    @property
    def end_vertex(self) -> Optional[Fraction]:
        """Last angle vertex reached through complete non-infinity edges."""
        if self.is_constant:
            return None
        return self.vertices[-1] + sum(self.vertical)

    def endpoint(self) -> tuple[Fraction, Fraction]:
        if self.is_constant:
            return self.constant_u, self.tangle
        if self.infinity_u is not None:
            z = self.end_vertex
            return self.infinity_u, z * (1 + self.infinity_u)
        if self.partial is not None:
            return self.cut_u, v_at(self.vertices[-1], self.partial, self.cut_u)
        z = self.end_vertex
        return u_coord(z), z

    def final_edge(self) -> Optional[tuple[Fraction, Fraction]]:
        """(near, far) of the complete edge holding the last non-vertical, non-infinity edge."""
        if self.partial is not None:
            return self.vertices[-1], self.partial
        if len(self.vertices) >= 2:
            return self.vertices[-2], self.vertices[-1]
        return None

    def mirror(self) -> "Edgepath":
        neg = lambda x: None if x is None else -x
        return replace(
            self,
            tangle=-self.tangle,
            vertices=tuple(-x for x in self.vertices),
            partial=neg(self.partial),
            vertical=tuple(-s for s in self.vertical),
        )

    def __str__(self) -> str:
        if self.is_constant:
            return f"const({self.tangle} @ u={self.constant_u})"
        parts = [f"<{x}>" for x in self.vertices]
        if self.partial is not None:
            parts.append(f"[<{self.partial}> cut u={self.cut_u}]")
        z = self.vertices[-1]
        for step in self.vertical:
            z += step
            parts.append(f"<{z}>")
        if self.infinity_u is not None:
            parts.append("<1/0>" if self.infinity_u == -1 else f"[<1/0> cut u={self.infinity_u}]")
        if self.augmented:
            parts.append("o(1/0)")
        return "-".join(parts)


def _check_tangle(t: Fraction) -> Fraction:
    t = Fraction(t)
    if is_integer(t):
        raise DiagramError(f"integral tangle {t}")
    return t


@lru_cache(maxsize=None)
def _basic_vertex_lists(t: Fraction) -> tuple[tuple[Fraction, ...], ...]:
    out: list[tuple[Fraction, ...]] = []

    def walk(path: list[Fraction], banned: Optional[Fraction]) -> None:
        x = path[-1]
        if is_integer(x):
            out.append(tuple(path))
            return
        lo, hi = parents(x)
        for nxt, other in ((lo, hi), (hi, lo)):
            if nxt == banned:
                continue
            # after x -> nxt the step nxt -> other would run along two sides
            # of the triangle (lo, hi, x)
            walk(path + [nxt], other)

    walk([t], None)
    return tuple(out)


def enumerate_basic_edgepaths(t: Fraction) -> list[Edgepath]:
    """All minimal, vertical-free leftward paths from <t> to an integer.

    Ordered lexicographically by parent choice, smaller parent first.
    """
    t = _check_tangle(t)
    return [Edgepath(t, vs) for vs in _basic_vertex_lists(t)]


@lru_cache(maxsize=None)
def monotone_basic_edgepath(t: Fraction, direction: str = DECREASING) -> Edgepath:
    t = _check_tangle(t)
    if direction not in (INCREASING, DECREASING):
        raise ValueError(direction)
    pick = 1 if direction == INCREASING else 0
    vs = [t]
    while not is_integer(vs[-1]):
        vs.append(parents(vs[-1])[pick])
    return Edgepath(t, tuple(vs))


@lru_cache(maxsize=1 << 16)
def breakpoints(path: Edgepath) -> tuple[tuple[Fraction, Fraction], ...]:
    """(u, v) corners of the extended basic edgepath, sorted by u, ending at u = 1."""
    pts = [(u_coord(x), x) for x in reversed(path.vertices)]
    pts.append((Fraction(1), path.tangle))
    return tuple(pts)


def evaluate(path: Edgepath, u: Fraction) -> Fraction:
    """v-coordinate of the extended basic edgepath at u in [0, 1]."""
    if not path.is_basic:
        raise DiagramError("evaluate needs a basic edgepath")
    u = Fraction(u)
    if not 0 <= u <= 1:
        raise DiagramError(f"u={u} outside [0, 1]")
    pts = breakpoints(path)
    for (u1, v1), (u2, v2) in zip(pts, pts[1:]):
        if u1 <= u <= u2:
            return v1 + (v2 - v1) * (u - u1) / (u2 - u1)
    raise AssertionError("unreachable")


@lru_cache(maxsize=1 << 16)
def path_twist(path: Edgepath) -> Fraction:
    return sum((e.twist for e in path.edges()), Fraction(0))


@lru_cache(maxsize=1 << 16)
def is_completely_reversible(path: Edgepath) -> bool:
    """Every pair of successive non-horizontal edges is reversible."""
    if path.is_constant:
        return True
    chain: list[Optional[Fraction]] = list(path.vertices)
    if path.partial is not None:
        chain.append(path.partial)
    z = chain[-1]
    for step in path.vertical:
        z += step
        chain.append(z)
    if path.infinity_u is not None:
        chain.append(None)
    return all(is_reversible_pair(a, b, c) for a, b, c in zip(chain, chain[1:], chain[2:]))


@lru_cache(maxsize=1 << 16)
def final_r_value(path: Edgepath, signed: bool = True) -> Optional[int]:
    fe = path.final_edge()
    if fe is None:
        return None
    return r_value(*fe, signed=signed)
