"""
The integrable limit: a piecewise-affine Hamiltonian whose level sets are
convex polygons, traced exactly.

    P(x) = floor(x)^2 + (2 floor(x) + 1) {x}        (P = x^2 on the integers)
    H(x, y) = P(x) + P(y)

The associated flow is parallel to the box field w_{m,n} = (2n+1, -(2m+1)),
so every level set H = a is a clockwise convex polygon with

    4 (2 floor(sqrt(a)) + 1) - r(a)

sides, where r(a) counts lattice points on the level set (zero unless a is a
critical number).  Level sets with a in the open interval between consecutive
critical numbers e < e' share a 'vertex list' V(e) = (v_1, ..., v_k): the
types v_j = floor(|u|) of the non-integer coordinate u at the first-octant
vertices, with

    k = floor(sqrt(e)) + 1,  v_1 = floor(sqrt(e/2)),  v_k = floor(sqrt(e)).

Everything here is exact rational arithmetic; there are no floating-point
square roots anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    critical_interval,
    floor_sqrt,
    is_critical,
    r_two_squares,
)

__all__ = [
    "CriticalValueError",
    "Polygon",
    "PolygonClass",
    "p_affine",
    "p_inverse",
    "hamiltonian_value",
    "trace_polygon",
    "first_octant_vertices",
    "vertex_list",
    "sides_count",
    "critical_circle_intersection",
]

PlanePoint = tuple[Fraction, Fraction]


class CriticalValueError(ValueError):
    """Canonical tracing rejected: the level value is a critical number."""


def p_affine(x: Fraction | int) -> Fraction:
    """P(x) = floor(x)^2 + (2 floor(x) + 1) {x}; even, and x^2 on integers."""
    x = Fraction(x)
    f = math.floor(x)
    return Fraction(f * f) + (2 * f + 1) * (x - f)


def p_inverse(a: Fraction | int) -> Fraction:
    """Inverse of P up to sign: p_inverse(p_affine(x)) = |x|.

    Uses floor(sqrt(P(x))) = floor(x), so the floor square root of the
    rational argument is the exact integer square root of its integer part.
    """
    a = Fraction(a)
    if a < 0:
        raise ValueError("p_inverse expects a >= 0")
    s = floor_sqrt(a)
    return (a + s * (1 + s)) / (2 * s + 1)


def hamiltonian_value(point: PlanePoint) -> Fraction:
    """H(x, y) = P(x) + P(y); coincides with x^2 + y^2 on Z^2."""
    return p_affine(point[0]) + p_affine(point[1])


@dataclass(frozen=True)
class Polygon:
    """A traced level set: exact vertices, clockwise from the positive
    half of the symmetry line x = y."""

    value: Fraction
    vertices: list[PlanePoint]

    @property
    def sides(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class PolygonClass:
    """A polygon class: the critical number e, its interval, and the
    first-octant vertex list."""

    e: int
    interval: tuple[int, int]
    vlist: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vlist)

    @property
    def v1(self) -> int:
        return self.vlist[0]

    @property
    def vk(self) -> int:
        return self.vlist[-1]

    def quarter_turn_types(self) -> tuple[int, ...]:
        """Vertex types of a full quarter-turn: (v_1 ... v_k ... v_1),
        2k-1 entries, by the eight-fold symmetry v_j = v_{2k-j}."""
        return self.vlist + self.vlist[-2::-1]

    def midpoint_value(self) -> Fraction:
        return Fraction(self.interval[0] + self.interval[1], 2)


def _wall_times(
    x: Fraction, y: Fraction, m: int, n: int, dx: int, dy: int
) -> tuple[Fraction | None, Fraction | None]:
    """Exit times of the ray (x,y) + t (dx,dy) from box [m,m+1) x [n,n+1)."""
    tx = (Fraction(m + 1) - x) / dx if dx > 0 else (Fraction(m) - x) / dx if dx < 0 else None
    ty = (Fraction(n + 1) - y) / dy if dy > 0 else (Fraction(n) - y) / dy if dy < 0 else None
    return tx, ty


def _corner_continuation(
    corner: PlanePoint, current_box: tuple[int, int]
) -> tuple[int, int]:
    """Box entered by the flow after passing exactly through a lattice corner.

    Among the three neighbouring boxes sharing the corner, exactly one has its
    own field vector pointing from the corner into its interior.
    """
    cx, cy = corner
    i, j = int(cx), int(cy)
    m, n = current_box
    candidates = {(m2, n2) for m2 in (i - 1, i) for n2 in (j - 1, j)}
    candidates.discard(current_box)
    matches = []
    for m2, n2 in candidates:
        dx, dy = 2 * n2 + 1, -(2 * m2 + 1)
        ok_x = (dx > 0) if i == m2 else (dx < 0)
        ok_y = (dy > 0) if j == n2 else (dy < 0)
        if ok_x and ok_y:
            matches.append((m2, n2))
    if len(matches) != 1:
        raise RuntimeError(f"ambiguous corner continuation at {corner}: {matches}")
    return matches[0]


def _start_state(a: Fraction, tolerant: bool) -> tuple[PlanePoint, tuple[int, int]]:
    x0 = p_inverse(a / 2)
    start = (x0, x0)
    if x0.denominator == 1:
        # Lattice corner on the symmetry line; only critical values land here.
        if not tolerant:
            raise CriticalValueError(f"level {a} passes through a lattice point")
        m = int(x0)
        return start, (m, m - 1)
    f = math.floor(x0)
    return start, (f, f)


def trace_polygon(a: Fraction | int, tolerant: bool = False) -> Polygon:
    """Trace the level set H = a exactly, one clockwise revolution.

    Canonical mode requires a non-critical value and records one vertex per
    box-wall crossing.  Tolerant mode also accepts critical values, merging
    the two crossings that coincide at each lattice point into a single
    vertex (used for side-count validation only).
    """
    a = Fraction(a)
    if a <= 0:
        raise ValueError("trace_polygon expects a > 0")
    if a.denominator == 1 and is_critical(int(a)) and not tolerant:
        raise CriticalValueError(f"{a} is a critical number; use tolerant mode")

    point, box = _start_state(a, tolerant)
    corner_start = point[0].denominator == 1
    vertices: list[PlanePoint] = [point] if corner_start else []
    close_at: PlanePoint | None = point if corner_start else None
    cap = 8 * (2 * floor_sqrt(a) + 1) + 16
    for _ in range(cap):
        x, y = point
        m, n = box
        dx, dy = 2 * n + 1, -(2 * m + 1)
        tx, ty = _wall_times(x, y, m, n, dx, dy)
        t = min(v for v in (tx, ty) if v is not None)
        point = (x + t * dx, y + t * dy)
        if tx == ty:
            # Lattice corner: two coincident crossings merge into one vertex.
            if not tolerant:
                raise CriticalValueError(f"corner hit at {point} while tracing {a}")
            box = _corner_continuation(point, box)
        elif t == tx:
            box = (m + (1 if dx > 0 else -1), n)
        else:
            box = (m, n + (1 if dy > 0 else -1))
        if close_at is None:
            close_at = point
        elif point == close_at:
            return Polygon(value=a, vertices=vertices)
        vertices.append(point)
    raise RuntimeError(f"polygon trace at {a} did not close within {cap} steps")


def first_octant_vertices(a: Fraction | int) -> list[tuple[PlanePoint, str]]:
    """Vertices of H = a from the symmetry line to the positive x-axis.

    Returns (vertex, wall_axis) pairs, wall_axis being 'x' for a vertical-wall
    crossing (integer x) and 'y' for a horizontal one; the last entry is the
    vertex on the x-axis.  Requires a non-critical value.
    """
    a = Fraction(a)
    if a <= 0:
        raise ValueError("first_octant_vertices expects a > 0")
    if a.denominator == 1 and is_critical(int(a)):
        raise CriticalValueError(f"{a} is a critical number")
    point, box = _start_state(a, tolerant=False)
    out: list[tuple[PlanePoint, str]] = []
    cap = 2 * (2 * floor_sqrt(a) + 1) + 8
    for _ in range(cap):
        x, y = point
        m, n = box
        dx, dy = 2 * n + 1, -(2 * m + 1)
        tx, ty = _wall_times(x, y, m, n, dx, dy)
        t = min(v for v in (tx, ty) if v is not None)
        if tx == ty:
            raise CriticalValueError(f"corner hit while tracing {a}")
        point = (x + t * dx, y + t * dy)
        if t == tx:
            out.append((point, "x"))
            box = (m + (1 if dx > 0 else -1), n)
        else:
            out.append((point, "y"))
            box = (m, n + (1 if dy > 0 else -1))
        if point[1] == 0:
            return out
    raise RuntimeError(f"first-octant trace at {a} did not reach the x-axis")


def vertex_list(e: int) -> PolygonClass:
    """The vertex list V(e) of the polygon class with value interval (e, e').

    Traced at the midpoint value (e + e')/2 — safely non-critical, and all
    polygons of the class share the list.  Vertex types are floors of the
    non-integer coordinate.
    """
    if not is_critical(e):
        raise ValueError(f"{e} is not a critical number")
    lo, hi = critical_interval(e)
    mid = Fraction(lo + hi, 2)
    types = []
    for (x, y), axis in first_octant_vertices(mid):
        u = y if axis == "x" else x
        types.append(math.floor(abs(u)))
    cls = PolygonClass(e=e, interval=(lo, hi), vlist=tuple(types))
    k = floor_sqrt(e) + 1
    if cls.k != k or cls.v1 != floor_sqrt(Fraction(e, 2)) or cls.vk != floor_sqrt(e):
        raise RuntimeError(f"vertex list of {e} violates its structure: {cls}")
    return cls


def sides_count(a: Fraction | int) -> int:
    """4 (2 floor(sqrt(a)) + 1) - r(a), with r(a) = 0 for non-integer a."""
    a = Fraction(a)
    if a <= 0:
        raise ValueError("sides_count expects a > 0")
    r = r_two_squares(int(a)) if a.denominator == 1 else 0
    return 4 * (2 * floor_sqrt(a) + 1) - r


def critical_circle_intersection(e: int) -> list[tuple[int, int]]:
    """All lattice points with x^2 + y^2 = e; these are exactly the points
    shared by the critical polygon and the critical circle of value e."""
    if not is_critical(e):
        raise ValueError(f"{e} is not a critical number")
    points = []
    for x in range(-math.isqrt(e), math.isqrt(e) + 1):
        y2 = e - x * x
        y = math.isqrt(y2)
        if y * y == y2:
            points.append((x, y))
            if y > 0:
                points.append((x, -y))
    return sorted(points)
