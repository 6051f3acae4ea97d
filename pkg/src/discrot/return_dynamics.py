"""
The perturbed side: first-return dynamics to the strip X along the symmetry
line, the strip map, orbit codes, and regular domains.

The return domain is

    X = { z in (lambda Z>=0)^2 : d(z) <= d(F^4 z),  d(z) < d(F^-4 z) },

with d the distance to the line x = y; on unscaled integer points all
comparisons reduce to |x - y|.  The first-return map is Phi(z) = F^tau(z).

The strip map Psi sends a point to its next landing on the transition set
Lambda under F^4.  Off Lambda the orbit advances by the constant box field
w_{m,n}, so the transit time has a closed form (ceiling arithmetic on the
box-exit inequality): this turns O(1/lambda) iteration into O(1) per edge and
is the performance core of the module.  The closed form is used only inside
the asymptotic-regime window where it is provably exact, its landing is
confirmed by the transition test, and an exact iterative fallback covers
everything else.

Orbit codes: at the j-th vertex (transition point) of a return orbit the
integer coordinate sits within 2 v_j + 1 lattice units of the crossed wall;
its residue sigma_j modulo 2 v_j + 1, together with the companion residue
gamma_j of the non-integer coordinate, encodes the deviation of the perturbed
orbit from the invariant polygon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .arith import ceil_div, floor_div
from .hamiltonian import (
    PolygonClass,
    hamiltonian_value,
    p_inverse,
    trace_polygon,
    vertex_list,
)
from .lattice_map import (
    CapExceeded,
    LatticePoint,
    Lambda,
    box_of,
    f4_apply,
    f4_inverse,
    f_apply,
    f_inverse,
    in_sigma,
    is_transition_point,
    v_field,
    w_at_box,
)

__all__ = [
    "NotRegularError",
    "EmptyDomainError",
    "ReturnOrbit",
    "OrbitVertex",
    "VertexRecord",
    "OrbitCode",
    "RegularDomain",
    "HausdorffResult",
    "scaled_hamiltonian_times_q",
    "in_return_domain",
    "transit_time_to_x",
    "return_map",
    "return_orbit",
    "strip_map",
    "strip_map_backward",
    "orbit_code",
    "regular_domain",
    "measure_mu2",
    "hausdorff_shadowing",
]


class NotRegularError(RuntimeError):
    """The point fails the regularity contract of its polygon class."""


class EmptyDomainError(RuntimeError):
    """No regular run of level values exists (lambda too large for e)."""


def scaled_hamiltonian_times_q(lam: Lambda, z: LatticePoint) -> int:
    """q * H(lambda z) as an exact integer (H takes values in Z/q here)."""
    p, q = lam.p, lam.q
    total = 0
    for c in z:
        m = (p * c) // q
        total += m * m * q + (2 * m + 1) * (p * c - m * q)
    return total


def in_return_domain(lam: Lambda, z: LatticePoint) -> bool:
    """Membership in X: first quadrant, closer to x = y than the F^4
    pre-image and at least as close as the image."""
    x, y = z
    if x < 0 or y < 0:
        return False
    u = abs(x - y)
    x4, y4 = f4_apply(lam, z)
    if u > abs(x4 - y4):
        return False
    xb, yb = f4_inverse(lam, z)
    return u < abs(xb - yb)


@dataclass(frozen=True)
class OrbitVertex:
    """A transition point on a return orbit (box-crossing record)."""

    index: int
    point: LatticePoint
    box_from: tuple[int, int]
    box_to: tuple[int, int]


@dataclass(frozen=True)
class ReturnOrbit:
    """The orbit of z from its backward X-entry to its forward return.

    points[i] = F^(i - tau_minus)(seed); first and last points lie in X.
    """

    seed: LatticePoint
    points: list[LatticePoint]
    tau: int
    tau_minus: int
    vertices: list[OrbitVertex]

    def scaled_points(self, lam: Lambda) -> list[tuple[Fraction, Fraction]]:
        return [
            (Fraction(lam.p * x, lam.q), Fraction(lam.p * y, lam.q))
            for x, y in self.points
        ]


def _collect_vertices(lam: Lambda, points: list[LatticePoint]) -> list[OrbitVertex]:
    out = []
    for i, pt in enumerate(points):
        if is_transition_point(lam, pt):
            out.append(
                OrbitVertex(
                    index=i,
                    point=pt,
                    box_from=box_of(lam, pt),
                    box_to=box_of(lam, f4_apply(lam, pt)),
                )
            )
    return out


def return_map(
    lam: Lambda, z: LatticePoint, cap: int | None = None
) -> tuple[LatticePoint, ReturnOrbit]:
    """First-return map Phi on X by plain forward iteration (the reference
    path; no strip-map shortcuts).  Returns (Phi(z), the full return orbit).
    """
    if not in_return_domain(lam, z):
        raise ValueError(f"{z} is not in the return domain X")
    if cap is None:
        cap = int(10 * lam.t_star_approx()) + 1000
    p, q = lam.p, lam.q
    pts = [z]
    # backward neighbours F^-1..F^-3 feed the d(F^-4) test for k = 1..3
    back = []
    b = z
    for _ in range(3):
        b = f_inverse(lam, b)
        back.append(b)
    x, y = z
    i = 0
    tau = None
    while tau is None:
        x, y = (p * x) // q - y, x
        pts.append((x, y))
        i += 1
        k = i - 4
        if k >= 1:
            xk, yk = pts[k]
            if xk >= 0 and yk >= 0:
                u = abs(xk - yk)
                xa, ya = pts[k + 4]
                xb, yb = pts[k - 4] if k >= 4 else back[3 - k]
                if u <= abs(xa - ya) and u < abs(xb - yb):
                    tau = k
        if i > cap:
            raise CapExceeded(f"no return to X from {z} within {cap} steps")
    pts = pts[: tau + 1]
    orbit = ReturnOrbit(
        seed=z,
        points=pts,
        tau=tau,
        tau_minus=0,
        vertices=_collect_vertices(lam, pts),
    )
    return pts[tau], orbit


def transit_time_to_x(lam: Lambda, z: LatticePoint, cap: int | None = None) -> tuple[int, int]:
    """(tau_minus, tau) for a general point: backward and forward transit
    times to X; tau_minus = 0 iff z is already in X."""
    if cap is None:
        cap = int(10 * lam.t_star_approx()) + 1000
    tau_minus = 0
    b = z
    while not in_return_domain(lam, b):
        b = f_inverse(lam, b)
        tau_minus += 1
        if tau_minus > cap:
            raise CapExceeded(f"no backward entry into X from {z} within {cap}")
    f = z
    tau = 0
    while True:
        f = f_apply(lam, f)
        tau += 1
        if in_return_domain(lam, f):
            return tau_minus, tau
        if tau > cap:
            raise CapExceeded(f"no forward entry into X from {z} within {cap}")


def return_orbit(lam: Lambda, z: LatticePoint, cap: int | None = None) -> ReturnOrbit:
    """Return orbit of a general point: F^k(z) for -tau_minus <= k <= tau."""
    tau_minus, tau = transit_time_to_x(lam, z, cap)
    start = z
    for _ in range(tau_minus):
        start = f_inverse(lam, start)
    pts = [start]
    cur = start
    for _ in range(tau_minus + tau):
        cur = f_apply(lam, cur)
        pts.append(cur)
    return ReturnOrbit(
        seed=z,
        points=pts,
        tau=tau,
        tau_minus=tau_minus,
        vertices=_collect_vertices(lam, pts),
    )


# --------------------------------------------------------------------------
# strip map
# --------------------------------------------------------------------------


def _in_regime(lam: Lambda, m: int, n: int) -> bool:
    # lambda < 1/(2 ceil(r) + 3) with ceil(r) = max(|m|, |n|) + 1 covers the
    # whole box: the one-box-step lemma applies to every point inside.
    return (2 * (max(abs(m), abs(n)) + 1) + 3) * lam.p < lam.q


def _box_exit_steps(lam: Lambda, z: LatticePoint, m: int, n: int) -> int:
    """Largest i >= 0 with z + i * w_{m,n} still inside the box B_{m,n}."""
    p, q = lam.p, lam.q
    x, y = z
    dx, dy = 2 * n + 1, -(2 * m + 1)
    if dx > 0:
        ix = floor_div((m + 1) * q - 1 - p * x, p * dx)
    else:
        ix = floor_div(p * x - m * q, -p * dx)
    if dy > 0:
        iy = floor_div((n + 1) * q - 1 - p * y, p * dy)
    else:
        iy = floor_div(p * y - n * q, -p * dy)
    return min(ix, iy)


def strip_map(lam: Lambda, z: LatticePoint) -> tuple[LatticePoint, int]:
    """Transit map to the transition set: (Psi(z), t) with Psi(z) = F^{4t}(z).

    Closed-form transit wherever the asymptotic regime guarantees it (landing
    confirmed by the exact transition test); exact iteration otherwise.
    """
    if z == (0, 0):
        raise ValueError("the origin has no transit time to the transition set")
    t = 0
    cur = z
    if is_transition_point(lam, cur):
        cur = f4_apply(lam, cur)
        t = 1
        if is_transition_point(lam, cur):
            return cur, t
    while True:
        m, n = box_of(lam, cur)
        if _in_regime(lam, m, n):
            steps = _box_exit_steps(lam, cur, m, n)
            if steps >= 1:
                dx, dy = 2 * n + 1, -(2 * m + 1)
                cand = (cur[0] + steps * dx, cur[1] + steps * dy)
                if is_transition_point(lam, cand):
                    return cand, t + steps
        nxt = f4_apply(lam, cur)
        t += 1
        if is_transition_point(lam, nxt):
            return nxt, t
        cur = nxt


def strip_map_backward(lam: Lambda, z: LatticePoint) -> tuple[LatticePoint, int]:
    """Transit to the transition set under F^-4; inverts strip_map on Lambda.

    Along a backward orbit the first landing on Lambda is the first box
    change, which needs no field assumption; the straight-line shortcut is
    validated by checking that F^4 maps the candidate back onto the line.
    """
    if z == (0, 0):
        raise ValueError("the origin has no transit time to the transition set")
    t = 0
    cur = z
    while True:
        m, n = box_of(lam, cur)
        if _in_regime(lam, m, n):
            p, q = lam.p, lam.q
            x, y = cur
            dx, dy = 2 * n + 1, -(2 * m + 1)
            # first i >= 1 with cur - i*w outside B_{m,n}
            if dx > 0:
                ix = ceil_div(p * x - m * q + 1, p * dx)
            else:
                ix = ceil_div((m + 1) * q - p * x, -p * dx)
            if dy > 0:
                iy = ceil_div(p * y - n * q + 1, p * dy)
            else:
                iy = ceil_div((n + 1) * q - p * y, -p * dy)
            steps = min(ix, iy)
            cand = (x - steps * dx, y - steps * dy)
            prev = (x - (steps - 1) * dx, y - (steps - 1) * dy)
            if box_of(lam, cand) != (m, n) and f4_apply(lam, cand) == prev:
                return cand, t + steps
        nxt = f4_inverse(lam, cur)
        t += 1
        if is_transition_point(lam, nxt):
            return nxt, t
        cur = nxt


# --------------------------------------------------------------------------
# orbit codes
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class VertexRecord:
    """Exact decomposition of one vertex of a return orbit.

    The integer coordinate is the one whose wall is crossed; offset_int is
    its offset from ceil(wall/lambda) and sigma = offset_int mod (2 v + 1).
    offset_non is the non-integer coordinate's offset from its type anchor;
    gamma reduces it modulo q/(2v+1).  epsilon is the kick coefficient: the
    discrete field at the vertex is w_{m,n} + lambda * epsilon * e with e the
    unit vector along the non-integer coordinate.
    """

    j: int
    point: LatticePoint
    box_from: tuple[int, int]
    box_to: tuple[int, int]
    wall_axis: str
    wall: int
    vtype: int
    offset_int: int
    offset_non: int
    sigma: int
    gamma: int
    epsilon: int
    transit: int


def _vertex_record(
    lam: Lambda,
    zv: LatticePoint,
    expected_type: int,
    j: int,
    gamma_mod: int,
    transit: int,
) -> VertexRecord:
    p, q = lam.p, lam.q
    bf = box_of(lam, zv)
    image = f4_apply(lam, zv)
    bt = box_of(lam, image)
    if bf == bt:
        raise NotRegularError(f"vertex {j} at {zv} is not a transition point")
    if bf[0] != bt[0] and bf[1] != bt[1]:
        raise NotRegularError(f"diagonal box jump at vertex {j}: {bf} -> {bt}")
    x, y = zv
    if bf[0] != bt[0]:
        wall_axis = "x"
        wall = max(bf[0], bt[0])
        off_int = x - lam.ceil_inv_scaled(wall)
        non = y
    else:
        wall_axis = "y"
        wall = max(bf[1], bt[1])
        off_int = y - lam.ceil_inv_scaled(wall)
        non = x
    vtype = (p * abs(non)) // q
    if vtype != expected_type:
        raise NotRegularError(
            f"vertex {j} at {zv} has type {vtype}, class expects {expected_type}"
        )
    width = 2 * expected_type + 1
    anchor = (
        lam.ceil_inv_scaled(expected_type)
        if non >= 0
        else lam.ceil_inv_scaled(-(expected_type + 1))
    )
    off_non = non - anchor
    # kick: v - w at the *image* box, supported on the non-integer direction.
    # Crossings of a horizontal wall kick by {0, 1}; crossings of a vertical
    # wall see the two-unit jump of the field's y-component on top, so the
    # coefficient lands in {1, 2} there (and mirrored signs below the axes).
    vx, vy = v_field(lam, zv)
    wx, wy = w_at_box(*bt)
    diff = (vx - wx, vy - wy)
    if wall_axis == "y":
        eps, straight = diff[0], diff[1]
    else:
        eps, straight = diff[1], diff[0]
    if straight != 0 or abs(eps) > 2:
        raise NotRegularError(f"irregular kick {diff} at vertex {j} ({zv})")
    return VertexRecord(
        j=j,
        point=zv,
        box_from=bf,
        box_to=bt,
        wall_axis=wall_axis,
        wall=wall,
        vtype=expected_type,
        offset_int=off_int,
        offset_non=off_non,
        sigma=off_int % width,
        gamma=off_non % gamma_mod,
        epsilon=eps,
        transit=transit,
    )


@dataclass(frozen=True)
class OrbitCode:
    """Residue code (sigma_-1, sigma_1, ..., sigma_{2k-1}) of a return orbit,
    with the companion gamma residues and per-vertex records."""

    e: int
    sigma_minus1: int
    sigma: tuple[int, ...]
    gamma: tuple[int, ...]
    vertices: tuple[VertexRecord, ...]

    @property
    def code(self) -> tuple[int, ...]:
        return (self.sigma_minus1,) + self.sigma

    def prefix(self, j: int) -> tuple[int, ...]:
        """Entries through sigma_j: (sigma_-1, sigma_1, ..., sigma_j)."""
        return (self.sigma_minus1,) + self.sigma[:j]


def orbit_code(lam: Lambda, z: LatticePoint, cls: PolygonClass) -> OrbitCode:
    """Orbit code of z within its polygon class, via strip-map transits.

    sigma_-1 comes from the last vertex before the symmetry line (backward
    strip map); sigma_1 ... sigma_{2k-1} from the first quarter-turn.
    """
    from .theory import q_sequence  # deferred: theory builds on this module

    types = cls.quarter_turn_types()
    qs = q_sequence(types)
    q_class = qs[-1]
    zb, tb = strip_map_backward(lam, z)
    rec_m1 = _vertex_record(
        lam, zb, types[0], j=-1, gamma_mod=q_class // (2 * types[0] + 1), transit=tb
    )
    recs = [rec_m1]
    sigmas = []
    gammas = []
    cur = z
    for j in range(1, 2 * cls.k):
        v_j = types[j - 1]
        cur, t = strip_map(lam, cur)
        rec = _vertex_record(
            lam, cur, v_j, j=j, gamma_mod=q_class // (2 * v_j + 1), transit=t
        )
        recs.append(rec)
        sigmas.append(rec.sigma)
        gammas.append(rec.gamma)
    return OrbitCode(
        e=cls.e,
        sigma_minus1=rec_m1.sigma,
        sigma=tuple(sigmas),
        gamma=tuple(gammas),
        vertices=tuple(recs),
    )


# --------------------------------------------------------------------------
# regular domains
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RegularDomain:
    """The regular domain of a polygon class at a given lambda.

    points hold the members of the domain; interval is the attained range of
    level values (as exact fractions) of the maximal all-regular run.
    """

    e: int
    lam: Lambda
    interval: tuple[Fraction, Fraction]
    points: list[LatticePoint]
    n_candidates: int
    n_regular: int
    tie: bool

    @property
    def interval_length(self) -> Fraction:
        return self.interval[1] - self.interval[0]


REGULAR = "regular"
IRREGULAR = "irregular"
OUTSIDE = "outside"


def _strand_status(
    lam: Lambda, start: LatticePoint, legs: int, qlo: int, qhi: int
) -> str:
    """Status of one F^4-strand of the return orbit.

    OUTSIDE: the level value leaves the class window somewhere along the
    strand (the point does not belong to the class at all).  IRREGULAR: the
    window holds but a vertex lands on Sigma or jumps boxes diagonally.  The
    level is constant between transition points, so sampling the strand
    start, each vertex, and each post-kick point covers every orbit point.
    The strand's transition points within the quarter-turn number legs in
    total; the start counts as the first one when it lies on the transition
    set itself.
    """
    if not qlo < scaled_hamiltonian_times_q(lam, start) < qhi:
        return OUTSIDE
    cur = start
    bad = False
    if is_transition_point(lam, cur):
        if in_sigma(lam, cur):
            bad = True
        legs -= 1
    for _ in range(legs):
        cur, _t = strip_map(lam, cur)
        if not qlo < scaled_hamiltonian_times_q(lam, cur) < qhi:
            return OUTSIDE
        post = f4_apply(lam, cur)
        if not qlo < scaled_hamiltonian_times_q(lam, post) < qhi:
            return OUTSIDE
        bf = box_of(lam, cur)
        bt = box_of(lam, post)
        if bf[0] != bt[0] and bf[1] != bt[1]:
            bad = True
        if in_sigma(lam, cur):
            bad = True
    return IRREGULAR if bad else REGULAR


def classify_candidate(lam: Lambda, z: LatticePoint, cls: PolygonClass) -> str:
    """OUTSIDE if z is not in the return domain or its orbit's level leaves
    the class window (such points belong to no class and never penalise a
    level); otherwise REGULAR, or IRREGULAR when z is itself a transition
    point or the orbit touches Sigma or crosses boxes diagonally."""
    if not in_return_domain(lam, z):
        return OUTSIDE
    qlo = cls.interval[0] * lam.q
    qhi = cls.interval[1] * lam.q
    legs = 2 * cls.k - 1
    statuses = []
    cur = z
    for i in range(4):
        if i > 0:
            cur = f_apply(lam, cur)
        status = _strand_status(lam, cur, legs, qlo, qhi)
        if status == OUTSIDE:
            return OUTSIDE
        statuses.append(status)
    if is_transition_point(lam, z) or IRREGULAR in statuses:
        return IRREGULAR
    return REGULAR


def is_regular(lam: Lambda, z: LatticePoint, cls: PolygonClass) -> bool:
    """z belongs to the class (return domain plus level window along the
    whole orbit) and is regular: off the transition set, orbit off Sigma."""
    return classify_candidate(lam, z, cls) == REGULAR


def regular_domain(
    lam: Lambda, e: int, cls: PolygonClass | None = None
) -> RegularDomain:
    """Enumerate the regular domain of class e at parameter lambda.

    Candidates are the first-quadrant lattice points in the symmetry strip
    -(2 v_1 + 1) <= x - y < 2 v_1 + 1 whose level value lies in the open
    interval (e, e'). The attained interval is the longest run of level
    values all of whose candidates are regular (ties resolved toward larger
    values and flagged).
    """
    if cls is None:
        cls = vertex_list(e)
    if not lam.small_enough(cls.v1):
        raise ValueError(
            f"lambda = {lam} is not below the critical parameter for m = {cls.v1}"
        )
    p, q = lam.p, lam.q
    w1 = 2 * cls.v1 + 1
    lo, hi = cls.interval
    x_lo = (p_inverse(Fraction(lo, 2)) * q / p).__floor__() - (w1 + 2)
    x_hi = (p_inverse(Fraction(hi, 2)) * q / p).__ceil__() + (w1 + 2)
    qlo, qhi = lo * q, hi * q
    levels: dict[int, list[tuple[LatticePoint, str]]] = {}
    n_candidates = 0
    n_regular = 0
    for u in range(-w1, w1):
        for x in range(max(x_lo, 0), x_hi + 1):
            y = x - u
            if y < 0:
                continue
            z = (x, y)
            qh = scaled_hamiltonian_times_q(lam, z)
            if not qlo < qh < qhi:
                continue
            status = classify_candidate(lam, z, cls)
            if status == OUTSIDE:
                continue
            n_candidates += 1
            n_regular += status == REGULAR
            levels.setdefault(qh, []).append((z, status))
    if not levels:
        raise EmptyDomainError(f"no candidates for e = {e} at lambda = {lam}")
    ordered = sorted(levels)
    good_level = {
        qh: all(s == REGULAR for _, s in members) for qh, members in levels.items()
    }
    runs: list[tuple[int, int]] = []  # (start index, end index) inclusive
    start = None
    for i, qh in enumerate(ordered):
        if good_level[qh]:
            if start is None:
                start = i
        elif start is not None:
            runs.append((start, i - 1))
            start = None
    if start is not None:
        runs.append((start, len(ordered) - 1))
    if not runs:
        raise EmptyDomainError(f"no regular level for e = {e} at lambda = {lam}")
    best_len = max(b - a for a, b in runs)
    best_runs = [r for r in runs if r[1] - r[0] == best_len]
    tie = len(best_runs) > 1
    a, b = best_runs[-1]  # ties resolved toward larger level values
    chosen = set(ordered[a : b + 1])
    points = [
        z
        for qh in sorted(chosen)
        for z, status in levels[qh]
        if status == REGULAR
    ]
    interval = (Fraction(ordered[a], q), Fraction(ordered[b], q))
    return RegularDomain(
        e=e,
        lam=lam,
        interval=interval,
        points=points,
        n_candidates=n_candidates,
        n_regular=n_regular,
        tie=tie,
    )


# --------------------------------------------------------------------------
# shadowing measurements
# --------------------------------------------------------------------------


def round_to_lattice(lam: Lambda, w: tuple[Fraction, Fraction]) -> LatticePoint:
    """R_lambda: round a plane point down to the scaled lattice (unscaled)."""
    return (
        math.floor(Fraction(w[0]) * lam.q / lam.p),
        math.floor(Fraction(w[1]) * lam.q / lam.p),
    )


def measure_mu2(
    lam: Lambda, w: tuple[Fraction, Fraction], cap: int | None = None
) -> Fraction:
    """Fraction of the return orbit of R_lambda(w) where the discrete field
    equals the box field."""
    if Fraction(w[0]) == 0 and Fraction(w[1]) == 0:
        raise ValueError("w must not be the origin")
    z = round_to_lattice(lam, w)
    orbit = return_orbit(lam, z, cap)
    good = 0
    for pt in orbit.points:
        m, n = box_of(lam, pt)
        if v_field(lam, pt) == (2 * n + 1, -(2 * m + 1)):
            good += 1
    return Fraction(good, len(orbit.points))


class HausdorffResult(NamedTuple):
    """Hausdorff distance between a level polygon and a return orbit.

    sq is the exact squared distance; value its floating square root.
    """

    sq: Fraction
    value: float


def _segment_distance_sq(
    pt: tuple[Fraction, Fraction],
    a: tuple[Fraction, Fraction],
    b: tuple[Fraction, Fraction],
) -> Fraction:
    px, py = pt
    ax, ay = a
    bx, by = b
    dx, dy = bx - ax, by - ay
    den = dx * dx + dy * dy
    num = (px - ax) * dx + (py - ay) * dy
    if num <= 0:
        qx, qy = ax, ay
    elif num >= den:
        qx, qy = bx, by
    else:
        t = num / den
        qx, qy = ax + t * dx, ay + t * dy
    return (px - qx) ** 2 + (py - qy) ** 2


def hausdorff_shadowing(
    lam: Lambda, w: tuple[Fraction, Fraction], cap: int | None = None
) -> HausdorffResult:
    """Hausdorff distance between the level polygon through w and the return
    orbit of the rounded point, exact on squares.

    Directions: orbit points against exact polygon segments; polygon vertices
    against orbit points (no sampling anywhere).
    """
    w = (Fraction(w[0]), Fraction(w[1]))
    polygon = trace_polygon(hamiltonian_value(w))
    orbit = return_orbit(lam, round_to_lattice(lam, w), cap)
    pts = orbit.scaled_points(lam)
    verts = polygon.vertices
    edges = list(zip(verts, verts[1:] + verts[:1]))
    d_orbit_to_poly = Fraction(0)
    for pt in pts:
        best = None
        for a, b in edges:
            d = _segment_distance_sq(pt, a, b)
            if best is None or d < best:
                best = d
        if best > d_orbit_to_poly:
            d_orbit_to_poly = best
    d_poly_to_orbit = Fraction(0)
    for v in verts:
        vx, vy = v
        best = None
        for px, py in pts:
            d = (px - vx) ** 2 + (py - vy) ** 2
            if best is None or d < best:
                best = d
        if best > d_poly_to_orbit:
            d_poly_to_orbit = best
    sq = max(d_orbit_to_poly, d_poly_to_orbit)
    return HausdorffResult(sq=sq, value=math.sqrt(sq))
