"""
Arithmetic of the return map's translation symmetry and the density of
symmetric minimal orbits.

For a polygon class with vertex list (v_1, ..., v_k) define

    q_1 = (2 v_1 + 1)^2,
    q_j = q_{j-1}                                if v_j = v_{j-1},
          lcm((2 v_j + 1)(2 v_{j-1} + 1), q_{j-1})  otherwise,

along the quarter-turn list (v_1 ... v_k ... v_1); the sequence is stationary
from j = k on, with final value q.  The translation lattice is generated by

    L = (q / (2 v_1 + 1)) (1, 1)   and   (L - w_{v1,v1}) / 2,

has co-volume q, and the return map commutes with its translations on the
regular domain (checked exactly by verify_theorem_A).  Orbit codes are in
bijection with congruence classes modulo the lattice; the nested lattices
with q replaced by q_j give the cylinder sets of code prefixes.

A point is a symmetric fixed point of the return map iff its code satisfies
sigma_-1 = sigma_1 and 2 sigma_k = floor(sqrt(e)) mod (2 floor(sqrt(e)) + 1);
under the coprimality condition on the vertex list, exactly
q / ((2 v_1 + 1)(2 v_k + 1)) congruence classes do, giving the limit density
1 / ((2 v_1 + 1)(2 v_k + 1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import ceil_div
from .hamiltonian import PolygonClass, vertex_list
from .lattice_map import (
    LatticePoint,
    Lambda,
    f_apply,
    f4_apply,
    reversor_g,
)
from .return_dynamics import (
    EmptyDomainError,
    NotRegularError,
    OrbitCode,
    RegularDomain,
    in_return_domain,
    orbit_code,
    regular_domain,
    return_map,
    strip_map,
)

__all__ = [
    "InsufficientPopulationError",
    "LatticeLe",
    "CodeCensus",
    "DensityResult",
    "TheoremAReport",
    "q_sequence",
    "p_sequence",
    "q_closed_form",
    "lattice_for_class",
    "class_label",
    "coprimality_condition",
    "weak_coprimality_condition",
    "is_symmetric_minimal_code",
    "phi_strip",
    "is_symmetric_fixed_direct",
    "verify_theorem_A",
    "density_scan",
    "count_codes",
    "limit_density",
]


class InsufficientPopulationError(RuntimeError):
    """No congruent pair exists in the regular domain at this lambda."""


def q_sequence(types: tuple[int, ...]) -> list[int]:
    """The stationary lcm recursion along a quarter-turn type list."""
    qs = [(2 * types[0] + 1) ** 2]
    for prev, cur in zip(types, types[1:]):
        if cur == prev:
            qs.append(qs[-1])
        else:
            qs.append(math.lcm((2 * cur + 1) * (2 * prev + 1), qs[-1]))
    return qs


def p_sequence(types: tuple[int, ...]) -> list[int]:
    """p_j = q_j / (2 v_j + 1); integral by construction."""
    return [qj // (2 * v + 1) for qj, v in zip(q_sequence(types), types)]


def _runs(vlist: tuple[int, ...]) -> list[tuple[int, int]]:
    """(value, first index) of each maximal run of equal consecutive entries."""
    out = []
    for i, v in enumerate(vlist):
        if not out or out[-1][0] != v:
            out.append((v, i + 1))
    return out


def q_closed_form(vlist: tuple[int, ...]) -> int:
    """q as one lcm over the distinct-run products of the vertex list."""
    runs = [v for v, _ in _runs(vlist)]
    terms = [(2 * runs[0] + 1) ** 2]
    for a, b in zip(runs, runs[1:]):
        terms.append((2 * a + 1) * (2 * b + 1))
    return math.lcm(*terms)


@dataclass(frozen=True)
class LatticeLe:
    """The translation lattice of a polygon class, unscaled.

    Generators: L = Lu * (1, 1) and gen2 = (L - w_{v1,v1}) / 2 with
    Lu = q / (2 v_1 + 1); gen2 is integral because q / (2 v_1 + 1)^2 is odd.
    Co-volume (number of congruence classes) is q.
    """

    e: int
    cls: PolygonClass
    q: int
    q_seq: tuple[int, ...]
    p_seq: tuple[int, ...]

    @property
    def w1(self) -> int:
        return 2 * self.cls.v1 + 1

    @property
    def lu(self) -> int:
        return self.q // self.w1

    @property
    def L(self) -> tuple[int, int]:
        return (self.lu, self.lu)

    @property
    def gen2(self) -> tuple[int, int]:
        return ((self.lu - self.w1) // 2, (self.lu + self.w1) // 2)

    @property
    def covolume(self) -> int:
        return self.q

    def lu_at(self, j: int) -> int:
        """q_j / (2 v_1 + 1): the strip period of the level-j cylinder lattice."""
        return self.q_seq[j - 1] // self.w1


def lattice_for_class(cls: PolygonClass) -> LatticeLe:
    """Build the lattice data of a class; the recursion is cross-checked
    against the closed-form lcm and the stationarity from index k on."""
    types = cls.quarter_turn_types()
    qs = q_sequence(types)
    ps = p_sequence(types)
    q = qs[-1]
    if q != q_closed_form(cls.vlist):
        raise RuntimeError(f"q recursion and closed form disagree for e={cls.e}")
    if any(qj != q for qj in qs[cls.k - 1 :]):
        raise RuntimeError(f"q_j not stationary from k on for e={cls.e}")
    w1 = 2 * cls.v1 + 1
    if (q // w1**2) % 2 != 1:
        raise RuntimeError(f"q/(2v1+1)^2 is even for e={cls.e}")
    return LatticeLe(e=cls.e, cls=cls, q=q, q_seq=tuple(qs), p_seq=tuple(ps))


def class_label(lat: LatticeLe, z: LatticePoint, j: int | None = None) -> tuple[int, int]:
    """Canonical congruence label of z modulo the (level-j cylinder) lattice.

    Normalises x - y into [0, 2 v_1 + 1) with the skew generator, then takes
    x modulo the strip period; the label space has exactly q_j elements.
    """
    w1 = lat.w1
    lu = lat.lu if j is None else lat.lu_at(j)
    g2x = (lu - w1) // 2
    x, y = z
    u = x - y
    r = u % w1
    c = (u - r) // w1
    return (r, (x + c * g2x) % lu)


def coprimality_condition(cls: PolygonClass) -> bool:
    """2 v_1 + 1 or 2 v_k + 1 is coprime to 2 v_j + 1 for all other types."""
    for vi in (cls.v1, cls.vk):
        if all(
            math.gcd(2 * vi + 1, 2 * vj + 1) == 1
            for vj in cls.vlist
            if vj != vi
        ):
            return True
    return False


def weak_coprimality_condition(cls: PolygonClass) -> bool:
    """The weaker sufficient condition: gcd(2 v_{iota(l)} + 1, p_{iota(l-1)}) = 1,
    with iota indexing the distinct runs of the vertex list."""
    runs = _runs(cls.vlist)
    if len(runs) < 2:
        return True
    ps = p_sequence(cls.quarter_turn_types())
    v_last, _ = runs[-1]
    _, idx_prev = runs[-2]
    return math.gcd(2 * v_last + 1, ps[idx_prev - 1]) == 1


def limit_density(e: int) -> Fraction:
    """1 / ((2 floor(sqrt(e)) + 1)(2 floor(sqrt(e/2)) + 1))."""
    vk = math.isqrt(e)
    v1 = math.isqrt(e // 2)
    return Fraction(1, (2 * vk + 1) * (2 * v1 + 1))


def is_symmetric_minimal_code(code: OrbitCode, cls: PolygonClass) -> bool:
    """Code characterisation of symmetric fixed points of the return map:
    sigma_-1 = sigma_1 and 2 sigma_k = floor(sqrt(e)) mod 2 floor(sqrt(e)) + 1."""
    s = math.isqrt(cls.e)
    if code.sigma_minus1 != code.sigma[0]:
        return False
    return (2 * code.sigma[cls.k - 1] - s) % (2 * s + 1) == 0


def phi_strip(lam: Lambda, cls: PolygonClass, z: LatticePoint) -> LatticePoint:
    """Return map via the strip route: one F step, strip transits to the last
    vertex of the quarter-turn, one F^4 kick, then the unique box-field
    translate inside the strip.

    When F(z) is itself a transition point it counts as the strand's first
    vertex, so one fewer transit reaches the last one.  Exactness is
    confirmed by the return-domain test; on failure the brute path is used.
    """
    from .lattice_map import is_transition_point

    w1 = 2 * cls.v1 + 1
    cur = f_apply(lam, z)
    legs = 2 * cls.k - 1 - (1 if is_transition_point(lam, cur) else 0)
    for _ in range(max(legs, 0)):
        cur, _t = strip_map(lam, cur)
    x, y = f4_apply(lam, cur)
    u = x - y
    steps = ceil_div(-w1 - u, 2 * w1)
    cand = (x + steps * w1, y - steps * w1)
    if in_return_domain(lam, cand):
        return cand
    return return_map(lam, z)[0]


def is_symmetric_fixed_direct(lam: Lambda, z: LatticePoint) -> tuple[bool, bool]:
    """Direct simulation oracle: (Phi(z) = z, orbit is G-symmetric and fixed).

    Runs the brute-force return map and compares the orbit point set with its
    image under G; independent of all code/lattice machinery.
    """
    phi, orbit = return_map(lam, z)
    fixed = phi == z
    pts = set(orbit.points)
    symmetric = {(y, x) for x, y in pts} == pts
    return fixed, fixed and symmetric


@dataclass
class CodeCensus:
    """Codes per congruence class observed across a regular domain."""

    e: int
    lam: Lambda
    q: int
    classes: dict[tuple[int, int], OrbitCode] = field(default_factory=dict)
    points_per_class: dict[tuple[int, int], int] = field(default_factory=dict)
    inconsistencies: list[tuple[LatticePoint, tuple[int, int]]] = field(
        default_factory=list
    )

    @property
    def complete(self) -> bool:
        return len(self.classes) == self.q

    @property
    def n_distinct_codes(self) -> int:
        return len({c.code for c in self.classes.values()})

    @property
    def symmetric_minimal_classes(self) -> int:
        cls = self.classes
        first = next(iter(cls.values())).e if cls else self.e
        pc = vertex_list(first)
        return sum(1 for c in cls.values() if is_symmetric_minimal_code(c, pc))


@dataclass(frozen=True)
class DensityResult:
    """Densities and census of one (e, lambda) scan."""

    e: int
    lam: Lambda
    domain: RegularDomain
    lattice: LatticeLe
    census: CodeCensus
    n_points: int
    n_symmetric_minimal: int
    n_fixed: int

    @property
    def delta(self) -> Fraction:
        return Fraction(self.n_symmetric_minimal, self.n_points)

    @property
    def eta(self) -> Fraction:
        return Fraction(self.n_fixed, self.n_points)

    @property
    def predicted(self) -> Fraction:
        return limit_density(self.e)

    @property
    def expected_class_count(self) -> int:
        cls = self.lattice.cls
        return self.lattice.q // ((2 * cls.v1 + 1) * (2 * cls.vk + 1))


def density_scan(
    lam: Lambda,
    e: int,
    cls: PolygonClass | None = None,
    domain: RegularDomain | None = None,
) -> DensityResult:
    """Enumerate the regular domain of e, code every point, classify by
    congruence class, and measure the symmetric-minimal and fixed densities."""
    if cls is None:
        cls = vertex_list(e)
    lat = lattice_for_class(cls)
    if domain is None:
        domain = regular_domain(lam, e, cls)
    census = CodeCensus(e=e, lam=lam, q=lat.q)
    n_sym = 0
    n_fixed = 0
    for z in domain.points:
        code = orbit_code(lam, z, cls)
        label = class_label(lat, z)
        prev = census.classes.get(label)
        if prev is None:
            census.classes[label] = code
            census.points_per_class[label] = 1
        else:
            census.points_per_class[label] += 1
            if prev.code != code.code:
                census.inconsistencies.append((z, label))
        if is_symmetric_minimal_code(code, cls):
            n_sym += 1
        if phi_strip(lam, cls, z) == z:
            n_fixed += 1
    if not domain.points:
        raise EmptyDomainError(f"regular domain of e={e} is empty at lambda={lam}")
    return DensityResult(
        e=e,
        lam=lam,
        domain=domain,
        lattice=lat,
        census=census,
        n_points=len(domain.points),
        n_symmetric_minimal=n_sym,
        n_fixed=n_fixed,
    )


def count_codes(lam: Lambda, e: int) -> int:
    """Number of distinct orbit codes across the regular domain; equals q
    once every congruence class is populated."""
    return density_scan(lam, e).census.n_distinct_codes


@dataclass(frozen=True)
class TheoremAReport:
    """Outcome of an exact equivariance check on one class."""

    e: int
    lam: Lambda
    n_points: int
    n_classes: int
    pairs_checked: int
    violations: list[tuple[LatticePoint, LatticePoint]]

    @property
    def passed(self) -> bool:
        return not self.violations and self.pairs_checked > 0


def verify_theorem_A(
    lam: Lambda,
    e: int,
    cls: PolygonClass | None = None,
    phi=None,
) -> TheoremAReport:
    """Check Phi(z + l) = Phi(z) + l (mod w_{v1,v1}) for every congruent pair
    z, z + l in the regular domain; the lattice translate l runs over all
    differences realised within each congruence class.

    phi may be replaced (e.g. by a deliberately corrupted map) to validate
    that the harness detects violations.
    """
    if cls is None:
        cls = vertex_list(e)
    lat = lattice_for_class(cls)
    domain = regular_domain(lam, e, cls)
    if phi is None:
        phi = lambda z: phi_strip(lam, cls, z)  # noqa: E731
    groups: dict[tuple[int, int], list[LatticePoint]] = {}
    for z in domain.points:
        groups.setdefault(class_label(lat, z), []).append(z)
    w1 = lat.w1
    pairs = 0
    violations = []
    for members in groups.values():
        if len(members) < 2:
            continue
        ref = members[0]
        phi_ref = phi(ref)
        for z in members[1:]:
            pairs += 1
            px, py = phi(z)
            dx = px - phi_ref[0] - (z[0] - ref[0])
            dy = py - phi_ref[1] - (z[1] - ref[1])
            if dx != -dy or dx % w1 != 0:
                violations.append((ref, z))
    if pairs == 0:
        raise InsufficientPopulationError(
            f"no congruent pair in the regular domain of e={e} at lambda={lam}"
        )
    return TheoremAReport(
        e=e,
        lam=lam,
        n_points=len(domain.points),
        n_classes=len(groups),
        pairs_checked=pairs,
        violations=violations,
    )
