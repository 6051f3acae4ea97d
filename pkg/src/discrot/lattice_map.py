"""
The dynamical core: the invertible lattice map

    F : Z^2 -> Z^2,   F(x, y) = (floor(lambda * x) - y, x),

its inverse, reversors, fourth iterates, and the discrete/auxiliary vector
fields that control the near-integrable regime.

Points are stored unscaled as integer pairs; the scaled point on the lattice
(lambda Z)^2 is lambda * (x, y).  With lambda = p/q all scaled comparisons are
cross-multiplied, so there is no floating point anywhere in this module.

Key objects:

    v(z) = F^4(z) - z            discrete field (deviation of F^4 from Id)
    w_{m,n} = (2n+1, -(2m+1))    auxiliary field, constant on each unit box
    B_{m,n}                      box of points with floor(coords) = (m, n)
    Lambda                       transition points: box(F^4 z) != box(z)
    Sigma                        corner subset of Lambda next to Z^2 points

All functions are pure; orbit sweeps over seed sets may be parallelised
freely by the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import ceil_div, floor_div

__all__ = [
    "Lambda",
    "CapExceeded",
    "f_apply",
    "f_inverse",
    "f_iterate",
    "f4_apply",
    "f4_inverse",
    "reversor_g",
    "reversor_h",
    "fixes_h",
    "in_h_segment",
    "box_of",
    "w_at_box",
    "w_field",
    "w_of_lattice",
    "v_field",
    "box_labels",
    "is_transition_point",
    "transition_image_box",
    "in_sigma",
    "orbit_period",
    "normalised_period",
    "sweep_periods",
    "measure_mu1",
]

LatticePoint = tuple[int, int]
FieldVector = tuple[int, int]


class CapExceeded(RuntimeError):
    """An orbit failed to close (or to reach a target set) within the cap."""


@dataclass(frozen=True)
class Lambda:
    """The map parameter lambda = p/q, held exactly.

    Restricted to rationals in (0, 2): desk verification only needs lambda = 1/N
    and small fractions, and rational lambda keeps every comparison exact.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q <= 0 or self.p <= 0:
            raise ValueError("lambda must be a positive rational p/q")
        g = math.gcd(self.p, self.q)
        object.__setattr__(self, "p", self.p // g)
        object.__setattr__(self, "q", self.q // g)
        if not 0 < Fraction(self.p, self.q) < 2:
            raise ValueError("lambda must lie in (0, 2)")

    @classmethod
    def parse(cls, text: str) -> "Lambda":
        """Accepts 'p/q', a bare integer-free decimal-free fraction, or '2^-k'."""
        text = text.strip()
        if "^" in text:
            base, exp = text.split("^")
            if base.strip() != "2":
                raise ValueError(f"cannot parse lambda {text!r}")
            k = int(exp)
            if k >= 0:
                raise ValueError("lambda = 2^k needs k < 0")
            return cls(1, 2 ** (-k))
        if "/" in text:
            num, den = text.split("/")
            return cls(int(num), int(den))
        raise ValueError(f"cannot parse lambda {text!r} (use p/q or 2^-k)")

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    @staticmethod
    def lambda_m(m: int) -> Fraction:
        """Critical parameter 1/(6(m+1)) below which the strip X meets B_{m,m}."""
        return Fraction(1, 6 * (m + 1))

    def small_enough(self, m: int) -> bool:
        """lambda < lambda_m = 1/(6(m+1))."""
        return self.value < self.lambda_m(m)

    def rotation_number_approx(self) -> float:
        """nu with lambda = 2 cos(2 pi nu); tends to 1/4 as lambda -> 0."""
        return math.acos(self.p / (2 * self.q)) / (2 * math.pi)

    def t_star_approx(self) -> float:
        """First-order recurrence time pi/lambda + O(1) of the rotation."""
        return math.pi * self.q / self.p

    def floor_scaled(self, n: int) -> int:
        """floor(lambda * n), exactly."""
        return (self.p * n) // self.q

    def ceil_scaled(self, n: int) -> int:
        """ceil(lambda * n), exactly."""
        return -((-self.p * n) // self.q)

    def floor_inv_scaled(self, c: int) -> int:
        """floor(c / lambda), exactly."""
        return (c * self.q) // self.p

    def ceil_inv_scaled(self, c: int) -> int:
        """ceil(c / lambda), exactly."""
        return -((-c * self.q) // self.p)


def f_apply(lam: Lambda, z: LatticePoint) -> LatticePoint:
    """One step of the discretised rotation."""
    x, y = z
    return ((lam.p * x) // lam.q - y, x)


def f_inverse(lam: Lambda, z: LatticePoint) -> LatticePoint:
    """Exact inverse; equals G o F o G with G(x,y) = (y,x)."""
    x, y = z
    return (y, (lam.p * y) // lam.q - x)


def f_iterate(lam: Lambda, z: LatticePoint, n: int) -> LatticePoint:
    """F^n(z) for any integer n (negative n uses the inverse)."""
    step = f_apply if n >= 0 else f_inverse
    for _ in range(abs(n)):
        z = step(lam, z)
    return z


def f4_apply(lam: Lambda, z: LatticePoint) -> LatticePoint:
    """F^4(z), the near-identity return composition."""
    p, q = lam.p, lam.q
    x, y = z
    for _ in range(4):
        x, y = (p * x) // q - y, x
    return (x, y)


def f4_inverse(lam: Lambda, z: LatticePoint) -> LatticePoint:
    p, q = lam.p, lam.q
    x, y = z
    for _ in range(4):
        x, y = y, (p * y) // q - x
    return (x, y)


def reversor_g(z: LatticePoint) -> LatticePoint:
    """G(x,y) = (y,x); conjugates F to its inverse."""
    return (z[1], z[0])


def reversor_h(lam: Lambda, z: LatticePoint) -> LatticePoint:
    """H(x,y) = (floor(lambda y) - x, y); H^2 = Id and F = H o G."""
    x, y = z
    return ((lam.p * y) // lam.q - x, y)


def fixes_h(lam: Lambda, z: LatticePoint) -> bool:
    """Fix H is the set 2x = floor(lambda y)."""
    x, y = z
    return 2 * x == (lam.p * y) // lam.q


def in_h_segment(lam: Lambda, z: LatticePoint, e: int) -> bool:
    """Membership in the Fix H segment relevant to the polygon class of e.

    For even floor(sqrt(e)) the segment is 2x = floor(lambda y) = floor(sqrt(e))
    in the upper half-plane; for odd floor(sqrt(e)) it is
    2x = floor(lambda y) = -(floor(sqrt(e)) + 1) in the lower half-plane.
    """
    s = math.isqrt(e)
    target = s if s % 2 == 0 else -(s + 1)
    x, y = z
    return (lam.p * y) // lam.q == target and 2 * x == target


def box_of(lam: Lambda, z: LatticePoint) -> tuple[int, int]:
    """Box index (floor(lambda x), floor(lambda y)) of the scaled point."""
    return ((lam.p * z[0]) // lam.q, (lam.p * z[1]) // lam.q)


def w_at_box(m: int, n: int) -> FieldVector:
    """Auxiliary field on B_{m,n}, unscaled: w_{m,n} = (2n+1, -(2m+1))."""
    return (2 * n + 1, -(2 * m + 1))


def w_field(point: tuple[Fraction, Fraction]) -> FieldVector:
    """Auxiliary field at a plane point (already in scaled coordinates)."""
    x, y = point
    return (2 * math.floor(y) + 1, -(2 * math.floor(x) + 1))


def w_of_lattice(lam: Lambda, z: LatticePoint) -> FieldVector:
    """w evaluated at the scaled lattice point lambda*z, unscaled."""
    m, n = box_of(lam, z)
    return (2 * n + 1, -(2 * m + 1))


def v_field(lam: Lambda, z: LatticePoint) -> FieldVector:
    """Discrete field v(z) = F^4(z) - z, unscaled."""
    x4, y4 = f4_apply(lam, z)
    return (x4 - z[0], y4 - z[1])


def box_labels(lam: Lambda, z: LatticePoint) -> tuple[int, int, int, int]:
    """The box labels (a, b, c, d) of the four iterates of z.

    With z in B_{m,n}:
        a + 1 = ceil(lambda (y - m))        (second iterate column)
        b + 1 = ceil(lambda (x + a + 1))    (third iterate column)
        c     = floor(lambda (y - m - b - 1))
        d     = floor(lambda (x + a + c + 1))
    and v(z) = (a + c + 1, -(m + b + 1)); z is a transition point iff
    (d, c) != (m, n).
    """
    p, q = lam.p, lam.q
    x, y = z
    m = (p * x) // q
    a = ceil_div(p * (y - m), q) - 1
    b = ceil_div(p * (x + a + 1), q) - 1
    c = floor_div(p * (y - m - b - 1), q)
    d = floor_div(p * (x + a + c + 1), q)
    return a, b, c, d


def is_transition_point(lam: Lambda, z: LatticePoint) -> bool:
    """z is a transition point iff F^4 moves it to a different box."""
    p, q = lam.p, lam.q
    x, y = z
    x4, y4 = x, y
    for _ in range(4):
        x4, y4 = (p * x4) // q - y4, x4
    return (p * x4) // q != (p * x) // q or (p * y4) // q != (p * y) // q


def transition_image_box(lam: Lambda, z: LatticePoint) -> tuple[int, int] | None:
    """For z in Lambda_{m,n}, the index (m, n) = box(F^4 z); None off Lambda."""
    target = box_of(lam, f4_apply(lam, z))
    return target if target != box_of(lam, z) else None


def in_sigma(lam: Lambda, z: LatticePoint) -> bool:
    """Membership in Sigma: a transition point within the corner window

        ||lambda z - (m, n)||_inf <= lambda (||(2m+1, 2n+1)||_inf + 2)

    for some integer pair (m, n).  Only the corners of the box of z can
    satisfy the inequality, so four candidates suffice.
    """
    if not is_transition_point(lam, z):
        return False
    p, q = lam.p, lam.q
    x, y = z
    mx = (p * x) // q
    ny = (p * y) // q
    for m in (mx, mx + 1):
        for n in (ny, ny + 1):
            bound = p * (max(abs(2 * m + 1), abs(2 * n + 1)) + 2)
            if abs(p * x - m * q) <= bound and abs(p * y - n * q) <= bound:
                return True
    return False


def orbit_period(lam: Lambda, z: LatticePoint, cap: int = 10**8) -> int:
    """Minimal period of z under F by forward iteration to first return.

    Valid because F is invertible, so every orbit is a simple cycle.  Raises
    CapExceeded at the cap; that signals the cap only, never unboundedness.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    p, q = lam.p, lam.q
    x0, y0 = z
    x, y = (p * x0) // q - y0, x0
    t = 1
    while (x, y) != (x0, y0):
        if t >= cap:
            raise CapExceeded(f"orbit of {z} open after {cap} iterations")
        x, y = (p * x) // q - y, x
        t += 1
    return t


def normalised_period(lam: Lambda, z: LatticePoint, cap: int = 10**8) -> float:
    """T_lambda(z) = (lambda/pi) T(z); clusters near positive integers."""
    return orbit_period(lam, z, cap) * lam.p / (lam.q * math.pi)


def sweep_periods(
    lam: Lambda, bound: int, cap: int = 10**8
) -> dict[LatticePoint, int]:
    """Minimal periods for every seed with |x|, |y| <= bound.

    Orbits partition the lattice, so each cycle is traversed once: a seed
    already seen on an earlier orbit is skipped.  Returns {orbit
    representative: period}.
    """
    p, q = lam.p, lam.q
    seen: set[LatticePoint] = set()
    periods: dict[LatticePoint, int] = {}
    for x0 in range(-bound, bound + 1):
        for y0 in range(-bound, bound + 1):
            if (x0, y0) in seen:
                continue
            x, y = x0, y0
            t = 0
            while True:
                seen.add((x, y))
                x, y = (p * x) // q - y, x
                t += 1
                if (x, y) == (x0, y0):
                    break
                if t >= cap:
                    raise CapExceeded(f"orbit of {(x0, y0)} open after {cap} steps")
            periods[(x0, y0)] = t
    return periods


def measure_mu1(lam: Lambda, r: Fraction | int) -> Fraction:
    """mu_1(r, lambda): fraction of z in A(r, lambda) with v(z) = w(z).

    A(r, lambda) is the square ||lambda z||_inf < r (strict, as defined).
    """
    p, q = lam.p, lam.q
    r = Fraction(r)
    # |x| <= bound <=> |lambda x| < r for integer x.
    bound = ceil_div(r.numerator * q, r.denominator * p) - 1
    good = 0
    total = 0
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            m = (p * x) // q
            n = (p * y) // q
            x4, y4 = x, y
            for _ in range(4):
                x4, y4 = (p * x4) // q - y4, x4
            total += 1
            if (x4 - x, y4 - y) == (2 * n + 1, -(2 * m + 1)):
                good += 1
    return Fraction(good, total)
