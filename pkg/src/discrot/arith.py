"""
Exact integer/rational arithmetic and the sums-of-two-squares substrate.

Everything downstream rests on four ingredients:

    floor_div(a, b)        exact floor division toward -infinity
    r_two_squares(n)       r(n) = #{(x,y) in Z^2 : x^2 + y^2 = n}
    is_critical(n)         n is a sum of two squares (Fermat-Euler test)
    critical_numbers_up_to enumeration of the critical set
                           E = {0, 1, 2, 4, 5, 8, 9, 10, 13, 16, 17, ...}

r(n) comes from the classical product formula: factor n = 2^a * prod p^b *
prod q^c with p = 1 (mod 4) and q = 3 (mod 4), then

    r(n) = 4 * prod (b + 1) * prod (1 + (-1)^c) / 2,

which vanishes unless every q-exponent c is even.  We set r(0) = 1 (the single
representation (0,0)); the product formula is stated for n >= 1.

The asymptotic count E(x) = #{e in E : e <= x} satisfies the Landau-Ramanujan
law  E(x) * sqrt(ln x) / x -> K = 0.7642...
"""

from __future__ import annotations

import math
from fractions import Fraction

# Exact rationals are stdlib fractions: always reduced, positive denominator.
Rational = Fraction

#: Landau-Ramanujan constant, truncated well past any tolerance used here.
LANDAU_RAMANUJAN_K = 0.76422365358922066

__all__ = [
    "Rational",
    "LANDAU_RAMANUJAN_K",
    "floor_div",
    "ceil_div",
    "floor_sqrt",
    "factorize",
    "r_two_squares",
    "r_two_squares_brute",
    "is_critical",
    "two_squares_sieve",
    "critical_numbers_up_to",
    "critical_count_up_to",
    "next_critical",
    "critical_interval",
    "landau_ramanujan_ratio",
]


def floor_div(a: int, b: int) -> int:
    """Floor of a/b, rounding toward -infinity (not truncation).

    floor_div(-7, 2) = -4 while int(-7/2) would truncate to -3.
    """
    if b == 0:
        raise ZeroDivisionError("floor_div by zero")
    return a // b if b > 0 else (-a) // (-b)


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b; identity ceil(a/b) = -floor(-a/b)."""
    return -floor_div(-a, b)


def floor_sqrt(a: int | Fraction) -> int:
    """Exact floor of sqrt(a) for a non-negative integer or rational.

    For rationals, floor(sqrt(a)) = isqrt(floor(a)): n^2 <= a < (n+1)^2 is
    decided by the integer part alone because the bounds are integers.
    """
    if a < 0:
        raise ValueError("floor_sqrt of negative value")
    return math.isqrt(int(a)) if not isinstance(a, int) else math.isqrt(a)


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division up to sqrt(n); fine at desk scale."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def r_two_squares(n: int) -> int:
    """Number of representations of n as an ordered sum of two squares.

    r(1) = 4 counts (1,0), (-1,0), (0,1), (0,-1).  r(0) = 1 by convention.
    """
    if n < 0:
        raise ValueError("r_two_squares expects n >= 0")
    if n == 0:
        return 1
    r = 4
    for p, c in factorize(n).items():
        if p == 2:
            continue
        if p % 4 == 1:
            r *= c + 1
        elif c % 2 == 1:
            return 0
    return r


def r_two_squares_brute(n: int) -> int:
    """Brute-force representation count; the independent oracle for r(n)."""
    if n < 0:
        raise ValueError("r_two_squares_brute expects n >= 0")
    count = 0
    for x in range(-math.isqrt(n), math.isqrt(n) + 1):
        y2 = n - x * x
        y = math.isqrt(y2)
        if y * y == y2:
            count += 2 if y > 0 else 1
    return count


def is_critical(n: int) -> bool:
    """Fermat-Euler test: every prime = 3 (mod 4) divides n to an even power."""
    if n < 0:
        raise ValueError("is_critical expects n >= 0")
    if n == 0:
        return True
    for p, c in factorize(n).items():
        if p % 4 == 3 and c % 2 == 1:
            return False
    return True


def two_squares_sieve(x: int) -> bytearray:
    """Indicator table t with t[n] = 1 iff n <= x is a sum of two squares.

    Marks x0^2 + y0^2 directly: O(x) lattice marks, O(x) memory.  Preferred
    over per-n factorisation for dense scans.
    """
    if x < 0:
        raise ValueError("two_squares_sieve expects x >= 0")
    table = bytearray(x + 1)
    a = 0
    while a * a <= x:
        aa = a * a
        b = a
        while aa + b * b <= x:
            table[aa + b * b] = 1
            b += 1
        a += 1
    return table


def critical_numbers_up_to(x: int) -> list[int]:
    """Ascending list of all critical numbers e <= x."""
    table = two_squares_sieve(x)
    return [n for n in range(x + 1) if table[n]]


def critical_count_up_to(x: int) -> int:
    """E(x) = #{e in E : e <= x}, without materialising the list."""
    return sum(two_squares_sieve(x))


def next_critical(e: int) -> int:
    """Successor of the critical number e in E (gap is at most 4 below 10^8)."""
    if not is_critical(e):
        raise ValueError(f"{e} is not a critical number")
    n = e + 1
    while not is_critical(n):
        n += 1
    return n


def critical_interval(e: int) -> tuple[int, int]:
    """The open interval (e, e') between consecutive critical numbers."""
    return e, next_critical(e)


def landau_ramanujan_ratio(x: int) -> float:
    """E(x) * sqrt(ln x) / x, to be compared against K = 0.764..."""
    if x < 2:
        raise ValueError("landau_ramanujan_ratio expects x >= 2")
    return critical_count_up_to(x) * math.sqrt(math.log(x)) / x
