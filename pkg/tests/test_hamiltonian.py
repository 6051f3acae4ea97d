import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from discrot.arith import critical_numbers_up_to, floor_sqrt, r_two_squares
from discrot.hamiltonian import (
    CriticalValueError,
    critical_circle_intersection,
    first_octant_vertices,
    hamiltonian_value,
    p_affine,
    p_inverse,
    sides_count,
    trace_polygon,
    vertex_list,
)


def test_p_affine_examples():
    assert p_affine(0) == 0
    for n in range(-6, 7):
        assert p_affine(n) == n * n
    assert p_affine(Fraction(3, 2)) == Fraction(5, 2)
    # even function
    for num in range(-40, 40):
        x = Fraction(num, 7)
        assert p_affine(-x) == p_affine(x)


def test_p_inverse_examples():
    assert p_inverse(0) == 0
    assert p_inverse(Fraction(5, 2)) == Fraction(3, 2)
    with pytest.raises(ValueError):
        p_inverse(-1)


@given(st.fractions(min_value=0, max_value=1000))
def test_p_inverse_is_inverse(x):
    assert p_inverse(p_affine(x)) == x
    assert p_inverse(p_affine(-x)) == x


def test_hamiltonian_value_examples():
    assert hamiltonian_value((Fraction(0), Fraction(0))) == 0
    assert hamiltonian_value((Fraction(2), Fraction(2))) == 8
    assert hamiltonian_value((Fraction(3, 2), Fraction(1, 2))) == 3
    # coincides with x^2 + y^2 on the integer lattice
    for x in range(-5, 6):
        for y in range(-5, 6):
            assert hamiltonian_value((Fraction(x), Fraction(y))) == x * x + y * y


def test_trace_polygon_basic():
    poly = trace_polygon(Fraction(19, 2))
    assert poly.sides == 28
    assert all(hamiltonian_value(v) == Fraction(19, 2) for v in poly.vertices)


def test_trace_polygon_rejects_critical_in_canonical_mode():
    with pytest.raises(CriticalValueError):
        trace_polygon(9)
    trace_polygon(3)  # 3 is not a sum of two squares: fine canonically


def test_trace_polygon_tolerant_counts():
    # true counts: the side formula minus 4 at perfect squares, where the
    # level set is tangent to the extreme lines x = +-sqrt(e), y = +-sqrt(e)
    for e, expected in ((2, 8), (9, 20), (5, 12), (25, 28)):
        assert trace_polygon(e, tolerant=True).sides == expected


def test_polygon_dihedral_symmetry():
    for a in (Fraction(19, 2), Fraction(7, 3), Fraction(15)):
        poly = trace_polygon(a)
        pts = set(poly.vertices)
        assert {(y, x) for x, y in pts} == pts
        assert {(x, -y) for x, y in pts} == pts


def test_polygon_convexity_clockwise():
    for a in (Fraction(19, 2), Fraction(23, 5), Fraction(101, 7)):
        verts = trace_polygon(a).vertices
        n = len(verts)
        for i in range(n):
            ax, ay = verts[i]
            bx, by = verts[(i + 1) % n]
            cx, cy = verts[(i + 2) % n]
            cross = (bx - ax) * (cy - by) - (by - ay) * (cx - bx)
            assert cross < 0  # consistently clockwise


def test_variation_of_circle_hamiltonian_along_polygon():
    # total variation of x^2 + y^2 along a level set of H is at most 1/2
    for a in (Fraction(19, 2), Fraction(23, 5), Fraction(77, 6)):
        verts = trace_polygon(a).vertices
        qvals = [x * x + y * y for x, y in verts]
        assert max(qvals) - min(qvals) <= Fraction(1, 2)


def test_sides_count_examples():
    assert sides_count(Fraction(19, 2)) == 28
    assert sides_count(2) == 8
    assert sides_count(9) == 24  # the formula value at a critical number


def test_sides_count_matches_trace_on_noncritical_values():
    rng = random.Random(11)
    done = 0
    while done < 60:
        a = Fraction(rng.randint(1, 700), rng.randint(1, 7))
        if a <= 0 or (a.denominator == 1 and r_two_squares(int(a)) > 0):
            continue
        assert trace_polygon(a).sides == sides_count(a), a
        done += 1


def test_vertex_list_table():
    table = {
        9: (2, 2, 0, 3),
        10: (2, 1, 3, 3),
        18: (3, 3, 1, 4, 4),
        29: (3, 4, 2, 5, 5, 5),
        49: (4, 5, 3, 6, 6, 6, 0, 7),
        52: (5, 4, 6, 6, 6, 1, 7, 7),
    }
    for e, expected in table.items():
        assert vertex_list(e).vlist == expected


def test_vertex_list_structure_small():
    for e in critical_numbers_up_to(300):
        cls = vertex_list(e)
        assert cls.k == math.isqrt(e) + 1
        assert cls.v1 == floor_sqrt(Fraction(e, 2))
        assert cls.vk == math.isqrt(e)
        assert cls.interval[0] == e


def test_vertex_list_interleaved_monotonicity():
    # types at horizontal-wall vertices are non-decreasing, at vertical-wall
    # vertices non-increasing, along the first octant
    for e in critical_numbers_up_to(200):
        if e == 0:
            continue
        cls = vertex_list(e)
        mid = cls.midpoint_value()
        horiz, vert = [], []
        for (x, y), axis in first_octant_vertices(mid):
            if axis == "y":
                horiz.append(math.floor(abs(x)))
            else:
                vert.append(math.floor(abs(y)))
        assert horiz == sorted(horiz)
        assert vert == sorted(vert, reverse=True)


def test_quarter_turn_symmetry():
    cls = vertex_list(9)
    assert cls.quarter_turn_types() == (2, 2, 0, 3, 0, 2, 2)


def test_vertex_list_rejects_noncritical():
    with pytest.raises(ValueError):
        vertex_list(3)


def test_critical_circle_intersection():
    assert critical_circle_intersection(1) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    pts9 = critical_circle_intersection(9)
    assert len(pts9) == r_two_squares(9) == 4
    for e in (1, 2, 4, 5, 8, 9, 10, 13):
        pts = critical_circle_intersection(e)
        assert len(pts) == r_two_squares(e)
        for x, y in pts:
            assert hamiltonian_value((Fraction(x), Fraction(y))) == e
