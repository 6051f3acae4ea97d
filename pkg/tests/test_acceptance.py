"""Acceptance suite: one test per criterion, each printing its measured
outcome and asserting the stated tolerance within the stated runtime."""

import math
import random
import time
from fractions import Fraction

import pytest

from discrot.arith import (
    LANDAU_RAMANUJAN_K,
    critical_numbers_up_to,
    floor_sqrt,
    landau_ramanujan_ratio,
    r_two_squares,
    r_two_squares_brute,
)
from discrot.hamiltonian import hamiltonian_value, vertex_list
from discrot.lattice_map import (
    Lambda,
    f4_apply,
    is_transition_point,
    normalised_period,
    sweep_periods,
)
from discrot.return_dynamics import (
    EmptyDomainError,
    hausdorff_shadowing,
    orbit_code,
    regular_domain,
    strip_map,
)
from discrot.theory import (
    class_label,
    coprimality_condition,
    count_codes,
    density_scan,
    is_symmetric_fixed_direct,
    is_symmetric_minimal_code,
    lattice_for_class,
    limit_density,
    verify_theorem_A,
)

VERTEX_TABLE = {
    9: (2, 2, 0, 3),
    10: (2, 1, 3, 3),
    18: (3, 3, 1, 4, 4),
    29: (3, 4, 2, 5, 5, 5),
    49: (4, 5, 3, 6, 6, 6, 0, 7),
    52: (5, 4, 6, 6, 6, 1, 7, 7),
}


def _report(criterion: str, ok: bool, detail: str, elapsed: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {criterion}] {status} ({elapsed:.1f}s): {detail}")


def test_criterion_01_vertex_list_table():
    t0 = time.time()
    observed = {e: vertex_list(e).vlist for e in VERTEX_TABLE}
    elapsed = time.time() - t0
    ok = observed == VERTEX_TABLE and elapsed < 1.0
    _report("1", ok, f"vertex lists {observed}", elapsed)
    assert observed == VERTEX_TABLE
    assert elapsed < 1.0


def test_criterion_02_structural_identities():
    t0 = time.time()
    bad = []
    for e in critical_numbers_up_to(10**4):
        cls = vertex_list(e)
        if (
            cls.k != math.isqrt(e) + 1
            or cls.v1 != floor_sqrt(Fraction(e, 2))
            or cls.vk != math.isqrt(e)
        ):
            bad.append(e)
    elapsed = time.time() - t0
    _report("2", not bad and elapsed < 30, f"classes up to 1e4, violations: {bad}", elapsed)
    assert not bad
    assert elapsed < 30


def test_criterion_03_r_oracle_equivalence():
    t0 = time.time()
    bad = [n for n in range(10**4 + 1) if r_two_squares(n) != r_two_squares_brute(n)]
    elapsed = time.time() - t0
    _report("3", not bad and elapsed < 10, f"n <= 1e4, mismatches: {bad[:5]}", elapsed)
    assert not bad
    assert elapsed < 10


def test_criterion_04_landau_ramanujan():
    t0 = time.time()
    ratio = landau_ramanujan_ratio(10**6)
    elapsed = time.time() - t0
    ok = abs(ratio - LANDAU_RAMANUJAN_K) <= 0.1 * LANDAU_RAMANUJAN_K and elapsed < 30
    _report("4", ok, f"E(1e6) sqrt(ln 1e6)/1e6 = {ratio:.4f} vs K = 0.7642", elapsed)
    assert abs(ratio - LANDAU_RAMANUJAN_K) <= 0.1 * LANDAU_RAMANUJAN_K
    assert elapsed < 30


def _brute_strip(lam, z):
    cur = z
    t = 0
    while True:
        cur = f4_apply(lam, cur)
        t += 1
        if is_transition_point(lam, cur):
            return cur, t


def test_criterion_05_strip_map_oracle():
    t0 = time.time()
    rng = random.Random(1234)
    mismatches = 0
    total = 0
    for lam in (Lambda(1, 100), Lambda(1, 997)):
        scale = lam.q // lam.p
        n = 0
        while n < 10**4:
            z = (rng.randint(-8 * scale, 8 * scale), rng.randint(-8 * scale, 8 * scale))
            if z == (0, 0):
                continue
            n += 1
            total += 1
            if strip_map(lam, z) != _brute_strip(lam, z):
                mismatches += 1
    elapsed = time.time() - t0
    ok = mismatches == 0 and elapsed < 30
    _report("5", ok, f"{total} random points, mismatches = {mismatches}", elapsed)
    assert mismatches == 0
    assert elapsed < 30


def test_criterion_06_theorem_A():
    t0 = time.time()
    lam = Lambda(1, 500)
    results = {}
    for e in (1, 2, 4, 5, 9, 10):
        rep = verify_theorem_A(lam, e)
        results[e] = (rep.pairs_checked, len(rep.violations))
    elapsed = time.time() - t0
    total_viol = sum(v for _, v in results.values())
    ok = total_viol == 0 and elapsed < 120
    _report("6", ok, f"pairs/violations per class: {results}", elapsed)
    assert total_viol == 0
    assert all(pairs > 0 for pairs, _ in results.values())
    assert elapsed < 120


# criterion 7 shares one sweep between the literal and asymptotic tests
_C7_CACHE: dict = {}


def _criterion7_sweep():
    if _C7_CACHE:
        return _C7_CACHE
    lam = Lambda(1, 1000)
    rows = {}
    for e in critical_numbers_up_to(100):
        if e == 0:
            continue
        cls = vertex_list(e)
        if not coprimality_condition(cls):
            continue
        try:
            res = density_scan(lam, e, cls)
        except (EmptyDomainError, ValueError) as exc:
            rows[e] = {"status": "empty", "error": str(exc)}
            continue
        deviation = abs(res.delta - res.predicted)
        rows[e] = {
            "status": "ok",
            "points": res.n_points,
            "delta": res.delta,
            "predicted": res.predicted,
            "C": float(deviation * 1000),
            "complete": res.census.complete,
            "sm_classes": res.census.symmetric_minimal_classes,
            "n_k": res.expected_class_count,
            "inconsistencies": len(res.census.inconsistencies),
        }
    _C7_CACHE.update(rows)
    return rows


def test_criterion_07_theorem_b_densities_as_stated():
    """The criterion verbatim: at lambda = 1/1000, every coprime e <= 100 has
    its symmetric-minimal count per fundamental domain equal to
    q/((2v1+1)(2vk+1)) and a density deviation below 10*lambda.

    Known red: e = 80 (density granularity at 104 points exceeds the bound)
    and e = 89, 97 (empty regular domains).  lambda = 1/1000 is not within
    the asymptotic regime of those classes; the same code passes all three
    at lambda = 1/4000 (see the companion test).
    """
    t0 = time.time()
    rows = _criterion7_sweep()
    failures = []
    for e, row in sorted(rows.items()):
        if row["status"] == "empty":
            failures.append((e, "empty regular domain"))
            continue
        if row["C"] >= 10:
            failures.append((e, f"C = {row['C']:.2f}"))
        if row["complete"] and row["sm_classes"] != row["n_k"]:
            failures.append((e, f"count {row['sm_classes']} != n_k {row['n_k']}"))
    assert rows[9]["predicted"] == Fraction(1, 35)
    assert rows[2]["predicted"] == Fraction(1, 9)
    elapsed = time.time() - t0
    _report("7", not failures, f"{len(rows)} coprime classes; failures: {failures}", elapsed)
    assert elapsed < 600
    assert not failures, (
        f"literal criterion fails at lambda = 1/1000 for {failures}; "
        "see the asymptotic-regime companion test and the density table"
    )


def test_criterion_07_theorem_b_densities_asymptotic_regime():
    """The attainable content of the criterion: exact per-fundamental-domain
    counts on every complete census, the C < 10 bound on every populated
    class at lambda = 1/1000, and the same bound for the three stragglers at
    lambda = 1/4000."""
    t0 = time.time()
    rows = _criterion7_sweep()
    populated = {e: r for e, r in rows.items() if r["status"] == "ok"}
    complete = {e: r for e, r in populated.items() if r["complete"]}
    # at least the small classes must populate fully at 1/1000
    assert {1, 2, 4, 5, 8, 9, 10, 13}.issubset(complete)
    for e, row in complete.items():
        assert row["sm_classes"] == row["n_k"], (e, row)
    stragglers = sorted(e for e, r in rows.items() if r["status"] == "empty")
    for e, row in populated.items():
        assert row["inconsistencies"] == 0
        if row["C"] >= 10:
            stragglers.append(e)  # outside the asymptotic regime at 1/1000
    assert rows[9]["predicted"] == Fraction(1, 35)
    assert rows[2]["predicted"] == Fraction(1, 9)
    lam4 = Lambda(1, 4000)
    extra = {}
    for e in sorted(stragglers):
        res = density_scan(lam4, e)
        c = float(abs(res.delta - res.predicted) * 4000)
        extra[e] = c
        assert c < 10, (e, c)
    elapsed = time.time() - t0
    _report(
        "7 (asymptotic)",
        True,
        f"{len(complete)} complete censuses exact; stragglers at 1/4000: {extra}",
        elapsed,
    )
    assert elapsed < 600


def test_criterion_08_symmetric_minimal_oracle():
    t0 = time.time()
    lam = Lambda(1, 500)
    cls = vertex_list(9)
    rd = regular_domain(lam, 9, cls)
    mismatches = []
    for z in rd.points:
        predicted = is_symmetric_minimal_code(orbit_code(lam, z, cls), cls)
        _fixed, direct = is_symmetric_fixed_direct(lam, z)
        if predicted != direct:
            mismatches.append(z)
    elapsed = time.time() - t0
    ok = not mismatches and elapsed < 60
    _report("8", ok, f"{len(rd.points)} points, mismatches: {mismatches[:5]}", elapsed)
    assert not mismatches
    assert elapsed < 60


def test_criterion_09_code_census_and_cylinder_sets():
    t0 = time.time()
    n9 = count_codes(Lambda(1, 500), 9)
    n2 = count_codes(Lambda(1, 200), 2)

    lam = Lambda(1, 500)
    cls = vertex_list(9)
    lat = lattice_for_class(cls)
    rd = regular_domain(lam, 9, cls)
    pts = rd.points[::3]
    codes = {z: orbit_code(lam, z, cls) for z in pts}
    cyl_bad = 0
    checked = 0
    for i, z1 in enumerate(pts):
        for z2 in pts[i + 1 : i + 20]:
            c1, c2 = codes[z1], codes[z2]
            for j in range(1, 2 * cls.k):
                checked += 1
                match = c1.prefix(j) == c2.prefix(j)
                congruent = class_label(lat, z1, j) == class_label(lat, z2, j)
                v1j, v2j = c1.vertices[j], c2.vertices[j]
                if v1j.wall_axis == v2j.wall_axis:
                    dx = v1j.point[0] - v2j.point[0]
                    dy = v1j.point[1] - v2j.point[1]
                    along, across = (dx, dy) if v1j.wall_axis == "y" else (dy, dx)
                    vertex_congruent = across == 0 and along % lat.p_seq[j - 1] == 0
                else:
                    vertex_congruent = False
                if not (match == congruent == vertex_congruent):
                    cyl_bad += 1
    elapsed = time.time() - t0
    ok = n9 == 175 and n2 == 9 and cyl_bad == 0 and elapsed < 120
    _report(
        "9",
        ok,
        f"codes(9) = {n9}, codes(2) = {n2}, cylinder triples checked = {checked}, bad = {cyl_bad}",
        elapsed,
    )
    assert n9 == 175
    assert n2 == 9
    assert cyl_bad == 0
    assert elapsed < 120


def test_criterion_10_shadowing_trend():
    t0 = time.time()
    results = {}
    for wx in (Fraction(13, 10), Fraction(27, 10)):
        w = (wx, wx)
        sq = []
        for k in range(6, 11):
            sq.append(hausdorff_shadowing(Lambda(1, 2**k), w).sq)
        ratios_sq = [a / b for a, b in zip(sq, sq[1:])]
        results[float(wx)] = [float(r) for r in ratios_sq]
        for r in ratios_sq:
            assert Fraction(169, 100) <= r <= 9, (wx, float(r))
    elapsed = time.time() - t0
    _report("10", True, f"squared halving ratios: {results}", elapsed)


def test_criterion_11_periodicity_smoke():
    """Every orbit in the 500-window closes, and normalised periods of
    diagonal seeds cluster near integers.

    The diagonal sample spans several boxes (scaled coordinate up to 6), as
    in a period-function plot; the only seeds farther than 0.5 from a
    positive integer are the handful of smallest amplitudes, whose single
    revolution along a class-0/1 diamond is intrinsically shorter than the
    recurrence time."""
    t0 = time.time()
    sweep_sizes = {}
    for q in (7, 25, 79):
        periods = sweep_periods(Lambda(1, q), 500, cap=10**8)  # raises on cap
        sweep_sizes[q] = len(periods)
    lam = Lambda.parse("2^-12")
    seeds = list(range(123, 24600, 123))
    near = 0
    for x in seeds:
        t_lambda = normalised_period(lam, (x, x), cap=10**8)
        nearest = max(1, round(t_lambda))
        if abs(t_lambda - nearest) <= 0.5:
            near += 1
    share = near / len(seeds)
    elapsed = time.time() - t0
    ok = share >= 0.95 and elapsed < 600
    _report(
        "11",
        ok,
        f"orbit sweeps closed (orbits per lambda: {sweep_sizes}); "
        f"diagonal seeds within 0.5 of an integer: {share:.3f}",
        elapsed,
    )
    assert share >= 0.95
    assert elapsed < 600
