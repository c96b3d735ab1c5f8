"""Acceptance gate: every top-level guarantee of the package, one test per
criterion, each printing a single PASS/FAIL line with its runtime.

All comparisons are exact (rational arithmetic); the runtime bounds are hard
limits asserted by the tests themselves.
"""
import math
import random
import time
from collections import Counter
from fractions import Fraction

import pytest

import perspaces as ps
from perspaces.grades import Grade, diagonal

from conftest import axis_candidates, rand_pair_leq, rand_pair_lt

G = Grade.of


CRITERION_TAGS = {
    "test_criterion_1_example_multiplicity": "criterion 1: example multiplicity",
    "test_criterion_2_stability_at_example": "criterion 2: stability at example",
    "test_criterion_3_reconstruction": "criterion 3: reconstruction 1000/1000",
    "test_criterion_4_one_parameter_equivalence": "criterion 4: 1-parameter diagram equivalence",
    "test_criterion_5_property_suites": "criterion 5: property suites",
    "test_criterion_6_at_infinity_existence": "criterion 6: at-infinity existence",
    "test_criterion_7_critical_values": "criterion 7: critical values",
    "test_criterion_8_interpolation_path": "criterion 8: interpolation path",
}


def test_criterion_1_example_multiplicity():
    """The golden two-parameter example: mu((0,0),(2,1)) = 1 in degree 0."""
    t0 = time.perf_counter()
    e1 = ps.fixtures.e1()
    assert ps.mu_proper(e1, 0, G(0, 0), G(2, 1)) == 1
    assert time.perf_counter() - t0 < 1.0


def test_criterion_2_stability_at_example():
    """sup-norm distance equals the perturbation and the Hausdorff-stability
    check passes in both directions, degrees 0 and 1."""
    t0 = time.perf_counter()
    e1 = ps.fixtures.e1()
    for eta in (Fraction(1, 4), Fraction(1, 10)):
        g = ps.fixtures.e1g(eta)
        assert ps.sup_norm_distance(e1, g) == eta
        for k in (0, 1):
            rep = ps.stability_check(e1, g, k)
            assert rep.epsilon == eta
            assert rep.ok
    assert time.perf_counter() - t0 < 5.0


def test_criterion_3_reconstruction():
    """Ray-section reconstruction equals the persistent Betti number on
    1000 random (complex, query, degree) instances, exactly."""
    t0 = time.perf_counter()
    rng = random.Random(12345)
    dirs = [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(1, 3)]
    exact = 0
    for i in range(50):
        cx = ps.random_complex(9000 + i, size=40, n=2, grid=5, max_dim=2)
        pools = axis_candidates(cx)
        for _ in range(20):
            u, v = rand_pair_lt(rng, pools)
            e = Grade(tuple(rng.choice(dirs) for _ in range(2)))
            for k in range(3):
                sec = ps.ray_section(cx, k, u, v, e)
                assert ps.reconstruct_pbn(sec) == ps.pbn(cx, k, u, v)
            exact += 1
    assert exact == 1000
    assert time.perf_counter() - t0 < 60.0


def test_criterion_4_one_parameter_equivalence():
    """For n=1 the sampled persistence space equals the classical persistence
    diagram as a multiset, per degree, on 50 random complexes."""
    t0 = time.perf_counter()
    for i in range(50):
        cx = ps.random_complex(7000 + i, size=25, n=1, grid=5, max_dim=2)
        for k in range(cx.dimension + 1):
            diagram = Counter(ps.diagram_1d(cx, k))
            sampled = Counter()
            for c in ps.sample_space(cx, k):
                death = math.inf if c.at_infinity else c.v.coords[0]
                sampled[(c.u.coords[0], death)] += c.multiplicity
            assert diagram == sampled, (i, k)
    assert time.perf_counter() - t0 < 30.0


def test_criterion_5_property_suites():
    """Exact order/positivity properties, >= 200 random queries each."""
    rng = random.Random(54321)
    complexes = [
        ps.random_complex(8000 + i, size=30, n=2, grid=4, max_dim=2)
        for i in range(5)
    ]
    fixtures = [ps.fixtures.e1(), ps.fixtures.c1()]

    # pbn monotone: non-decreasing in u, non-increasing in v
    checked = 0
    while checked < 200:
        cx = rng.choice(complexes)
        pools = axis_candidates(cx)
        u, v = rand_pair_leq(rng, pools)
        u2, _ = rand_pair_leq(rng, pools)
        k = rng.randrange(0, 3)
        mid = u.cwise_max(u2)
        if not mid.leq(v):
            continue
        assert ps.pbn(cx, k, u, v) <= ps.pbn(cx, k, mid, v)
        v2 = v.shift(Fraction(rng.randint(1, 4), 4))
        assert ps.pbn(cx, k, u, v2) <= ps.pbn(cx, k, u, v)
        checked += 1

    # jump monotonicity: u1<=u2<v1<=v2 =>
    #   pbn(u2,v1)-pbn(u1,v1) >= pbn(u2,v2)-pbn(u1,v2)
    checked = 0
    while checked < 200:
        cx = rng.choice(complexes)
        pools = axis_candidates(cx)
        u2, v1 = rand_pair_lt(rng, pools)
        u1, _ = rand_pair_leq(rng, pools)
        if not u1.leq(u2):
            continue
        v2 = v1.shift(Fraction(rng.randint(0, 4), 4))
        k = rng.randrange(0, 3)
        lhs = ps.pbn(cx, k, u2, v1) - ps.pbn(cx, k, u1, v1)
        rhs = ps.pbn(cx, k, u2, v2) - ps.pbn(cx, k, u1, v2)
        assert lhs >= rhs
        checked += 1

    # multiplicities are non-negative
    checked = 0
    while checked < 200:
        cx = rng.choice(complexes)
        pools = axis_candidates(cx)
        u, v = rand_pair_lt(rng, pools)
        k = rng.randrange(0, 3)
        assert ps.mu_proper(cx, k, u, v) >= 0
        assert ps.mu_infinity(cx, k, u) >= 0
        checked += 2

    # window-count sum is non-decreasing in the radius e
    checked = 0
    while checked < 200:
        cx = rng.choice(complexes)
        pools = axis_candidates(cx)
        u, v = rand_pair_lt(rng, pools)
        span = u.min_span(v)
        small = diagonal(2, span * Fraction(rng.randint(1, 2), 8))
        big = diagonal(2, span * Fraction(3, 8))
        k = rng.randrange(0, 3)
        assert ps.window_count_proper(cx, k, (u, v), small) <= ps.window_count_proper(
            cx, k, (u, v), big
        )
        checked += 1

    # pbn(u, u) equals the Betti number of the sublevel at u
    checked = 0
    while checked < 200:
        cx = rng.choice(complexes)
        pools = axis_candidates(cx)
        u, _ = rand_pair_leq(rng, pools)
        k = rng.randrange(0, 3)
        assert ps.pbn(cx, k, u, u) == ps.betti(cx, ps.sublevel(cx, u), k)
        checked += 1

    # identically zero above the complex dimension
    checked = 0
    while checked < 200:
        cx = rng.choice(fixtures + complexes)
        pools = axis_candidates(cx)
        u, v = rand_pair_leq(rng, pools)
        for k in range(cx.dimension + 1, cx.dimension + 4):
            assert ps.pbn(cx, k, u, v) == 0
            checked += 1


def test_criterion_6_at_infinity_existence():
    """At-infinity cornerpoints exist exactly in the degrees with nonzero
    homology of the whole complex, via one window count over a diagonal ray
    covering the full grade range."""

    def count_at_infinity(cx, k):
        grid = ps.coordinate_grid(cx)
        lo = min(v for ax in grid.axes for v in ax)
        hi = grid.m_max
        center = diagonal(cx.n, (lo + hi) / 2)
        radius = diagonal(cx.n, (hi - lo) / 2 + 1)
        return ps.window_count_infinity(cx, k, center, radius)

    e1, c1 = ps.fixtures.e1(), ps.fixtures.c1()
    assert count_at_infinity(e1, 0) >= 1
    assert count_at_infinity(e1, 1) == 0
    assert count_at_infinity(c1, 0) >= 1
    assert count_at_infinity(c1, 1) >= 1


def test_criterion_7_critical_values():
    """Every sampled cornerpoint has homological critical coordinates;
    random off-grid probes are regular values."""
    t0 = time.perf_counter()
    rng = random.Random(2468)
    complexes = [ps.fixtures.e1(), ps.fixtures.c1()] + [
        ps.random_complex(6000 + i, size=25, n=2, grid=4, max_dim=2)
        for i in range(20)
    ]
    for cx in complexes:
        for k in range(cx.dimension + 1):
            for c in ps.sample_space(cx, k):
                assert ps.check_cornerpoint_critical(cx, k, c).ok
        grid = ps.coordinate_grid(cx)
        probes = 0
        while probes < 50:
            coords = []
            for ax in grid.axes:
                vals = sorted(ax)
                if len(vals) > 1:
                    j = rng.randrange(len(vals) - 1)
                    a, b = vals[j], vals[j + 1]
                else:
                    a, b = vals[0], vals[0] + 1
                coords.append(a + (b - a) * Fraction(rng.randint(1, 7), 8))
            u = Grade(tuple(coords))
            if any(c in set(ax) for c, ax in zip(u.coords, grid.axes)):
                continue
            k = rng.randrange(0, cx.dimension + 1) if cx.dimension >= 0 else 0
            assert ps.is_homological_critical(cx, k, u) is None
            probes += 1
    assert time.perf_counter() - t0 < 60.0


def test_criterion_8_interpolation_path():
    """Stability holds along the 4-step affine path between the example and
    its 1/4-perturbation; every consecutive pair is at distance exactly 1/16."""
    f = ps.fixtures.e1()
    g = ps.fixtures.e1g(Fraction(1, 4))
    steps = [ps.interpolate(f, g, Fraction(j, 4)) for j in range(5)]
    for a, b in zip(steps, steps[1:]):
        assert ps.sup_norm_distance(a, b) == Fraction(1, 16)
        for k in (0, 1):
            rep = ps.stability_check(a, b, k)
            assert rep.epsilon == Fraction(1, 16)
            assert rep.ok
