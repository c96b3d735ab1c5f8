"""Shared helpers for the test suite: random query generators over the
coordinate grid of a complex, plus the golden fixtures."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

import perspaces as ps
from perspaces.grades import Grade


def axis_candidates(cx) -> list[list[Fraction]]:
    """Per-axis sampling pool: grid values, midpoints between consecutive
    values, and one value beyond each end of the grid."""
    grid = ps.coordinate_grid(cx)
    pools = []
    for ax in grid.axes:
        vals = set(ax)
        vals.update((a + b) / 2 for a, b in zip(ax, ax[1:]))
        vals.add(min(ax) - 1)
        vals.add(max(ax) + 1)
        pools.append(sorted(vals))
    return pools


def rand_grade(rng: random.Random, pools) -> Grade:
    return Grade(tuple(rng.choice(p) for p in pools))


def rand_pair_leq(rng: random.Random, pools) -> tuple[Grade, Grade]:
    """A pair u <= v componentwise."""
    lo, hi = [], []
    for p in pools:
        a, b = sorted((rng.choice(p), rng.choice(p)))
        lo.append(a)
        hi.append(b)
    return Grade(tuple(lo)), Grade(tuple(hi))


def rand_pair_lt(rng: random.Random, pools) -> tuple[Grade, Grade]:
    """A pair u strictly below v on every axis."""
    while True:
        lo, hi = [], []
        ok = True
        for p in pools:
            a, b = sorted(rng.sample(p, 2))
            if a == b:
                ok = False
                break
            lo.append(a)
            hi.append(b)
        if ok:
            return Grade(tuple(lo)), Grade(tuple(hi))


def rand_direction(rng: random.Random, n: int) -> Grade:
    choices = [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(1, 3)]
    return Grade(tuple(rng.choice(choices) for _ in range(n)))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Print one visible PASS/FAIL line per acceptance criterion."""
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call" or item.path.name != "test_acceptance.py":
        return
    from test_acceptance import CRITERION_TAGS

    tag = CRITERION_TAGS.get(item.name, item.name)
    status = "PASS" if rep.passed else "FAIL"
    tr = item.config.pluginmanager.get_plugin("terminalreporter")
    if tr is not None:
        tr.write_line(f"[{tag}] {status} ({rep.duration:.2f}s)")


@pytest.fixture
def e1():
    return ps.fixtures.e1()


@pytest.fixture
def c1():
    return ps.fixtures.c1()
