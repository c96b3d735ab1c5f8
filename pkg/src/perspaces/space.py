"""Multiplicities, cornerpoints, ray sections and exact window counts of the
persistence space of a multi-filtered complex.

The persistence space is, for two or more parameters, generally an infinite
staircase-shaped point set; it is represented implicitly through multiplicity
and window-count queries and explicitly through finite ray sections.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .complexes import MultiFilteredComplex, coordinate_grid, sublevel
from .grades import Grade, diagonal
from .homology import DEFAULT_PRIME, pbn

RationalOrInf = Union[Fraction, float]


@dataclass(frozen=True)
class Cornerpoint:
    """A point of positive multiplicity: proper pair (u, v) or (u, infinity).

    ``v is None`` marks a cornerpoint at infinity (an essential class).
    """

    degree: int
    u: Grade
    v: Optional[Grade]
    multiplicity: int

    @property
    def at_infinity(self) -> bool:
        return self.v is None

    @property
    def persistence(self) -> RationalOrInf:
        return persistence_of(self)

    def sort_key(self):
        vkey = () if self.v is None else self.v.coords
        return (self.degree, 0 if self.v is not None else 1, self.u.coords, vkey)


@dataclass(frozen=True)
class RaySection:
    """The cornerpoints on the diagonal ray family through one basepoint.

    Proper points have the form (base_u - s*e, base_v + t*e) with s >= 0,
    t > 0; at-infinity points have the form (base_u - s*e, infinity).
    """

    degree: int
    base_u: Grade
    base_v: Grade
    direction: Grade
    proper: tuple[Cornerpoint, ...]
    at_infinity: tuple[Cornerpoint, ...]

    def total_multiplicity(self) -> int:
        return sum(c.multiplicity for c in self.proper) + sum(
            c.multiplicity for c in self.at_infinity
        )


@dataclass(frozen=True)
class StabilizationRadius:
    """A radius below which every PBN term in a multiplicity sum is at its
    limiting value (no grid hyperplane strictly between a query coordinate
    and its perturbations)."""

    epsilon: Fraction


def stabilization_radius(
    cx: MultiFilteredComplex,
    points: Iterable[Grade],
    pair: Optional[tuple[Grade, Grade]] = None,
) -> StabilizationRadius:
    """Quarter of the smallest nonzero distance from any query coordinate to a
    grid value on its axis; for a proper query pair also capped by a quarter
    of min_i(v_i - u_i), so that u + e strictly precedes v - e.

    Falls back to max(delta_min, 1)/4 when no positive gap exists.
    """
    grid = coordinate_grid(cx)
    gaps = []
    for g in points:
        for i, c in enumerate(g.coords):
            for gv in grid.axes[i]:
                if gv != c:
                    gaps.append(abs(c - gv))
    eps = (min(gaps) if gaps else max(grid.delta_min, Fraction(1))) / 4
    if pair is not None:
        u, v = pair
        span = u.min_span(v)
        if span <= 0:
            raise ValueError("proper query needs u strictly below v")
        eps = min(eps, span / 4)
    return StabilizationRadius(eps)


def _far_corner(cx: MultiFilteredComplex, grades: Sequence[Grade]) -> Grade:
    """A grade beyond every simplex grade and every query coordinate; all
    sublevel sets there equal the whole complex."""
    grid = coordinate_grid(cx)
    top = grid.m_max
    for g in grades:
        top = max(top, max(g.coords))
    return diagonal(cx.n, top + 1)


def mu_proper(
    cx: MultiFilteredComplex, k: int, u: Grade, v: Grade, p: int = DEFAULT_PRIME
) -> int:
    """Multiplicity of the proper point (u, v): the limiting 4-term
    alternating sum of persistent Betti numbers around it."""
    if not u.lt(v):
        raise ValueError(f"mu_proper requires u strictly below v, got {u}, {v}")
    eps = stabilization_radius(cx, [u, v], pair=(u, v)).epsilon
    up, um = u.shift(eps), u.shift(-eps)
    vp, vm = v.shift(eps), v.shift(-eps)
    return (
        pbn(cx, k, up, vm, p)
        - pbn(cx, k, um, vm, p)
        - pbn(cx, k, up, vp, p)
        + pbn(cx, k, um, vp, p)
    )


def mu_infinity(cx: MultiFilteredComplex, k: int, u: Grade, p: int = DEFAULT_PRIME) -> int:
    """Multiplicity of the point at infinity over u: the limiting jump of
    beta(., V) across u, with V beyond every grade."""
    eps = stabilization_radius(cx, [u]).epsilon
    far = _far_corner(cx, [u.shift(eps)])
    return pbn(cx, k, u.shift(eps), far, p) - pbn(cx, k, u.shift(-eps), far, p)


def persistence_of(c: Cornerpoint) -> RationalOrInf:
    """min_i (v_i - u_i) for proper cornerpoints; infinity otherwise."""
    if c.v is None:
        return math.inf
    return c.u.min_span(c.v)


def _ray_params_down(cx: MultiFilteredComplex, base: Grade, e: Grade) -> list[Fraction]:
    """s >= 0 such that some coordinate of base - s*e lies on its axis grid."""
    grid = coordinate_grid(cx)
    out = {Fraction(0)}
    for i in range(cx.n):
        for gv in grid.axes[i]:
            s = (base.coords[i] - gv) / e.coords[i]
            if s > 0:
                out.add(s)
    return sorted(out)


def _ray_params_up(cx: MultiFilteredComplex, base: Grade, e: Grade) -> list[Fraction]:
    """t > 0 such that some coordinate of base + t*e lies on its axis grid."""
    grid = coordinate_grid(cx)
    out = set()
    for i in range(cx.n):
        for gv in grid.axes[i]:
            t = (gv - base.coords[i]) / e.coords[i]
            if t > 0:
                out.add(t)
    return sorted(out)


def ray_section(
    cx: MultiFilteredComplex,
    k: int,
    base_u: Grade,
    base_v: Grade,
    e: Grade,
    p: int = DEFAULT_PRIME,
) -> RaySection:
    """All cornerpoints of the form (base_u - s*e, base_v + t*e), s >= 0,
    t > 0, plus the at-infinity cornerpoints (base_u - s*e, infinity).

    Candidate parameters are the grid crossings of each ray; between
    crossings every PBN term is constant, so the scan is exhaustive.
    """
    if not base_u.lt(base_v):
        raise ValueError("ray basepoint needs base_u strictly below base_v")
    if not e.positive():
        raise ValueError("ray direction must be strictly positive")
    s_params = _ray_params_down(cx, base_u, e)
    t_params = _ray_params_up(cx, base_v, e)
    proper = []
    for s in s_params:
        u = base_u - e.scale(s)
        for t in t_params:
            v = base_v + e.scale(t)
            m = mu_proper(cx, k, u, v, p)
            if m > 0:
                proper.append(Cornerpoint(k, u, v, m))
    infinity = []
    for s in s_params:
        u = base_u - e.scale(s)
        m = mu_infinity(cx, k, u, p)
        if m > 0:
            infinity.append(Cornerpoint(k, u, None, m))
    return RaySection(k, base_u, base_v, e, tuple(proper), tuple(infinity))


def reconstruct_pbn(section: RaySection) -> int:
    """Sum of the multiplicities in a ray section; by the representation
    property this equals the persistent Betti number at the basepoint."""
    return section.total_multiplicity()


def window_count_proper(
    cx: MultiFilteredComplex,
    k: int,
    point: tuple[Grade, Grade],
    e: Grade,
    p: int = DEFAULT_PRIME,
) -> int:
    """Number of proper cornerpoints, with multiplicity, in the diagonal
    window around the point at radius e (half-open: s in [-1,1), t in (-1,1])."""
    u, v = point
    if not e.positive():
        raise ValueError("window direction must be strictly positive")
    if not (u + e).lt(v - e):
        raise ValueError("window requires u + e strictly below v - e")
    return (
        pbn(cx, k, u + e, v - e, p)
        - pbn(cx, k, u - e, v - e, p)
        - pbn(cx, k, u + e, v + e, p)
        + pbn(cx, k, u - e, v + e, p)
    )


def window_count_infinity(
    cx: MultiFilteredComplex, k: int, u: Grade, e: Grade, p: int = DEFAULT_PRIME
) -> int:
    """Number of at-infinity cornerpoints, with multiplicity, over the
    segment {u - s*e : s in [-1,1)}."""
    if not e.positive():
        raise ValueError("window direction must be strictly positive")
    far = _far_corner(cx, [u + e])
    return pbn(cx, k, u + e, far, p) - pbn(cx, k, u - e, far, p)


# ---------------------------------------------------------------------------
# sampling


def default_rays(cx: MultiFilteredComplex) -> list[tuple[Grade, Grade, Grade]]:
    """Heuristic diagonal ray family: basepoints on the product of per-axis
    grid values and midpoints; v-basepoints both from the same product (every
    pair with u strictly below v) and at diagonal offsets by a few gap-scaled
    steps. Purely a sampler; correctness claims live in the ray/window ops.
    """
    grid = coordinate_grid(cx)
    if cx.size == 0:
        return []
    per_axis: list[list[Fraction]] = []
    for ax in grid.axes:
        vals = list(ax)
        vals.extend((a + b) / 2 for a, b in zip(ax, ax[1:]))
        per_axis.append(sorted(set(vals)))
    points: list[Grade] = []

    def rec(i: int, acc: list[Fraction]) -> None:
        if i == cx.n:
            points.append(Grade(tuple(acc)))
            return
        for val in per_axis[i]:
            rec(i + 1, acc + [val])

    rec(0, [])
    one = diagonal(cx.n, 1)
    lo = min((v for ax in grid.axes for v in ax), default=Fraction(0))
    lambdas = [
        grid.delta_min / 2,
        grid.delta_min,
        2 * grid.delta_min,
        grid.m_max - lo + 1,
    ]
    half = grid.delta_min / 2
    rays = []
    for a in points:
        for lam in lambdas:
            rays.append((a, a.shift(lam), one))
        for b in points:
            if a.lt(b):
                rays.append((a, b, one))
            # shifting the v-basepoint half a gap down lets the ray cross
            # grid points that are unreachable diagonally from the product
            bh = b.shift(-half)
            if a.lt(bh):
                rays.append((a, bh, one))
    return rays


def sample_space(
    cx: MultiFilteredComplex,
    k: int,
    rays: Optional[Iterable[tuple[Grade, Grade, Grade]]] = None,
    p: int = DEFAULT_PRIME,
) -> list[Cornerpoint]:
    """Deduplicated union of ray sections over the given (or default) family,
    sorted canonically."""
    if rays is None:
        rays = default_rays(cx)
    seen: dict = {}
    mu_cache: dict = {}
    for base_u, base_v, e in rays:
        if not base_u.lt(base_v):
            raise ValueError("ray basepoint needs base_u strictly below base_v")
        if not e.positive():
            raise ValueError("ray direction must be strictly positive")
        s_params = _ray_params_down(cx, base_u, e)
        t_params = _ray_params_up(cx, base_v, e)
        for s in s_params:
            u = base_u - e.scale(s)
            for t in t_params:
                v = base_v + e.scale(t)
                ck = (u.coords, v.coords)
                if ck in mu_cache:
                    continue
                m = mu_proper(cx, k, u, v, p)
                mu_cache[ck] = m
                if m > 0:
                    seen[ck] = Cornerpoint(k, u, v, m)
            ck = (u.coords, None)
            if ck not in mu_cache:
                m = mu_infinity(cx, k, u, p)
                mu_cache[ck] = m
                if m > 0:
                    seen[ck] = Cornerpoint(k, u, None, m)
    return sorted(seen.values(), key=Cornerpoint.sort_key)
