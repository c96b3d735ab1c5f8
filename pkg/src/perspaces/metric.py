"""Extended max-norm on pairs, diagonal distance, filtration perturbation
distance, and the exact stability verifier."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .complexes import MultiFilteredComplex, coordinate_grid
from .grades import Grade, diagonal, rational
from .homology import DEFAULT_PRIME
from .space import (
    Cornerpoint,
    sample_space,
    window_count_infinity,
    window_count_proper,
)

RationalOrInf = Union[Fraction, float]

MATCHED_CORNERPOINT = "matched-to-cornerpoint"
MATCHED_DIAGONAL = "matched-to-diagonal"
FAILED = "FAILED"


class SkeletonMismatch(ValueError):
    """Raised when two filtrations do not share the same simplicial skeleton."""


@dataclass(frozen=True)
class ExtendedPoint:
    """A pair (u, v) with v possibly at infinity (v is None)."""

    u: Grade
    v: Optional[Grade]

    @property
    def at_infinity(self) -> bool:
        return self.v is None


def _as_point(p) -> ExtendedPoint:
    if isinstance(p, ExtendedPoint):
        return p
    if isinstance(p, Cornerpoint):
        return ExtendedPoint(p.u, p.v)
    u, v = p
    return ExtendedPoint(u, v)


def ext_distance(p, q) -> RationalOrInf:
    """Max-norm distance on pairs, with infinity - infinity = 0 and
    finite - infinity = infinity."""
    p, q = _as_point(p), _as_point(q)
    if p.u.n != q.u.n:
        raise ValueError("extended points live in different parameter counts")
    du = p.u.sup_diff(q.u)
    if p.at_infinity and q.at_infinity:
        return du
    if p.at_infinity or q.at_infinity:
        return math.inf
    return max(du, p.v.sup_diff(q.v))


def diagonal_distance(p) -> RationalOrInf:
    """Distance of a pair to the diagonal: min_i (v_i - u_i)/2; infinity for
    points at infinity."""
    p = _as_point(p)
    if p.at_infinity:
        return math.inf
    return p.u.min_span(p.v) / 2


def _check_same_skeleton(f: MultiFilteredComplex, g: MultiFilteredComplex) -> None:
    if f.n != g.n:
        raise SkeletonMismatch(f"parameter counts differ: {f.n} vs {g.n}")
    fs = [s.vertices for s, _ in f.simplices]
    gs = [s.vertices for s, _ in g.simplices]
    if fs != gs:
        raise SkeletonMismatch("the two filtrations have different simplices")


def sup_norm_distance(f: MultiFilteredComplex, g: MultiFilteredComplex) -> Fraction:
    """Max over simplices of the max-norm grade difference; the right-hand
    side of the stability bound."""
    _check_same_skeleton(f, g)
    if f.size == 0:
        return Fraction(0)
    return max(
        gf.sup_diff(gg) for (_, gf), (_, gg) in zip(f.simplices, g.simplices)
    )


def interpolate(
    f: MultiFilteredComplex, g: MultiFilteredComplex, tau
) -> MultiFilteredComplex:
    """Affine interpolation of the two gradings at parameter tau in [0, 1]."""
    _check_same_skeleton(f, g)
    t = rational(tau)
    if not 0 <= t <= 1:
        raise ValueError(f"interpolation parameter must be in [0, 1], got {t}")
    pairs = []
    for (s, gf), (_, gg) in zip(f.simplices, g.simplices):
        grade = Grade(
            tuple((1 - t) * a + t * b for a, b in zip(gf.coords, gg.coords))
        )
        pairs.append((s, grade))
    return MultiFilteredComplex(f.n, pairs)


@dataclass(frozen=True)
class MatchVerdict:
    point: Cornerpoint
    verdict: str

    def to_json(self) -> dict:
        return {
            "u": self.point.u.as_strings(),
            "v": None if self.point.v is None else self.point.v.as_strings(),
            "multiplicity": self.point.multiplicity,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class StabilityReport:
    degree: int
    epsilon: Fraction
    direction_fg: tuple[MatchVerdict, ...]
    direction_gf: tuple[MatchVerdict, ...]

    @property
    def ok(self) -> bool:
        return all(
            v.verdict != FAILED for v in self.direction_fg + self.direction_gf
        )

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "epsilon": str(self.epsilon),
            "direction_fg": [v.to_json() for v in self.direction_fg],
            "direction_gf": [v.to_json() for v in self.direction_gf],
            "pass": self.ok,
        }


def directed_match_check(
    samples: Iterable[Cornerpoint],
    g: MultiFilteredComplex,
    k: int,
    epsilon,
    margin=None,
    p: int = DEFAULT_PRIME,
) -> list[MatchVerdict]:
    """Match each sampled cornerpoint of one space into the other, exactly.

    A proper sample within epsilon of the diagonal matches the diagonal
    (which carries infinite multiplicity). Otherwise the existence of a
    cornerpoint of the other space inside the closed diagonal window of
    radius epsilon is decided exactly by a window count at radius
    epsilon + margin; the margin turns the closed condition into a
    computable strict one without letting any extra grid cornerpoint in.
    """
    eps = rational(epsilon)
    if eps < 0:
        raise ValueError("epsilon must be >= 0")
    tau = (
        coordinate_grid(g).delta_min / 4 if margin is None else rational(margin)
    )
    if tau <= 0:
        raise ValueError("margin must be > 0")
    radius = diagonal(g.n, eps + tau)
    verdicts = []
    for c in samples:
        if c.at_infinity:
            ok = window_count_infinity(g, k, c.u, radius, p) >= 1
            verdicts.append(MatchVerdict(c, MATCHED_CORNERPOINT if ok else FAILED))
            continue
        if diagonal_distance(c) <= eps:
            verdicts.append(MatchVerdict(c, MATCHED_DIAGONAL))
            continue
        if not (c.u + radius).lt(c.v - radius):
            # window precondition fails only when the point is within
            # epsilon + margin of the diagonal
            verdicts.append(MatchVerdict(c, MATCHED_DIAGONAL))
            continue
        ok = window_count_proper(g, k, (c.u, c.v), radius, p) >= 1
        verdicts.append(MatchVerdict(c, MATCHED_CORNERPOINT if ok else FAILED))
    return verdicts


def stability_check(
    f: MultiFilteredComplex,
    g: MultiFilteredComplex,
    k: int,
    rays: Optional[Sequence] = None,
    margin=None,
    p: int = DEFAULT_PRIME,
) -> StabilityReport:
    """Verify the Hausdorff stability bound on all sampled cornerpoints in
    both directions; a FAILED verdict falsifies the implementation."""
    _check_same_skeleton(f, g)
    eps = sup_norm_distance(f, g)
    fg = directed_match_check(sample_space(f, k, rays, p), g, k, eps, margin, p)
    gf = directed_match_check(sample_space(g, k, rays, p), f, k, eps, margin, p)
    return StabilityReport(k, eps, tuple(fg), tuple(gf))
