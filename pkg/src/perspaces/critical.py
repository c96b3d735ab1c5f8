"""Homological critical values: finite witness search and the link between
cornerpoints and critical values."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .complexes import MultiFilteredComplex, sublevel
from .grades import Grade, rational
from .homology import DEFAULT_PRIME, betti, pbn
from .space import Cornerpoint, mu_infinity, mu_proper, stabilization_radius


@dataclass(frozen=True)
class CriticalWitness:
    """A non-isomorphism certificate for the inclusion-induced map around a
    value: rank of the map is below one of the two Betti numbers."""

    degree: int
    value: Grade
    below: Grade
    above: Grade
    betti_below: int
    betti_above: int
    rank: int

    def certifies(self) -> bool:
        return self.rank < self.betti_below or self.rank < self.betti_above

    def to_json(self) -> dict:
        return {
            "k": self.degree,
            "u": self.value.as_strings(),
            "u_prime": self.below.as_strings(),
            "u_dprime": self.above.as_strings(),
            "betti_prime": self.betti_below,
            "betti_dprime": self.betti_above,
            "rank": self.rank,
        }


@dataclass(frozen=True)
class CornerpointCriticalReport:
    """Witnesses certifying that the coordinates of a cornerpoint are
    homological critical values."""

    point: Cornerpoint
    witness_u: CriticalWitness
    witness_v: Optional[CriticalWitness]

    @property
    def ok(self) -> bool:
        if self.witness_u is None:
            return False
        if self.point.v is not None and self.witness_v is None:
            return False
        return True

    def to_json(self) -> dict:
        return {
            "u": self.point.u.as_strings(),
            "v": None if self.point.v is None else self.point.v.as_strings(),
            "multiplicity": self.point.multiplicity,
            "witness_u": self.witness_u.to_json() if self.witness_u else None,
            "witness_v": self.witness_v.to_json() if self.witness_v else None,
        }


class StaleCornerpoint(ValueError):
    """The multiplicity of the given point recomputes to zero."""


def is_homological_critical(
    cx: MultiFilteredComplex,
    k: int,
    u: Grade,
    epsilon=None,
    p: int = DEFAULT_PRIME,
) -> Optional[CriticalWitness]:
    """Search for a witness pair below/above u making the inclusion-induced
    map in degree k fail to be an isomorphism.

    Candidates are u -+ epsilon on every subset of axes (lexicographic subset
    order, so the returned witness is deterministic); by cell-constancy any
    witness inside the epsilon-ball induces the same sublevel pair as one of
    these axis-subset candidates.
    """
    if epsilon is None:
        eps = stabilization_radius(cx, [u]).epsilon
    else:
        eps = rational(epsilon)
        if eps <= 0:
            raise ValueError("witness radius must be > 0")
    n = cx.n
    offsets_down = []
    offsets_up = []
    for bits in range(1 << n):
        down = Grade(
            tuple(u.coords[i] - (eps if bits >> i & 1 else 0) for i in range(n))
        )
        up = Grade(
            tuple(u.coords[i] + (eps if bits >> i & 1 else 0) for i in range(n))
        )
        offsets_down.append(down)
        offsets_up.append(up)
    for below in offsets_down:
        b_below = betti(cx, sublevel(cx, below), k, p)
        for above in offsets_up:
            b_above = betti(cx, sublevel(cx, above), k, p)
            rank = pbn(cx, k, below, above, p)
            if rank < b_below or rank < b_above:
                return CriticalWitness(k, u, below, above, b_below, b_above, rank)
    return None


def check_cornerpoint_critical(
    cx: MultiFilteredComplex,
    k: int,
    c: Cornerpoint,
    p: int = DEFAULT_PRIME,
) -> CornerpointCriticalReport:
    """Certify that a cornerpoint's coordinates are homological critical
    values. Recomputes the multiplicity first; a zero recomputation means the
    point is stale. A missing witness falsifies the implementation."""
    if c.v is None:
        m = mu_infinity(cx, k, c.u, p)
    else:
        m = mu_proper(cx, k, c.u, c.v, p)
    if m <= 0:
        raise StaleCornerpoint(f"multiplicity of {c} recomputes to {m}")
    wu = is_homological_critical(cx, k, c.u, p=p)
    wv = None if c.v is None else is_homological_critical(cx, k, c.v, p=p)
    return CornerpointCriticalReport(c, wu, wv)
