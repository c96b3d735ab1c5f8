"""Small golden filtrations used throughout the tests and demos."""
from __future__ import annotations

from .complexes import MultiFilteredComplex, Simplex, lower_star_extend
from .grades import Grade, rational


def e1() -> MultiFilteredComplex:
    """Path on three vertices with a 2-parameter lower-star filtration:
    v0=(0,0), v1=(2,1), v2=(0,-1), edges {v0,v1} and {v1,v2}."""
    return e1g(0)


def e1g(eta) -> MultiFilteredComplex:
    """The E1 path with v1 lifted to (2, 1 + eta)."""
    h = rational(eta)
    grades = {
        0: Grade.of(0, 0),
        1: Grade(( rational(2), 1 + h )),
        2: Grade.of(0, -1),
    }
    return lower_star_extend(grades, [Simplex.of(0, 1), Simplex.of(1, 2)])


def c1() -> MultiFilteredComplex:
    """Hollow triangle, every simplex graded (0, 0)."""
    grades = {v: Grade.of(0, 0) for v in (0, 1, 2)}
    return lower_star_extend(
        grades, [Simplex.of(0, 1), Simplex.of(0, 2), Simplex.of(1, 2)]
    )
