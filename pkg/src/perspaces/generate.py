"""Seeded random multi-filtered complexes for checks and the CLI."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .complexes import MultiFilteredComplex, Simplex
from .grades import Grade


def random_complex(
    seed: int,
    size: int = 20,
    n: int = 2,
    grid: int = 5,
    max_dim: int = 2,
    num_vertices: Optional[int] = None,
) -> MultiFilteredComplex:
    """Deterministic random complex with at most `size` simplices.

    Random simplices on a small vertex set are closed under faces; grades are
    drawn per simplex from the grid {0, 1/(grid-1), ..., 1} on every axis and
    monotonized by componentwise max over faces, so the result always
    validates. The same seed yields the same complex.
    """
    if size < 1 or n < 1 or grid < 1 or max_dim < 0:
        raise ValueError("sizes must be positive")
    rng = random.Random(seed)
    if num_vertices is None:
        num_vertices = max(2, min(size // 2, 8))
    vertices = list(range(num_vertices))

    chosen: set[tuple[int, ...]] = set()
    for v in vertices[: max(1, min(num_vertices, size))]:
        chosen.add((v,))
    attempts = 0
    while len(chosen) < size and attempts < 20 * size and max_dim > 0:
        attempts += 1
        dim = rng.randint(1, max_dim)
        if dim + 1 > num_vertices:
            continue
        verts = tuple(sorted(rng.sample(vertices, dim + 1)))
        closure = {verts}
        for d in range(1, dim + 1):
            closure.update(combinations(verts, d))
        if len(chosen | closure) > size:
            continue
        chosen.update(closure)

    denom = max(grid - 1, 1)
    values = [Fraction(i, denom) for i in range(grid)]

    grades: dict[tuple[int, ...], Grade] = {}
    for verts in sorted(chosen, key=lambda v: (len(v), v)):
        own = tuple(rng.choice(values) for _ in range(n))
        coords = list(own)
        if len(verts) > 1:
            for face in combinations(verts, len(verts) - 1):
                fg = grades[face]
                coords = [max(a, b) for a, b in zip(coords, fg.coords)]
        grades[verts] = Grade(tuple(coords))

    pairs = [(Simplex(v), g) for v, g in grades.items()]
    return MultiFilteredComplex(n, pairs)
