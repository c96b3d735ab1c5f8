"""Multi-filtered simplicial complexes: data model, parsing, validation,
lower-star extension and sublevel subcomplexes."""
from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .grades import Grade, rational


class ComplexFormatError(ValueError):
    """Raised on malformed complex-file input; carries a line position."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class ValidationError(ValueError):
    """Raised when a parsed complex violates a structural invariant."""

    def __init__(self, issues: Sequence[str]):
        self.issues = list(issues)
        super().__init__("; ".join(self.issues))


@dataclass(frozen=True, order=True)
class Simplex:
    """A simplex given by its strictly increasing vertex identifiers."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a simplex needs at least one vertex")
        if any(a >= b for a, b in zip(self.vertices, self.vertices[1:])):
            raise ValueError(f"vertices must be strictly increasing: {self.vertices}")

    @classmethod
    def of(cls, *vertices: int) -> "Simplex":
        return cls(tuple(sorted(vertices)))

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def facets(self) -> list["Simplex"]:
        """Codimension-1 faces, in the order of the dropped vertex."""
        if self.dim == 0:
            return []
        verts = self.vertices
        return [
            Simplex(verts[:j] + verts[j + 1 :]) for j in range(len(verts))
        ]

    def faces(self) -> list["Simplex"]:
        """All proper faces (every nonempty strict vertex subset)."""
        out = []
        for size in range(1, len(self.vertices)):
            for sub in combinations(self.vertices, size):
                out.append(Simplex(sub))
        return out

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.vertices) + "}"


@dataclass(frozen=True)
class CoordinateGrid:
    """Per-axis sorted distinct grade values, with gap and range summaries.

    delta_min falls back to 1 when no axis has two distinct values.
    """

    axes: tuple[tuple[Fraction, ...], ...]
    delta_min: Fraction
    m_max: Fraction


class MultiFilteredComplex:
    """A finite simplicial complex with one n-dimensional grade per simplex.

    Instances are immutable after construction; every operation in this
    package is a pure function of its inputs. Construction performs only
    light well-formedness checks; use :func:`validate` for the full report
    (face closure, grade monotonicity, duplicates).
    """

    def __init__(self, n: int, simplices: Iterable[tuple[Simplex, Grade]]):
        if n < 1:
            raise ValueError("parameter count n must be >= 1")
        pairs = list(simplices)
        for s, g in pairs:
            if g.n != n:
                raise ValueError(f"grade of {s} has {g.n} coordinates, expected {n}")
        # canonical order: by dimension then vertex tuple
        pairs.sort(key=lambda sg: (sg[0].dim, sg[0].vertices))
        self._n = n
        self._pairs: tuple[tuple[Simplex, Grade], ...] = tuple(pairs)
        self._index: dict[tuple[int, ...], int] = {}
        for i, (s, _) in enumerate(self._pairs):
            self._index.setdefault(s.vertices, i)
        self._engines: dict = {}  # transparent homology caches, keyed by prime
        self._sublevel_cache: dict = {}
        self._grid: Optional[CoordinateGrid] = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def simplices(self) -> tuple[tuple[Simplex, Grade], ...]:
        return self._pairs

    @property
    def size(self) -> int:
        return len(self._pairs)

    @property
    def dimension(self) -> int:
        """Max simplex dimension; -1 for the empty complex."""
        if not self._pairs:
            return -1
        return max(s.dim for s, _ in self._pairs)

    def index_of(self, simplex: Simplex) -> Optional[int]:
        return self._index.get(simplex.vertices)

    def grade_of(self, simplex: Simplex) -> Grade:
        i = self.index_of(simplex)
        if i is None:
            raise KeyError(f"simplex {simplex} not in complex")
        return self._pairs[i][1]

    def __contains__(self, simplex: Simplex) -> bool:
        return simplex.vertices in self._index

    def __repr__(self) -> str:
        return f"MultiFilteredComplex(n={self._n}, size={self.size}, d={self.dimension})"


@dataclass(frozen=True)
class SubcomplexSelection:
    """Membership mask over the simplices of a parent complex."""

    parent: MultiFilteredComplex
    mask: tuple[bool, ...]
    key: tuple = field(default=None)  # snap key; identifies the sublevel cell

    def indices(self) -> list[int]:
        return [i for i, m in enumerate(self.mask) if m]

    def count(self) -> int:
        return sum(self.mask)

    def bits(self) -> int:
        b = 0
        for i, m in enumerate(self.mask):
            if m:
                b |= 1 << i
        return b

    def is_face_closed(self) -> bool:
        cx = self.parent
        for i, m in enumerate(self.mask):
            if not m:
                continue
            s, _ = cx.simplices[i]
            for f in s.facets():
                j = cx.index_of(f)
                if j is None or not self.mask[j]:
                    return False
        return True


def lower_star_extend(
    vertex_grades: Mapping[int, Grade], simplices: Iterable[Simplex]
) -> MultiFilteredComplex:
    """Extend vertex grades to a complex by componentwise max over vertices.

    The input simplices are closed under faces automatically; every graded
    vertex is included as a 0-simplex. The result satisfies grade
    monotonicity by construction.
    """
    grades = dict(vertex_grades)
    if not grades:
        raise ValueError("lower-star extension needs at least one graded vertex")
    ns = {g.n for g in grades.values()}
    if len(ns) != 1:
        raise ValueError(f"inconsistent grade lengths among vertices: {sorted(ns)}")
    n = ns.pop()

    closed: set[tuple[int, ...]] = {(v,) for v in grades}
    for s in simplices:
        for v in s.vertices:
            if v not in grades:
                raise ValueError(f"simplex {s} references ungraded vertex {v}")
        closed.add(s.vertices)
        for f in s.faces():
            closed.add(f.vertices)

    pairs = []
    for verts in closed:
        g = Grade(
            tuple(
                max(grades[v].coords[i] for v in verts) for i in range(n)
            )
        )
        pairs.append((Simplex(verts), g))
    return MultiFilteredComplex(n, pairs)


def validate(cx: MultiFilteredComplex) -> list[str]:
    """Full structural report; empty iff the complex satisfies all invariants."""
    issues: list[str] = []
    seen: dict[tuple[int, ...], int] = {}
    for i, (s, _) in enumerate(cx.simplices):
        if s.vertices in seen:
            issues.append(f"duplicate simplex {s}")
        else:
            seen[s.vertices] = i
    for s, g in cx.simplices:
        for f in s.facets():
            j = cx.index_of(f)
            if j is None:
                issues.append(f"missing face {f} of {s}")
                continue
            fg = cx.simplices[j][1]
            if not fg.leq(g):
                issues.append(
                    f"grade monotonicity violated: grade{fg} of face {f} "
                    f"is not below grade{g} of {s}"
                )
    return issues


def coordinate_grid(cx: MultiFilteredComplex) -> CoordinateGrid:
    """Sorted distinct grade values per axis, smallest positive gap, max value."""
    if cx._grid is not None:
        return cx._grid
    n = cx.n
    axes = []
    for i in range(n):
        axes.append(tuple(sorted({g.coords[i] for _, g in cx.simplices})))
    gaps = [
        b - a for ax in axes for a, b in zip(ax, ax[1:])
    ]
    delta_min = min(gaps) if gaps else Fraction(1)
    m_max = max((v for ax in axes for v in ax), default=Fraction(0))
    grid = CoordinateGrid(tuple(axes), delta_min, m_max)
    cx._grid = grid
    return grid


def snap_key(cx: MultiFilteredComplex, u: Grade) -> tuple[int, ...]:
    """Per-axis index of the largest grid value <= u_i (0 = below all).

    Two grades with equal snap keys have identical sublevel subcomplexes
    (cell-constancy), so this key indexes all sublevel-dependent caches.
    """
    grid = coordinate_grid(cx)
    return tuple(bisect_right(grid.axes[i], u.coords[i]) for i in range(cx.n))


def sublevel(cx: MultiFilteredComplex, u: Grade) -> SubcomplexSelection:
    """Select exactly the simplices with grade componentwise <= u."""
    if u.n != cx.n:
        raise ValueError(f"grade has {u.n} coordinates, complex has n={cx.n}")
    key = snap_key(cx, u)
    cached = cx._sublevel_cache.get(key)
    if cached is not None:
        return cached
    mask = tuple(g.leq(u) for _, g in cx.simplices)
    sel = SubcomplexSelection(cx, mask, key)
    cx._sublevel_cache[key] = sel
    return sel


# ---------------------------------------------------------------------------
# file format


def parse_complex(text: str) -> MultiFilteredComplex:
    """Parse the line-oriented or JSON complex-file format.

    Line format::

        n 2
        mode vertex            # optional; default explicit
        v 0 0 0                # vertex mode: id then n coordinates
        s 0 1                  # simplex by vertex ids
        s 0 1 | 2 1            # explicit mode: ids, '|', n coordinates

    Rationals may be written as '-3', '0.25' or '7/4'. The JSON form mirrors
    the same data (see :func:`parse_complex_json`).
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_complex_json(text)
    n: Optional[int] = None
    mode: Optional[str] = None
    vertex_grades: dict[int, Grade] = {}
    vertex_simplices: list[Simplex] = []
    explicit_pairs: list[tuple[Simplex, Grade]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        tag = tokens[0]
        try:
            if tag == "n":
                if len(tokens) != 2:
                    raise ComplexFormatError("expected: n <int>", lineno)
                n = int(tokens[1])
            elif tag == "mode":
                if len(tokens) != 2 or tokens[1] not in ("vertex", "explicit"):
                    raise ComplexFormatError("expected: mode vertex|explicit", lineno)
                mode = tokens[1]
            elif tag == "v":
                if mode == "explicit":
                    raise ComplexFormatError("'v' line in explicit mode", lineno)
                mode = "vertex"
                if n is None:
                    raise ComplexFormatError("'v' line before 'n' header", lineno)
                if len(tokens) != 2 + n:
                    raise ComplexFormatError(
                        f"expected: v <id> and {n} coordinates", lineno
                    )
                vid = int(tokens[1])
                if vid in vertex_grades:
                    raise ComplexFormatError(f"vertex {vid} graded twice", lineno)
                vertex_grades[vid] = Grade.from_seq(tokens[2:])
            elif tag == "s":
                if n is None:
                    raise ComplexFormatError("'s' line before 'n' header", lineno)
                rest = tokens[1:]
                if "|" in rest:
                    if mode == "vertex":
                        raise ComplexFormatError(
                            "explicit grade on a simplex in vertex mode", lineno
                        )
                    mode = "explicit"
                    bar = rest.index("|")
                    ids, coords = rest[:bar], rest[bar + 1 :]
                    if len(coords) != n:
                        raise ComplexFormatError(
                            f"expected {n} coordinates after '|'", lineno
                        )
                    if not ids:
                        raise ComplexFormatError("simplex with no vertices", lineno)
                    explicit_pairs.append(
                        (Simplex(tuple(int(t) for t in ids)), Grade.from_seq(coords))
                    )
                else:
                    if mode == "explicit":
                        raise ComplexFormatError(
                            "ungraded simplex in explicit mode", lineno
                        )
                    mode = mode or "vertex"
                    if not rest:
                        raise ComplexFormatError("simplex with no vertices", lineno)
                    vertex_simplices.append(Simplex(tuple(int(t) for t in rest)))
            else:
                raise ComplexFormatError(f"unknown directive {tag!r}", lineno)
        except ComplexFormatError:
            raise
        except (ValueError, TypeError) as exc:
            raise ComplexFormatError(str(exc), lineno) from exc

    if n is None:
        raise ComplexFormatError("missing 'n <int>' header")
    return _assemble(n, mode, vertex_grades, vertex_simplices, explicit_pairs)


def parse_complex_json(text: str) -> MultiFilteredComplex:
    """JSON complex form.

    Vertex mode::

        {"n": 2, "mode": "vertex",
         "vertices": {"0": ["0", "0"], "1": ["2", "1"]},
         "simplices": [[0, 1]]}

    Explicit mode::

        {"n": 2, "mode": "explicit",
         "simplices": [{"vertices": [0, 1], "grade": ["2", "1"]}]}
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexFormatError(f"invalid JSON: {exc}", exc.lineno) from exc
    if not isinstance(data, dict) or "n" not in data:
        raise ComplexFormatError("JSON complex must be an object with key 'n'")
    n = int(data["n"])
    mode = data.get("mode", "explicit")
    try:
        if mode == "vertex":
            vgrades = {
                int(k): Grade.from_seq(v) for k, v in data.get("vertices", {}).items()
            }
            vsimp = [
                Simplex(tuple(int(v) for v in verts))
                for verts in data.get("simplices", [])
            ]
            return _assemble(n, "vertex", vgrades, vsimp, [])
        if mode == "explicit":
            pairs = []
            for entry in data.get("simplices", []):
                pairs.append(
                    (
                        Simplex(tuple(int(v) for v in entry["vertices"])),
                        Grade.from_seq(entry["grade"]),
                    )
                )
            return _assemble(n, "explicit", {}, [], pairs)
    except (ValueError, TypeError, KeyError) as exc:
        raise ComplexFormatError(str(exc)) from exc
    raise ComplexFormatError(f"unknown mode {mode!r}")


def _assemble(n, mode, vertex_grades, vertex_simplices, explicit_pairs):
    if mode == "vertex" or (mode is None and vertex_grades):
        if not vertex_grades and not vertex_simplices:
            return MultiFilteredComplex(n, [])
        for g in vertex_grades.values():
            if g.n != n:
                raise ComplexFormatError(
                    f"vertex grade has {g.n} coordinates, header says n={n}"
                )
        try:
            return lower_star_extend(vertex_grades, vertex_simplices)
        except ValueError as exc:
            raise ComplexFormatError(str(exc)) from exc
    cx = MultiFilteredComplex(n, explicit_pairs)
    issues = validate(cx)
    if issues:
        raise ValidationError(issues)
    return cx


def complex_to_text(cx: MultiFilteredComplex) -> str:
    """Serialize in explicit mode; canonical simplex order, exact rationals."""
    lines = [f"n {cx.n}", "mode explicit"]
    for s, g in cx.simplices:
        ids = " ".join(str(v) for v in s.vertices)
        coords = " ".join(str(c) for c in g.coords)
        lines.append(f"s {ids} | {coords}")
    return "\n".join(lines) + "\n"
