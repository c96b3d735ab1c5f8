"""Simplicial homology over a prime field: boundary matrices, ranks,
Betti numbers, persistent Betti numbers, and a 1-parameter diagram oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .complexes import (
    MultiFilteredComplex,
    Simplex,
    SubcomplexSelection,
    snap_key,
    sublevel,
)
from .grades import Grade

DEFAULT_PRIME = 2


def _require_prime(p: int) -> int:
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"field modulus must be prime, got {p}")
    return p


@dataclass(frozen=True)
class FieldPrime:
    """Prime field modulus for all matrix arithmetic."""

    p: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        _require_prime(self.p)


@dataclass(frozen=True)
class BoundaryMatrix:
    """Dense boundary matrix of degree k over a face-closed selection.

    Rows are indexed by the (k-1)-simplices of the selection, columns by its
    k-simplices; entry signs follow the orientation induced by sorted vertex
    order ((-1)^j for dropping the j-th vertex), reduced mod p.
    """

    degree: int
    p: int
    row_simplices: tuple[Simplex, ...]
    col_simplices: tuple[Simplex, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_simplices), len(self.col_simplices))


@dataclass(frozen=True)
class PBNValue:
    """A persistent Betti number: rank of the inclusion-induced map."""

    degree: int
    u: Grade
    v: Grade
    value: int


MatrixLike = Union[BoundaryMatrix, Sequence[Sequence[int]]]


def _as_rows(m: MatrixLike) -> list[list[int]]:
    if isinstance(m, BoundaryMatrix):
        return [list(r) for r in m.rows]
    return [list(r) for r in m]


def _matrix_p(m: MatrixLike, p: Optional[int]) -> int:
    if isinstance(m, BoundaryMatrix):
        return m.p
    return DEFAULT_PRIME if p is None else p


# ---------------------------------------------------------------------------
# generic F_p elimination (dense, desk scale)


def _rref_cols(cols: list[list[int]], p: int) -> tuple[int, list[list[int]]]:
    """Column elimination; returns (rank, combos) where combos[j] expresses the
    reduced column j as a combination of the input columns."""
    ncols = len(cols)
    work = [list(c) for c in cols]
    combos = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    pivots: dict[int, int] = {}  # pivot row -> column index
    rank = 0
    for j in range(ncols):
        col = work[j]
        while True:
            piv = -1
            for i in range(len(col) - 1, -1, -1):
                if col[i] % p:
                    piv = i
                    break
            if piv < 0:
                break
            owner = pivots.get(piv)
            if owner is None:
                pivots[piv] = j
                rank += 1
                break
            factor = (col[piv] * pow(work[owner][piv], p - 2, p)) % p
            other = work[owner]
            for i in range(len(col)):
                col[i] = (col[i] - factor * other[i]) % p
            oc = combos[owner]
            cj = combos[j]
            for i in range(ncols):
                cj[i] = (cj[i] - factor * oc[i]) % p
    return rank, [combos[j] for j in range(ncols) if not any(v % p for v in work[j])]


def rank_mod_p(m: MatrixLike, p: Optional[int] = None) -> int:
    """Exact rank over F_p via Gaussian elimination."""
    p = _require_prime(_matrix_p(m, p))
    rows = _as_rows(m)
    if not rows or not rows[0]:
        return 0
    cols = [[rows[i][j] % p for i in range(len(rows))] for j in range(len(rows[0]))]
    rank, _ = _rref_cols(cols, p)
    return rank


def kernel_basis(m: MatrixLike, p: Optional[int] = None) -> list[list[int]]:
    """Columns spanning ker(m) over F_p; count = cols - rank."""
    p = _require_prime(_matrix_p(m, p))
    rows = _as_rows(m)
    if not rows:
        # empty row space: everything is in the kernel
        ncols = 0 if not isinstance(m, BoundaryMatrix) else len(m.col_simplices)
        return [
            [1 if i == j else 0 for i in range(ncols)] for j in range(ncols)
        ]
    ncols = len(rows[0])
    cols = [[rows[i][j] % p for i in range(len(rows))] for j in range(ncols)]
    _, kernel = _rref_cols(cols, p)
    return kernel


# ---------------------------------------------------------------------------
# boundary structure of a complex, cached per (complex, p)


class _Engine:
    """Per-(complex, prime) boundary data and transparent caches.

    All public operations route through here; memoization never changes any
    output (sublevel data depends only on the snap key of the query grade).
    """

    def __init__(self, cx: MultiFilteredComplex, p: int):
        self.cx = cx
        self.p = p
        d = cx.dimension
        self.deg_indices: list[list[int]] = [[] for _ in range(d + 1)]
        self.pos_in_deg: dict[int, int] = {}
        for i, (s, _) in enumerate(cx.simplices):
            self.pos_in_deg[i] = len(self.deg_indices[s.dim])
            self.deg_indices[s.dim].append(i)
        # full-complex boundary columns per degree, rows = positions in deg k-1
        self.columns: list[list[list[tuple[int, int]]]] = [[] for _ in range(d + 1)]
        for k in range(1, d + 1):
            for i in self.deg_indices[k]:
                s, _ = cx.simplices[i]
                col = []
                for j, f in enumerate(s.facets()):
                    fi = cx.index_of(f)
                    if fi is None:
                        raise ValueError(f"selection not face-closed at {s}")
                    sign = (-1) ** j % p
                    col.append((self.pos_in_deg[fi], sign))
                self.columns[k].append(col)
        self._betti: dict = {}
        self._rank: dict = {}
        self._cycles: dict = {}
        self._bnd: dict = {}
        self._pbn: dict = {}

    # -- selection helpers ---------------------------------------------------

    def _deg_present(self, sel: SubcomplexSelection, k: int) -> list[int]:
        """Positions (within degree k) of selected k-simplices."""
        if k < 0 or k >= len(self.deg_indices):
            return []
        return [
            self.pos_in_deg[i] for i in self.deg_indices[k] if sel.mask[i]
        ]

    def _sub_cols(self, sel: SubcomplexSelection, k: int) -> list[list[tuple[int, int]]]:
        """Boundary columns of selected k-simplices (global row positions).

        Face closure guarantees every row touched is itself selected."""
        if k < 1 or k >= len(self.columns):
            return []
        return [
            self.columns[k][self.pos_in_deg[i]]
            for i in self.deg_indices[k]
            if sel.mask[i]
        ]

    # -- F_2 fast path -------------------------------------------------------

    @staticmethod
    def _f2_rank(cols: list[int]) -> int:
        pivots: dict[int, int] = {}
        rank = 0
        for c in cols:
            while c:
                low = c.bit_length() - 1
                owner = pivots.get(low)
                if owner is None:
                    pivots[low] = c
                    rank += 1
                    break
                c ^= owner
        return rank

    @staticmethod
    def _f2_kernel(cols: list[int]) -> list[int]:
        """Kernel combos of the given columns, as bitmasks over column indices."""
        pivots: dict[int, tuple[int, int]] = {}
        kernel = []
        for j, c in enumerate(cols):
            combo = 1 << j
            while c:
                low = c.bit_length() - 1
                owner = pivots.get(low)
                if owner is None:
                    pivots[low] = (c, combo)
                    break
                c ^= owner[0]
                combo ^= owner[1]
            else:
                kernel.append(combo)
        return kernel

    # -- cached quantities ---------------------------------------------------

    def rank_boundary(self, sel: SubcomplexSelection, k: int) -> int:
        key = (sel.key, k)
        if key in self._rank:
            return self._rank[key]
        cols = self._sub_cols(sel, k)
        if self.p == 2:
            packed = [sum(1 << r for r, _ in col) for col in cols]
            rank = self._f2_rank(packed)
        else:
            nrows = len(self.deg_indices[k - 1]) if 0 < k < len(self.deg_indices) else 0
            dense = []
            for col in cols:
                v = [0] * nrows
                for r, sgn in col:
                    v[r] = sgn
                dense.append(v)
            rank, _ = _rref_cols(dense, self.p) if dense else (0, [])
        self._rank[key] = rank
        return rank

    def betti(self, sel: SubcomplexSelection, k: int) -> int:
        key = (sel.key, k)
        if key in self._betti:
            return self._betti[key]
        nk = len(self._deg_present(sel, k))
        b = nk - self.rank_boundary(sel, k) - self.rank_boundary(sel, k + 1)
        self._betti[key] = b
        return b

    def cycle_vectors(self, sel: SubcomplexSelection, k: int):
        """Basis of Z_k of the selection, as vectors over the full complex's
        degree-k positions (F_2: bitmask ints; F_p: dense lists)."""
        key = (sel.key, k)
        if key in self._cycles:
            return self._cycles[key]
        present = self._deg_present(sel, k)
        if k == 0:
            # no boundary target: every 0-chain is a cycle
            if self.p == 2:
                out = [1 << pos for pos in present]
            else:
                nrows = len(self.deg_indices[0]) if self.deg_indices else 0
                out = []
                for pos in present:
                    v = [0] * nrows
                    v[pos] = 1
                    out.append(v)
            self._cycles[key] = out
            return out
        cols = self._sub_cols(sel, k)
        if self.p == 2:
            packed = [sum(1 << r for r, _ in col) for col in cols]
            combos = self._f2_kernel(packed)
            out = []
            for combo in combos:
                vec = 0
                j = 0
                while combo:
                    if combo & 1:
                        vec |= 1 << present[j]
                    combo >>= 1
                    j += 1
                out.append(vec)
        else:
            nrows = len(self.deg_indices[k - 1])
            dense = []
            for col in cols:
                v = [0] * nrows
                for r, sgn in col:
                    v[r] = sgn
                dense.append(v)
            _, combos = _rref_cols(dense, self.p) if dense else (0, [])
            nk_full = len(self.deg_indices[k])
            out = []
            for combo in combos:
                vec = [0] * nk_full
                for j, coeff in enumerate(combo):
                    if coeff % self.p:
                        vec[present[j]] = coeff % self.p
                out.append(vec)
        self._cycles[key] = out
        return out

    def boundary_vectors(self, sel: SubcomplexSelection, k: int):
        """Generators of B_k of the selection (columns of its degree-(k+1)
        boundary), over full-complex degree-k positions; plus their rank."""
        key = (sel.key, k)
        if key in self._bnd:
            return self._bnd[key]
        cols = self._sub_cols(sel, k + 1)
        if self.p == 2:
            vecs = [sum(1 << r for r, _ in col) for col in cols]
            rank = self._f2_rank(list(vecs))
        else:
            nrows = len(self.deg_indices[k]) if 0 <= k < len(self.deg_indices) else 0
            vecs = []
            for col in cols:
                v = [0] * nrows
                for r, sgn in col:
                    v[r] = sgn
                vecs.append(v)
            rank, _ = _rref_cols([list(v) for v in vecs], self.p) if vecs else (0, [])
        self._bnd[key] = (vecs, rank)
        return vecs, rank

    def pbn(self, sel_u: SubcomplexSelection, sel_v: SubcomplexSelection, k: int) -> int:
        key = (sel_u.key, sel_v.key, k)
        if key in self._pbn:
            return self._pbn[key]
        if k < 0 or k >= len(self.deg_indices):
            self._pbn[key] = 0
            return 0
        z = self.cycle_vectors(sel_u, k)
        b, rank_b = self.boundary_vectors(sel_v, k)
        # rank of iota = dim(Z_u + B_v) - dim B_v = dim Z_u - dim(Z_u /\ B_v)
        if self.p == 2:
            total = self._f2_rank(list(z) + list(b))
        else:
            total, _ = _rref_cols([list(v) for v in list(z) + list(b)], self.p) if (z or b) else (0, [])
        value = total - rank_b
        self._pbn[key] = value
        return value


def _engine(cx: MultiFilteredComplex, p: int) -> _Engine:
    _require_prime(p)
    eng = cx._engines.get(p)
    if eng is None:
        eng = _Engine(cx, p)
        cx._engines[p] = eng
    return eng


# ---------------------------------------------------------------------------
# public operations


def boundary_matrix(
    cx: MultiFilteredComplex,
    sel: SubcomplexSelection,
    k: int,
    p: int = DEFAULT_PRIME,
) -> BoundaryMatrix:
    """Degree-k boundary matrix over the selected simplices only."""
    _require_prime(p)
    if k < 0:
        raise ValueError("degree must be >= 0")
    if not sel.is_face_closed():
        raise ValueError("selection is not closed under faces")
    rows_s = [cx.simplices[i][0] for i in sel.indices() if cx.simplices[i][0].dim == k - 1]
    cols_s = [cx.simplices[i][0] for i in sel.indices() if cx.simplices[i][0].dim == k]
    row_pos = {s.vertices: i for i, s in enumerate(rows_s)}
    rows = [[0] * len(cols_s) for _ in rows_s]
    for j, s in enumerate(cols_s):
        for drop, f in enumerate(s.facets()):
            rows[row_pos[f.vertices]][j] = (-1) ** drop % p
    return BoundaryMatrix(
        k, p, tuple(rows_s), tuple(cols_s), tuple(tuple(r) for r in rows)
    )


def betti(
    cx: MultiFilteredComplex,
    sel: SubcomplexSelection,
    k: int,
    p: int = DEFAULT_PRIME,
) -> int:
    """Betti number of the selected subcomplex in degree k."""
    if k < 0 or k > cx.dimension:
        return 0
    return _engine(cx, p).betti(sel, k)


def pbn(
    cx: MultiFilteredComplex,
    k: int,
    u: Grade,
    v: Grade,
    p: int = DEFAULT_PRIME,
) -> int:
    """Persistent Betti number: rank of H_k(sublevel(u)) -> H_k(sublevel(v)).

    Accepts u componentwise <= v (equality allowed; the map is then the
    identity and the value is betti(u)).
    """
    if not u.leq(v):
        raise ValueError(f"pbn requires u below v, got u={u}, v={v}")
    if k < 0 or k > cx.dimension:
        return 0
    eng = _engine(cx, p)
    return eng.pbn(sublevel(cx, u), sublevel(cx, v), k)


def pbn_value(
    cx: MultiFilteredComplex, k: int, u: Grade, v: Grade, p: int = DEFAULT_PRIME
) -> PBNValue:
    return PBNValue(k, u, v, pbn(cx, k, u, v, p))


# ---------------------------------------------------------------------------
# 1-parameter persistence diagram (independent oracle for n=1)


def diagram_1d(
    cx: MultiFilteredComplex, k: int, p: int = DEFAULT_PRIME
) -> list[tuple[Fraction, Union[Fraction, float]]]:
    """Persistence pairing of a 1-parameter filtration by standard column
    reduction; zero-persistence pairs are dropped, essential classes are
    paired with math.inf.

    This is deliberately independent of the persistent-Betti-number route and
    serves as its oracle in the n=1 case.
    """
    if cx.n != 1:
        raise ValueError(f"diagram_1d needs a 1-parameter complex, got n={cx.n}")
    _require_prime(p)
    order = sorted(
        range(cx.size),
        key=lambda i: (cx.simplices[i][1].coords[0], cx.simplices[i][0].dim, cx.simplices[i][0].vertices),
    )
    pos = {i: j for j, i in enumerate(order)}
    inv = pow  # modular inverse via pow(a, p-2, p)

    columns: list[dict[int, int]] = []
    for i in order:
        s, _ = cx.simplices[i]
        col: dict[int, int] = {}
        for drop, f in enumerate(s.facets()):
            fi = cx.index_of(f)
            if fi is None:
                raise ValueError(f"complex not face-closed at {s}")
            col[pos[fi]] = (-1) ** drop % p
        columns.append(col)

    pivot_owner: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    for j, col in enumerate(columns):
        while col:
            low = max(col)
            owner = pivot_owner.get(low)
            if owner is None:
                pivot_owner[low] = j
                pairs.append((low, j))
                break
            factor = (col[low] * inv(columns[owner][low], p - 2, p)) % p
            for r, c in columns[owner].items():
                nv = (col.get(r, 0) - factor * c) % p
                if nv:
                    col[r] = nv
                elif r in col:
                    del col[r]

    killed_rows = {r for r, _ in pairs}
    out: list[tuple[Fraction, Union[Fraction, float]]] = []
    grade_at = lambda j: cx.simplices[order[j]][1].coords[0]
    for r, j in pairs:
        creator, _ = cx.simplices[order[r]]
        if creator.dim != k:
            continue
        birth, death = grade_at(r), grade_at(j)
        if birth < death:
            out.append((birth, death))
    for j, col in enumerate(columns):
        if col:
            continue  # j is a creator
        s, _ = cx.simplices[order[j]]
        if s.dim != k or j in killed_rows:
            continue
        out.append((grade_at(j), math.inf))
    out.sort(key=lambda bd: (bd[0], bd[1]))
    return out
