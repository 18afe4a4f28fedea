"""Exact sparse linear algebra over the rationals.

Everything here is Fraction arithmetic end to end; there is no floating
point fallback anywhere.  Matrices are stored row-wise as {column: value}
dicts, which matches the constraint systems this package produces: very
many short rows over a modest number of columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


class LinalgError(Exception):
    pass


class SparseMatrix:
    """Immutable-ish sparse rational matrix; zero entries are never stored."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise LinalgError("negative matrix dimensions")
        self.rows = rows
        self.cols = cols
        self._rows: list[dict[int, Fraction]] = [dict() for _ in range(rows)]
        if entries:
            for (r, c), v in entries.items():
                self._set(r, c, Fraction(v))

    @classmethod
    def from_rows(cls, cols: int, rows: Iterable[dict]) -> "SparseMatrix":
        rows = list(rows)
        m = cls(len(rows), cols)
        for r, row in enumerate(rows):
            for c, v in row.items():
                m._set(r, c, Fraction(v))
        return m

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "SparseMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        m = cls(rows, cols)
        for r, row in enumerate(data):
            if len(row) != cols:
                raise LinalgError("ragged dense input")
            for c, v in enumerate(row):
                m._set(r, c, Fraction(v))
        return m

    def _set(self, r: int, c: int, v: Fraction):
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise LinalgError(f"entry ({r},{c}) outside {self.rows}x{self.cols}")
        if v:
            self._rows[r][c] = v
        else:
            self._rows[r].pop(c, None)

    def row(self, r: int) -> dict[int, Fraction]:
        return dict(self._rows[r])

    @property
    def entries(self) -> dict[tuple[int, int], Fraction]:
        return {(r, c): v for r, row in enumerate(self._rows) for c, v in row.items()}

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows)

    def mul_vec(self, v: Sequence[Fraction]) -> list[Fraction]:
        if len(v) != self.cols:
            raise LinalgError("vector length does not match column count")
        return [sum((coef * v[c] for c, coef in row.items()), Fraction(0))
                for row in self._rows]

    def to_dense(self) -> list[list[Fraction]]:
        return [[self._rows[r].get(c, Fraction(0)) for c in range(self.cols)]
                for r in range(self.rows)]

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.rows == other.rows
                and self.cols == other.cols and self._rows == other._rows)

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def _rref_rows(rows: list[dict[int, Fraction]], cols: int):
    """In-place reduced row echelon; returns list of (pivot_col, row_id).

    The sweep itself is fraction-free: rows are first scaled to coprime
    integers, eliminations use cross-multiplication, and updated rows are
    divided by their content, so no rational gcd runs inside the hot loop.
    Pivot rows are rescaled to leading-1 Fractions on exit.  Pivot choice
    within a column: the candidate entry with the smallest bit length, to
    limit coefficient growth.  Full reduction is maintained as the sweep
    advances, so settled pivot rows stay short.
    """
    work: list[dict[int, int]] = []
    for row in rows:
        if not row:
            work.append({})
            continue
        den = lcm(*(q.denominator for q in row.values()))
        ints = {c: q.numerator * (den // q.denominator) for c, q in row.items()}
        g = gcd(*ints.values())
        if g > 1:
            ints = {c: v // g for c, v in ints.items()}
        work.append(ints)

    colmap: dict[int, set[int]] = {}
    for rid, row in enumerate(work):
        for c in row:
            colmap.setdefault(c, set()).add(rid)

    pivots: list[tuple[int, int]] = []
    used: set[int] = set()
    for col in range(cols):
        holders = colmap.get(col)
        if not holders:
            continue
        cands = [rid for rid in holders if rid not in used]
        if not cands:
            continue
        rid = min(cands, key=lambda r: (abs(work[r][col]).bit_length(), r))
        used.add(rid)
        pivot_row = work[rid]
        a = pivot_row[col]
        for other in [r for r in holders if r != rid]:
            target = work[other]
            b = target.pop(col)
            if a != 1:
                for c in target:
                    target[c] *= a
            for c, v in pivot_row.items():
                if c == col:
                    continue
                nv = target.get(c, 0) - b * v
                if nv:
                    if c not in target:
                        colmap.setdefault(c, set()).add(other)
                    target[c] = nv
                elif c in target:
                    del target[c]
                    colmap[c].discard(other)
            if target:
                g = gcd(*target.values())
                if g > 1:
                    for c in target:
                        target[c] //= g
        colmap[col] = {rid}
        pivots.append((col, rid))

    for row in rows:
        row.clear()
    for col, rid in pivots:
        a = work[rid][col]
        rows[rid].update((c, Fraction(v, a)) for c, v in work[rid].items())
    return pivots


def rref(m: SparseMatrix) -> tuple[SparseMatrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    rows = [dict(row) for row in m._rows]
    pivots = _rref_rows(rows, m.cols)
    out = SparseMatrix(m.rows, m.cols)
    for pos, (_, rid) in enumerate(pivots):
        out._rows[pos] = rows[rid]
    return out, [col for col, _ in pivots]


def rank(m: SparseMatrix) -> int:
    rows = [dict(row) for row in m._rows]
    return len(_rref_rows(rows, m.cols))


@dataclass
class VectorBasis:
    """A list of linearly independent dense rational vectors."""

    dimension: int
    vectors: list[tuple[Fraction, ...]]

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.dimension:
                raise LinalgError("basis vector length mismatch")

    def __len__(self):
        return len(self.vectors)


def nullspace(m: SparseMatrix) -> VectorBasis:
    """Basis of the exact kernel {v : m v = 0}.

    Every returned vector is re-multiplied through the original matrix as a
    hard postcondition; a nonzero residue means a bug in the elimination,
    not bad data, hence the internal error.
    """
    reduced, pivot_cols = rref(m)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for f in free_cols:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row_pos, pcol in enumerate(pivot_cols):
            coef = reduced._rows[row_pos].get(f)
            if coef:
                v[pcol] = -coef
        vectors.append(tuple(v))
    for v in vectors:
        if any(m.mul_vec(v)):
            raise LinalgError("internal error: kernel vector fails verification")
    return VectorBasis(m.cols, vectors)


def rank_of_projection(basis: VectorBasis, coords: Iterable[int]) -> int:
    """Rank of the basis vectors restricted to the given coordinates."""
    cols = sorted(set(coords))
    for c in cols:
        if not (0 <= c < basis.dimension):
            raise LinalgError(f"coordinate {c} outside dimension {basis.dimension}")
    if not cols or not basis.vectors:
        return 0
    proj = SparseMatrix.from_rows(
        len(cols),
        [{i: vec[c] for i, c in enumerate(cols) if vec[c]} for vec in basis.vectors])
    return rank(proj)


def project_basis(basis: VectorBasis, coords: Iterable[int]) -> VectorBasis:
    """Row-reduced basis of the projection onto the given coordinates."""
    cols = sorted(set(coords))
    if not cols or not basis.vectors:
        return VectorBasis(len(cols), [])
    proj = SparseMatrix.from_rows(
        len(cols),
        [{i: vec[c] for i, c in enumerate(cols) if vec[c]} for vec in basis.vectors])
    reduced, pivots = rref(proj)
    vectors = [tuple(reduced._rows[i].get(c, Fraction(0)) for c in range(len(cols)))
               for i in range(len(pivots))]
    return VectorBasis(len(cols), vectors)
