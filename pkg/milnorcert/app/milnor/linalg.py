"""
Exact linear algebra over Q(zeta_N).

Matrices are lists of rows of CycloNum; every routine copies its input.
Gauss-Jordan elimination serves rank, rref and nullspace; the oracle uses the
fraction-free (Bareiss) rank.  ``EchelonBasis`` grows a fully reduced row
basis one row at a time for stacked-kernel computations.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .cyclo import CycloNum

Vector = list[CycloNum]
Matrix = list[list[CycloNum]]


def zeros(rows: int, cols: int, order: int) -> Matrix:
    zero = CycloNum.zero(order)
    return [[zero] * cols for _ in range(rows)]


def identity(size: int, order: int) -> Matrix:
    out = zeros(size, size, order)
    one = CycloNum.one(order)
    for i in range(size):
        out[i][i] = one
    return out


def mat_mul(a: Sequence[Sequence[CycloNum]], b: Sequence[Sequence[CycloNum]]) -> Matrix:
    if not a:
        return []
    if len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {len(b)}x?")
    cols = len(b[0]) if b else 0
    order = a[0][0].order
    out = zeros(len(a), cols, order)
    for i, row in enumerate(a):
        acc = out[i]
        for k, x in enumerate(row):
            if x.is_zero():
                continue
            for j, y in enumerate(b[k]):
                if not y.is_zero():
                    acc[j] = acc[j] + x * y
    return out


def mat_vec(a: Sequence[Sequence[CycloNum]], v: Sequence[CycloNum]) -> Vector:
    out = []
    for row in a:
        acc = CycloNum.zero(v[0].order)
        for x, y in zip(row, v):
            if not x.is_zero() and not y.is_zero():
                acc = acc + x * y
        out.append(acc)
    return out


def dot(u: Sequence[CycloNum], v: Sequence[CycloNum]) -> CycloNum:
    acc = CycloNum.zero(u[0].order)
    for x, y in zip(u, v):
        if not x.is_zero() and not y.is_zero():
            acc = acc + x * y
    return acc


def cross(u: Sequence[CycloNum], v: Sequence[CycloNum]) -> Vector:
    return [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]


def rref(rows: Sequence[Sequence[CycloNum]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (zero rows dropped) and the pivot columns."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(top, len(work)) if not work[r][col].is_zero()), None)
        if pivot_row is None:
            continue
        work[top], work[pivot_row] = work[pivot_row], work[top]
        inv = work[top][col].inverse()
        work[top] = [x * inv for x in work[top]]
        for r in range(len(work)):
            if r != top and not work[r][col].is_zero():
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[top])]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(rows: Sequence[Sequence[CycloNum]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[CycloNum]], ncols: int, order: int) -> Matrix:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    one = CycloNum.one(order)
    basis = []
    for f in free:
        vec = [CycloNum.zero(order)] * ncols
        vec[f] = one
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def fraction_free_rank(rows: Sequence[Sequence[CycloNum]]) -> int:
    """Bareiss elimination; every division is by the previous nonzero pivot."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    nrows, ncols = len(work), len(work[0])
    order = work[0][0].order
    zero = CycloNum.zero(order)
    prev = CycloNum.one(order)
    top = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(top, nrows) if not work[r][col].is_zero()), None)
        if pivot_row is None:
            continue
        work[top], work[pivot_row] = work[pivot_row], work[top]
        pivot = work[top][col]
        for r in range(top + 1, nrows):
            lead = work[r][col]
            row = work[r]
            for c in range(col + 1, ncols):
                row[c] = (pivot * row[c] - lead * work[top][c]) / prev
            row[col] = zero
        prev = pivot
        top += 1
        if top == nrows:
            break
    return top


class EchelonBasis:
    """Fully reduced row basis, extended one row at a time."""

    def __init__(self, ncols: int, order: int) -> None:
        self.ncols = ncols
        self.order = order
        self._rows: dict[int, Vector] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, row: Iterable[CycloNum]) -> Vector:
        vec = list(row)
        for p, basis_row in self._rows.items():
            factor = vec[p]
            if not factor.is_zero():
                vec = [x - factor * y for x, y in zip(vec, basis_row)]
        return vec

    def add(self, row: Iterable[CycloNum]) -> bool:
        """Insert ``row``; returns False when it already lies in the span."""
        vec = self.reduce(row)
        pivot: Optional[int] = next((c for c, x in enumerate(vec) if not x.is_zero()), None)
        if pivot is None:
            return False
        inv = vec[pivot].inverse()
        vec = [x * inv for x in vec]
        for p, basis_row in list(self._rows.items()):
            factor = basis_row[pivot]
            if not factor.is_zero():
                self._rows[p] = [x - factor * y for x, y in zip(basis_row, vec)]
        self._rows[pivot] = vec
        return True
