"""Exact integer matrix algebra: Smith normal form, Hermite forms, kernels.

Everything runs on Python's arbitrary-precision integers (plus exact
``Fraction`` solves where a rational intermediate is unavoidable).  No
floating point is used anywhere: normal-form intermediates can exceed any
fixed width, and a silent overflow would corrupt every invariant built on
top of this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError

IntVector = tuple[int, ...]


def _check_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DomainError(f"exact integer expected, got {x!r}")
    return x


def dot(u, v) -> int:
    if len(u) != len(v):
        raise DomainError("dot product of vectors of unequal length")
    return sum(a * b for a, b in zip(u, v))


def primitive(v) -> IntVector:
    """Divide an integer vector by the gcd of its entries.

    The result generates the same ray (it is ``v / g`` with ``g > 0``) and
    has coprime entries.  The zero vector has no primitive representative.
    """
    vec = tuple(_check_int(x) for x in v)
    if not any(vec):
        raise DomainError("the zero vector has no primitive representative")
    g = 0
    for x in vec:
        g = gcd(g, x)
    return tuple(x // g for x in vec)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored as a tuple of row tuples.

    ``cols`` is explicit so that matrices with zero rows or zero columns
    (empty kernels, empty constraint systems) stay well defined.
    """

    entries: tuple[tuple[int, ...], ...]
    cols: int

    def __post_init__(self):
        object.__setattr__(
            self,
            "entries",
            tuple(tuple(_check_int(x) for x in row) for row in self.entries),
        )
        if self.cols < 0:
            raise DomainError("column count must be nonnegative")
        for row in self.entries:
            if len(row) != self.cols:
                raise DomainError("ragged rows in matrix")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(r) for r in rows)
        if cols is None:
            if not rows:
                raise DomainError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def is_empty(self) -> bool:
        return self.rows == 0 or self.cols == 0

    def row(self, i: int) -> IntVector:
        return self.entries[i]

    def column(self, j: int) -> IntVector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> tuple[IntVector, ...]:
        return tuple(self.column(j) for j in range(self.cols))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(self.column(j) for j in range(self.cols)), self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DomainError("matrix product shape mismatch")
        ot = other.transpose()
        return IntMatrix(
            tuple(tuple(dot(r, c) for c in ot.entries) for r in self.entries),
            other.cols,
        )

    def mat_vec(self, v) -> IntVector:
        if len(v) != self.cols:
            raise DomainError("matrix-vector shape mismatch")
        return tuple(dot(row, v) for row in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise DomainError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def rank(self) -> int:
        """Rank over the rationals, via integer cross-multiplication echelon."""
        a = [list(row) for row in self.entries]
        m, n = self.rows, self.cols
        r = 0
        for c in range(n):
            pivot = next((i for i in range(r, m) if a[i][c] != 0), None)
            if pivot is None:
                continue
            a[r], a[pivot] = a[pivot], a[r]
            for i in range(r + 1, m):
                if a[i][c] != 0:
                    p, q = a[r][c], a[i][c]
                    a[i] = [p * a[i][j] - q * a[r][j] for j in range(n)]
            r += 1
            if r == m:
                break
        return r

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _row_sub(a, i, t, q):
    # row_i -= q * row_t
    ri, rt = a[i], a[t]
    for j in range(len(ri)):
        ri[j] -= q * rt[j]


def _negate_row(a, i):
    a[i] = [-x for x in a[i]]


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return unimodular ``U``, diagonal ``D`` and unimodular ``V`` with
    ``U @ a @ V == D``, the diagonal nonnegative with ``d_i | d_{i+1}``.

    Classic elimination: repeatedly move a least-magnitude entry to the
    pivot, clear its row and column, and absorb any entry the pivot fails
    to divide.  Deterministic pivot choice keeps results reproducible.
    """
    if a.is_empty:
        raise DomainError("smith_normal_form requires a nonempty matrix")
    m, n = a.rows, a.cols
    A = [list(row) for row in a.entries]
    U = [list(row) for row in IntMatrix.identity(m).entries]
    V = [list(row) for row in IntMatrix.identity(n).entries]
    # column operations act on V; run them through the transpose helper
    Vt = [list(col) for col in zip(*V)]

    def col_swap(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        _swap_rows(Vt, j, k)

    def col_sub(j, t, q):
        # col_j -= q * col_t
        for row in A:
            row[j] -= q * row[t]
        _row_sub(Vt, j, t, q)

    def min_entry(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v != 0 and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        return best

    t = 0
    while t < min(m, n):
        best = min_entry(t)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            _swap_rows(A, t, pi)
            _swap_rows(U, t, pi)
        if pj != t:
            col_swap(t, pj)
        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    if q:
                        _row_sub(A, i, t, q)
                        _row_sub(U, i, t, q)
                    if A[i][t] != 0:
                        dirty = True
            if dirty:
                i0 = min(
                    (i for i in range(t, m) if A[i][t] != 0),
                    key=lambda i: (abs(A[i][t]), i),
                )
                if i0 != t:
                    _swap_rows(A, t, i0)
                    _swap_rows(U, t, i0)
                continue
            # clear the pivot row
            dirty = False
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    if q:
                        col_sub(j, t, q)
                    if A[t][j] != 0:
                        dirty = True
            if dirty:
                j0 = min(
                    (j for j in range(t, n) if A[t][j] != 0),
                    key=lambda j: (abs(A[t][j]), j),
                )
                if j0 != t:
                    col_swap(t, j0)
                continue
            # pivot must divide the remaining block for the chain to hold
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _row_sub(A, t, offender, -1)  # row_t += row_offender
            _row_sub(U, t, offender, -1)
        if A[t][t] < 0:
            _negate_row(A, t)
            _negate_row(U, t)
        t += 1

    V = [list(col) for col in zip(*Vt)] if Vt else [[] for _ in range(n)]
    return (
        IntMatrix.from_rows(U, m),
        IntMatrix.from_rows(A, n),
        IntMatrix.from_rows(V, n),
    )


def row_hermite_form(a: IntMatrix) -> IntMatrix:
    """Canonical row-style Hermite form (row span preserved).

    Echelon with positive pivots; entries above each pivot reduced into
    ``[0, pivot)``.  Zero rows are dropped.
    """
    if a.cols == 0:
        return IntMatrix((), a.cols)
    A = [list(row) for row in a.entries]
    m, n = len(A), a.cols
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, m) if A[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(A[i][c]), i))
            if i0 != r:
                _swap_rows(A, r, i0)
            done = True
            for i in range(r + 1, m):
                if A[i][c] != 0:
                    q = A[i][c] // A[r][c]
                    _row_sub(A, i, r, q)
                    if A[i][c] != 0:
                        done = False
            if done:
                break
        if r < m and A[r][c] != 0:
            if A[r][c] < 0:
                _negate_row(A, r)
            for i in range(r):
                q = A[i][c] // A[r][c]
                if q:
                    _row_sub(A, i, r, q)
            r += 1
            if r == m:
                break
    return IntMatrix.from_rows([row for row in A[:r]], n)


def column_hermite_form(a: IntMatrix) -> IntMatrix:
    """Canonical form of the column lattice: Hermite on the transpose."""
    if a.rows == 0:
        return IntMatrix((), 0)
    h = row_hermite_form(a.transpose())
    return IntMatrix(tuple(h.column(j) for j in range(h.cols)), h.rows)


def integer_kernel(a: IntMatrix) -> IntMatrix:
    """Saturated integer basis of ``{c : a @ c = 0}``, as matrix columns.

    The basis comes from the unimodular right factor of the Smith form, so
    the column span equals its saturation; columns are then put in Hermite
    form so repeated runs are bit-identical.
    """
    if a.is_empty:
        raise DomainError("integer_kernel requires a nonempty matrix")
    _, d, v = smith_normal_form(a)
    m, n = a.rows, a.cols
    rank = sum(1 for i in range(min(m, n)) if d.entries[i][i] != 0)
    if rank == n:
        return IntMatrix(tuple(() for _ in range(n)), 0)
    cols = [v.column(j) for j in range(rank, n)]
    k = IntMatrix(tuple(zip(*cols)), len(cols))
    return column_hermite_form(k)


def solve_integer(a: IntMatrix, b) -> IntVector | None:
    """One integer solution of ``a @ x = b``, or ``None`` if none exists."""
    if a.is_empty:
        raise DomainError("solve_integer requires a nonempty matrix")
    if len(b) != a.rows:
        raise DomainError("right-hand side length mismatch")
    u, d, v = smith_normal_form(a)
    c = u.mat_vec(tuple(b))
    m, n = a.rows, a.cols
    y = [0] * n
    for i in range(m):
        di = d.entries[i][i] if i < min(m, n) else 0
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di != 0:
                return None
            y[i] = c[i] // di
    return v.mat_vec(tuple(y))


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant ±1."""
    if a.rows != a.cols:
        raise DomainError("inverse of a non-square matrix")
    n = a.rows
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a.entries)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c] != 0), None)
        if pivot is None:
            raise DomainError("matrix is singular")
        work[c], work[pivot] = work[pivot], work[c]
        pv = work[c][c]
        work[c] = [x / pv for x in work[c]]
        for i in range(n):
            if i != c and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    inv = []
    for row in work:
        out = []
        for x in row[n:]:
            if x.denominator != 1:
                raise DomainError("matrix is not unimodular")
            out.append(int(x))
        inv.append(tuple(out))
    return IntMatrix(tuple(inv), n)
