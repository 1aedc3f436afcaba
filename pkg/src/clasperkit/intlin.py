"""Exact integer and mod-2 linear algebra.

Everything here works on Python ints and ``fractions.Fraction``; no floating
point is used anywhere, so Smith forms, signatures and inverses are exact for
arbitrarily large entries.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence


class NotSymmetric(ValueError):
    pass


class Singular(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.T.row(j) for j in range(other.cols)]
        return IntMatrix(
            self.rows, other.cols,
            tuple(sum(a * b for a, b in zip(self.row(i), c)) for i in range(self.rows) for c in cols),
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def apply(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        return [sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.rows)]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def diag(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def submatrix(self, idx: Sequence[int]) -> IntMatrix:
        """Principal submatrix on the given indices."""
        return IntMatrix.from_rows([[self[i, j] for j in idx] for i in idx], cols=len(idx))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})" if self.rows else f"IntMatrix.zeros(0, {self.cols})"


def as_matrix(A) -> IntMatrix:
    if isinstance(A, IntMatrix):
        return A
    return IntMatrix.from_rows(A)


def block_diag(*blocks) -> IntMatrix:
    blocks = [as_matrix(b) for b in blocks]
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = [[0] * m for _ in range(n)]
    r = c = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r + i][c + j] = b[i, j]
        r += b.rows
        c += b.cols
    return IntMatrix.from_rows(out, cols=m)


def determinant(A) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    A = as_matrix(A)
    if A.rows != A.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = A.rows
    M = A.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


# --------------------------------------------------------------------------
# Smith normal form


class SnfResult(NamedTuple):
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return self.D.diag()


def smith_normal_form(A) -> SnfResult:
    """Return ``U, D, V`` with ``U @ A @ V == D`` and ``U, V`` unimodular.

    Pivots are the smallest nonzero absolute value in the active block,
    ties broken by lowest (row, col), so the transforms are reproducible.
    """
    A = as_matrix(A)
    m, n = A.shape
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = abs(D[i][j])
                if x and (best is None or x < best[0]):
                    best = (x, i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            # clear column t and row t, re-pivoting whenever a smaller remainder appears
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        dirty = True
            if dirty:
                best = None
                for i in range(t, m):
                    x = abs(D[i][t])
                    if x and (best is None or x < best[0]):
                        best = (x, i, t)
                for j in range(t + 1, n):
                    x = abs(D[t][j])
                    if x and x < best[0]:
                        best = (x, t, j)
                _, i, j = best
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            p = D[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return SnfResult(
        IntMatrix.from_rows(U, cols=m), IntMatrix.from_rows(D, cols=n), IntMatrix.from_rows(V, cols=n)
    )


def integer_kernel(A) -> list[list[int]]:
    """Basis of the integer kernel {x : A x = 0}, read off the Smith transform."""
    A = as_matrix(A)
    U, D, V = smith_normal_form(A)
    rank = sum(1 for d in D.diag() if d)
    return [[V[i, j] for i in range(A.cols)] for j in range(rank, A.cols)]


# --------------------------------------------------------------------------
# Rational linear algebra


def signature(S) -> int:
    """Signature of a symmetric integer matrix, by exact congruence diagonalisation.

    Uses 1x1 pivots when a nonzero diagonal entry remains and otherwise a 2x2
    hyperbolic pivot ``[[0, b], [b, 0]]`` which contributes zero.
    """
    S = as_matrix(S)
    if not S.is_symmetric():
        raise NotSymmetric("signature requires a symmetric matrix")
    M = [[Fraction(x) for x in row] for row in S.tolist()]
    sig = 0
    while M:
        n = len(M)
        k = next((i for i in range(n) if M[i][i] != 0), None)
        if k is not None:
            p = M[k][k]
            sig += 1 if p > 0 else -1
            rest = [i for i in range(n) if i != k]
            M = [[M[i][j] - M[i][k] * M[k][j] / p for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if M[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        b = M[i][j]
        # inverse of [[0, b], [b, 0]] is [[0, 1/b], [1/b, 0]]
        rest = [r for r in range(n) if r not in pair]
        M = [
            [M[r][c] - (M[r][i] * M[j][c] + M[r][j] * M[i][c]) / b for c in rest]
            for r in rest
        ]
    return sig


def rational_inverse(S) -> list[list[Fraction]]:
    S = as_matrix(S)
    if S.rows != S.cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = S.rows
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(S.tolist())]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise Singular("matrix is singular")
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return [row[n:] for row in M]


# --------------------------------------------------------------------------
# Mod-2 linear algebra


class AffineSolution(NamedTuple):
    """Solution set ``particular + span(kernel)``; ``particular`` is None when inconsistent."""

    particular: list[int] | None
    kernel: list[list[int]]

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def _rows_mod2(A: IntMatrix) -> list[int]:
    # bit j of row i is A[i, j] mod 2
    return [sum(((A[i, j] & 1) << j) for j in range(A.cols)) for i in range(A.rows)]


def _bits(x: int, n: int) -> list[int]:
    return [(x >> j) & 1 for j in range(n)]


def solve_mod2_affine(A, b: Sequence[int]) -> AffineSolution:
    A = as_matrix(A)
    if A.rows != len(b):
        raise DimensionMismatch(f"{A.rows} equations but right-hand side of length {len(b)}")
    n = A.cols
    rows = [(r, bit & 1) for r, bit in zip(_rows_mod2(A), b)]
    pivots: list[tuple[int, int, int]] = []  # (column, row bits, rhs)
    for r, rhs in rows:
        for col, pr, prhs in pivots:
            if (r >> col) & 1:
                r ^= pr
                rhs ^= prhs
        if r == 0:
            if rhs:
                return AffineSolution(None, _kernel_from_pivots(pivots, n))
            continue
        col = (r & -r).bit_length() - 1
        # keep reduced form: clear the new pivot column from existing rows
        pivots = [
            (c, pr ^ r, prhs ^ rhs) if (pr >> col) & 1 else (c, pr, prhs)
            for c, pr, prhs in pivots
        ]
        pivots.append((col, r, rhs))
    x = 0
    for col, _, rhs in pivots:
        if rhs:
            x |= 1 << col
    return AffineSolution(_bits(x, n), _kernel_from_pivots(pivots, n))


def _kernel_from_pivots(pivots, n: int) -> list[list[int]]:
    pivot_cols = {c for c, _, _ in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        x = 1 << free
        for col, pr, _ in pivots:
            if (pr >> free) & 1:
                x |= 1 << col
        basis.append(_bits(x, n))
    return basis


def rank_mod2(A) -> int:
    A = as_matrix(A)
    basis: list[int] = []
    for r in _rows_mod2(A):
        for v in basis:
            r = min(r, r ^ v)
        if r:
            basis.append(r)
    return len(basis)


def nullity_mod2(A) -> int:
    A = as_matrix(A)
    return A.cols - rank_mod2(A)


def span_mod2(vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    """Echelon basis of the GF(2) span of ``vectors``."""
    basis: list[int] = []
    n = len(vectors[0]) if vectors else 0
    for v in vectors:
        r = sum((x & 1) << j for j, x in enumerate(v))
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return [_bits(b, n) for b in basis]
