"""Exact integer linear algebra: Smith and Hermite normal forms, integer kernels.

Entries are Python ints throughout, so there is no overflow and no modular
shortcut. Matrices are small (relation matrices of desk-scale presentations),
so the straightforward elimination algorithms are fast enough.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInput

__all__ = [
    "IntMatrix",
    "smith_normal_form",
    "hermite_normal_form",
    "integer_kernel_basis",
    "determinant",
    "rank",
]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InvalidInput("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise InvalidInput("entry count does not match rows x cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.entries]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InvalidInput(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in ocols) for r in self.entries),
        )

    def apply(self, x: Sequence[int]) -> list[int]:
        """Matrix-vector product."""
        if len(x) != self.cols:
            raise InvalidInput("vector length does not match column count")
        return [sum(a * b for a, b in zip(r, x)) for r in self.entries]

    def is_diagonal(self) -> bool:
        return all(v == 0 for i, r in enumerate(self.entries) for j, v in enumerate(r) if i != j)

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.entries) + "]"


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, S, V)`` with ``U @ m @ V == S``.

    ``U`` and ``V`` are unimodular, ``S`` is diagonal with nonnegative entries
    ``d1 | d2 | ...``. The pivot at each stage is the entry of least nonzero
    absolute value in the active submatrix, ties broken by lowest (row, col).
    """
    a = m.to_lists()
    nr, nc = m.rows, m.cols
    u = _identity(nr)
    v = _identity(nc)

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    for t in range(min(nr, nc)):
        while True:
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // p
                    add_row(i, t, -q)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // p
                    add_col(j, t, -q)
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return IntMatrix.from_rows(u, nr), IntMatrix.from_rows(a, nc), IntMatrix.from_rows(v, nc)


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form: return ``(U, H)`` with ``U @ m == H``.

    ``H`` is in row echelon form with positive pivots, entries above each
    pivot reduced into ``[0, pivot)``, and zero rows at the bottom.
    """
    a = m.to_lists()
    nr, nc = m.rows, m.cols
    u = _identity(nr)
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        while True:
            nz = [i for i in range(r, nr) if a[i][c]]
            if not nz:
                break
            k = min(nz, key=lambda i: (abs(a[i][c]), i))
            a[r], a[k] = a[k], a[r]
            u[r], u[k] = u[k], u[r]
            done = True
            for i in range(r + 1, nr):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    done = done and a[i][c] == 0
            if done:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return IntMatrix.from_rows(u, nr), IntMatrix.from_rows(a, nc)


def rank(m: IntMatrix) -> int:
    _, s, _ = smith_normal_form(m)
    return sum(1 for d in s.diagonal() if d)


def integer_kernel_basis(m: IntMatrix) -> list[list[int]]:
    """Lattice basis of ``{x in Z^cols : m x = 0}``.

    Taken from the trailing columns of ``V`` in the Smith form, then put in
    Hermite normal form so the basis is canonical for a given kernel.
    """
    _, s, v = smith_normal_form(m)
    r = sum(1 for d in s.diagonal() if d)
    basis = [v.column(j) for j in range(r, m.cols)]
    if not basis:
        return []
    _, h = hermite_normal_form(IntMatrix.from_rows(basis, m.cols))
    return [list(row) for row in h.entries if any(row)]


def determinant(m: IntMatrix) -> int:
    """Fraction-free (Bareiss) determinant."""
    if m.rows != m.cols:
        raise InvalidInput("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def matrix_from_columns(columns: Iterable[Sequence[int]], rows: int) -> IntMatrix:
    cols = list(columns)
    return IntMatrix(rows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(rows)))
