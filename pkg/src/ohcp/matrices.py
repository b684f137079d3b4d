"""Dense arbitrary-precision integer matrices.

Python ints are unbounded, so all determinant and rank computations here
are exact. Matrices are small (boundary matrices of desk-scale complexes),
so no sparse representation is attempted.
"""
from __future__ import annotations

from fractions import Fraction


class IntMatrix:
    """An m x n matrix of Python ints, immutable by convention."""

    __slots__ = ("m", "n", "data")

    def __init__(self, data):
        self.data = [list(map(int, row)) for row in data]
        self.m = len(self.data)
        self.n = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.n:
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def identity(cls, k):
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __repr__(self):
        return f"IntMatrix({self.m}x{self.n})"

    @property
    def shape(self):
        return (self.m, self.n)

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [self.data[i][j] for i in range(self.m)]

    def transpose(self):
        return IntMatrix([[self.data[i][j] for i in range(self.m)]
                          for j in range(self.n)])

    def submatrix(self, rows, cols):
        return IntMatrix([[self.data[i][j] for j in cols] for i in rows])

    def scaled(self, row_signs=None, col_signs=None):
        """Copy with rows/columns multiplied by +-1 (reorientation)."""
        rs = row_signs if row_signs is not None else [1] * self.m
        cs = col_signs if col_signs is not None else [1] * self.n
        return IntMatrix([[rs[i] * cs[j] * self.data[i][j]
                           for j in range(self.n)] for i in range(self.m)])

    def matvec(self, v):
        if len(v) != self.n:
            raise ValueError(f"matvec: expected length {self.n}, got {len(v)}")
        return [sum(self.data[i][j] * v[j] for j in range(self.n))
                for i in range(self.m)]

    def matmul(self, other):
        if self.n != other.m:
            raise ValueError("matmul: shape mismatch")
        return IntMatrix([[sum(self.data[i][k] * other.data[k][j]
                               for k in range(self.n))
                           for j in range(other.n)] for i in range(self.m)])

    def is_zero(self):
        return all(all(e == 0 for e in row) for row in self.data)

    def to_text(self):
        lines = [f"{self.m} {self.n}"]
        for row in self.data:
            lines.append(" ".join(str(e) for e in row))
        return "\n".join(lines) + "\n"


def det_int(M: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    if M.m != M.n:
        raise ValueError("determinant of non-square matrix")
    k = M.m
    if k == 0:
        return 1
    a = [row[:] for row in M.data]
    sign = 1
    prev = 1
    for t in range(k - 1):
        if a[t][t] == 0:
            for r in range(t + 1, k):
                if a[r][t] != 0:
                    a[t], a[r] = a[r], a[t]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(t + 1, k):
            for j in range(t + 1, k):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = a[t][t]
    return sign * a[k - 1][k - 1]


def rank_int(M: IntMatrix) -> int:
    """Rank over the rationals via fraction-free elimination."""
    a = [row[:] for row in M.data]
    m, n = M.m, M.n
    rank = 0
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, m):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for r in range(row + 1, m):
            if a[r][col] != 0:
                f = a[r][col]
                g = a[row][col]
                a[r] = [g * a[r][j] - f * a[row][j] for j in range(n)]
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def solve_square(A: IntMatrix, b):
    """Solve A x = b exactly over Q; returns list of Fractions or None if singular."""
    k = A.m
    if A.n != k or len(b) != k:
        raise ValueError("solve_square: shape mismatch")
    a = [[Fraction(A.data[i][j]) for j in range(k)] + [Fraction(b[i])]
         for i in range(k)]
    for t in range(k):
        piv = None
        for r in range(t, k):
            if a[r][t] != 0:
                piv = r
                break
        if piv is None:
            return None
        a[t], a[piv] = a[piv], a[t]
        inv = a[t][t]
        a[t] = [e / inv for e in a[t]]
        for r in range(k):
            if r != t and a[r][t] != 0:
                f = a[r][t]
                a[r] = [a[r][j] - f * a[t][j] for j in range(k + 1)]
    return [a[i][k] for i in range(k)]
