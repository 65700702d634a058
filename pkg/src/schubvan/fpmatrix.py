"""Dense matrices over a prime field, and exact rational helpers."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["FpMatrix", "rank_mod_p", "nullspace_q", "rank_q", "int_matmul", "int_det"]


class FpMatrix:
    """Row-major matrix with entries reduced modulo an odd prime ``p``."""

    __slots__ = ("rows", "p")

    def __init__(self, rows: Sequence[Sequence[int]], p: int):
        self.p = p
        self.rows = [[int(a) % p for a in row] for row in rows]

    @classmethod
    def identity(cls, m: int, p: int) -> "FpMatrix":
        return cls([[int(i == j) for j in range(m)] for i in range(m)], p)

    @classmethod
    def zeros(cls, r: int, c: int, p: int) -> "FpMatrix":
        return cls([[0] * c for _ in range(r)], p)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __eq__(self, other):
        return isinstance(other, FpMatrix) and self.p == other.p and self.rows == other.rows

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)], self.p)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)], self.p)

    def __neg__(self) -> "FpMatrix":
        return FpMatrix([[-a for a in r] for r in self.rows], self.p)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        p = self.p
        cols = list(zip(*other.rows))
        return FpMatrix([[sum(a * b for a, b in zip(row, col)) % p for col in cols] for row in self.rows], p)

    def transpose(self) -> "FpMatrix":
        return FpMatrix([list(c) for c in zip(*self.rows)], self.p)

    def is_upper_unitriangular(self) -> bool:
        return all(self.rows[i][j] == (1 if i == j else 0)
                   for i in range(len(self.rows)) for j in range(i + 1))

    def rank(self) -> int:
        return rank_mod_p(self.rows, self.p)

    def __repr__(self):
        return f"FpMatrix({self.rows}, p={self.p})"


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over ``F_p`` by Gaussian elimination."""
    A = [[a % p for a in row] for row in rows]
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], p - 2, p)
        A[rank] = [a * inv % p for a in A[rank]]
        for r in range(len(A)):
            if r != rank and A[r][c]:
                f = A[r][c]
                A[r] = [(a - f * b) % p for a, b in zip(A[r], A[rank])]
        rank += 1
        if rank == len(A):
            break
    return rank


def _rref_q(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    A = [[Fraction(a) for a in row] for row in rows]
    pivots: list[int] = []
    if not A:
        return A, pivots
    r = 0
    for c in range(len(A[0])):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        lead = A[r][c]
        A[r] = [a / lead for a in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank_q(rows: Sequence[Sequence]) -> int:
    return len(_rref_q(rows)[1])


def nullspace_q(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}`` over the rationals, one vector per free column."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    A, pivots = _rref_q(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, pc in zip(A, pivots):
            vec[pc] = -row[f]
        basis.append(vec)
    return basis


def int_matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> list[list[int]]:
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def int_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant by cofactor expansion along the first row."""
    m = len(M)
    if m == 0:
        return 1
    if m == 1:
        return M[0][0]
    total = 0
    for j, a in enumerate(M[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * a * int_det(minor)
    return total
