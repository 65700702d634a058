"""Lie algebras of the classical groups as explicit matrices.

``g`` is cut out by ``M J + J M^T = 0`` (all of ``gl_n`` in type A). The
nilpotent radical ``n`` is its strictly upper triangular part and ``b_-`` its
lower triangular part including the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fpmatrix import nullspace_q, int_matmul
from .weyl import LieType, WeylElement, check_element, form_matrix, matrix_representative

__all__ = ["LieData", "lie_data", "lie_nilpotent_basis", "z_subspace", "in_lie_algebra",
           "strict_upper_coords"]

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LieData:
    lie_type: LieType
    m: int
    n_basis: tuple[Matrix, ...]
    bminus_basis: tuple[Matrix, ...]

    @property
    def dim_n(self) -> int:
        return len(self.n_basis)


def _as_int_matrix(vec, m: int) -> Matrix:
    den = 1
    for a in vec:
        den = den * a.denominator // _gcd(den, a.denominator)
    ints = [int(a * den) for a in vec]
    g = 0
    for a in ints:
        g = _gcd(g, abs(a))
    ints = [a // g for a in ints] if g else ints
    return tuple(tuple(ints[i * m:(i + 1) * m]) for i in range(m))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def in_lie_algebra(M, t: LieType) -> bool:
    """``M J = -J M^T``."""
    if t.tag == "A":
        return True
    J = form_matrix(t)
    MT = [list(c) for c in zip(*M)]
    lhs = int_matmul(M, J)
    rhs = int_matmul(J, MT)
    return all(a == -b for r1, r2 in zip(lhs, rhs) for a, b in zip(r1, r2))


@lru_cache(maxsize=None)
def lie_data(t: LieType) -> LieData:
    m = t.dim
    if t.tag == "A":
        basis = []
        for i in range(m):
            for j in range(m):
                E = [[0] * m for _ in range(m)]
                E[i][j] = 1
                basis.append(tuple(map(tuple, E)))
    else:
        J = form_matrix(t)
        # unknown m_ab sits at column a*m + b; one equation per entry (i, j)
        rows = []
        for i in range(m):
            for j in range(m):
                row = [0] * (m * m)
                for k in range(m):
                    if J[k][j]:
                        row[i * m + k] += J[k][j]
                    if J[i][k]:
                        row[j * m + k] += J[i][k]
                rows.append(row)
        basis = [_as_int_matrix(v, m) for v in nullspace_q(rows, m * m)]

    def support(M):
        return [(i, j) for i in range(m) for j in range(m) if M[i][j]]

    n_basis, bminus = [], []
    for M in basis:
        cells = support(M)
        if all(i < j for i, j in cells):
            n_basis.append(M)
        elif all(i >= j for i, j in cells):
            bminus.append(M)
        else:
            raise AssertionError("Lie algebra basis vector straddles the diagonal")
    key = lambda M: support(M)[0]
    return LieData(t, m, tuple(sorted(n_basis, key=key)), tuple(sorted(bminus, key=key)))


def lie_nilpotent_basis(t: LieType) -> LieData:
    """Basis of ``n`` (and of ``b_-``) for the group of type ``t``."""
    return lie_data(t)


def strict_upper_coords(M) -> list:
    m = len(M)
    return [M[i][j] for i in range(m) for j in range(i + 1, m)]


def _lower_coords(M) -> list:
    m = len(M)
    return [M[i][j] for i in range(m) for j in range(i + 1)]


@lru_cache(maxsize=None)
def _z_subspace(w: WeylElement, t: LieType) -> tuple[Matrix, ...]:
    data = lie_data(t)
    P = matrix_representative(w, t)
    PT = [list(c) for c in zip(*P)]
    conj = [int_matmul(int_matmul(PT, X), P) for X in data.bminus_basis]
    # combinations of the conjugates whose lower-triangular part vanishes
    cols = [_lower_coords(X) for X in conj]
    rows = [list(r) for r in zip(*cols)]
    combos = nullspace_q(rows, len(conj))
    m = data.m
    out = []
    for c in combos:
        M = [[Fraction(0)] * m for _ in range(m)]
        for coeff, X in zip(c, conj):
            if coeff:
                for i in range(m):
                    for j in range(m):
                        M[i][j] += coeff * X[i][j]
        out.append(_as_int_matrix([a for row in M for a in row], m))
    return tuple(out)


def z_subspace(w: WeylElement, t: LieType) -> list[Matrix]:
    """Basis of ``Z_w``, the part of ``n`` inside the ``w``-conjugate of ``b_-``.

    The representative ``P`` of :func:`matrix_representative` sends ``e_k`` to
    ``±e_{w(k)}``; with that column convention the conjugate is ``P^T b_- P``.
    Conjugating by ``P`` instead computes ``Z_{w^-1}``, which breaks Poincare
    duality (``c^{w0}_{u,v} != 0`` iff ``v = w0 u``) once ``w0`` is not central.
    """
    return list(_z_subspace(check_element(w, t), t))
