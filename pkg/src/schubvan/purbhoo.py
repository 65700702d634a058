"""Randomized vanishing test over a prime field, in all classical types.

``c^w_{u,v} > 0`` exactly when, for generic unipotent ``rho, omega, tau``,

    rho Z_u rho^-1 + omega Z_v omega^-1 + tau Z_{w0 w} tau^-1 = n.

The test samples the three unipotents mod ``p`` and checks the rank of the
stacked conjugates. Full rank is a certificate; rank deficiency is only
evidence.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, asdict
from typing import Any

from .fpmatrix import FpMatrix, rank_mod_p
from .liealg import LieData, lie_data, lie_nilpotent_basis, z_subspace
from .weyl import LieType, WeylElement, check_element, form_matrix, length, long_element

__all__ = [
    "LieData", "lie_nilpotent_basis", "z_subspace", "random_unipotent", "cayley",
    "VanishVerdict", "vanish_test", "DEFAULT_PRIME", "DEFAULT_TRIALS",
]

DEFAULT_PRIME = 2**31 - 1
DEFAULT_TRIALS = 3

TAGS = ("NonzeroCertified", "ZeroWhp", "ZeroCertified", "Unknown")


@dataclass
class VanishVerdict:
    tag: str
    provenance: str
    trials: int = 0
    prime: int | None = None
    detail: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown verdict tag {self.tag!r}")

    @property
    def vanishes(self) -> bool | None:
        if self.tag == "NonzeroCertified":
            return False
        if self.tag in ("ZeroCertified", "ZeroWhp"):
            return True
        return None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VanishVerdict":
        return cls(**json.loads(text))


def cayley(M: FpMatrix) -> FpMatrix:
    """``(I + M)^-1 (I - M)`` for nilpotent ``M``; the inverse is a finite geometric series."""
    m = M.shape[0]
    p = M.p
    eye = FpMatrix.identity(m, p)
    inv = eye
    power = eye
    neg = -M
    for _ in range(m - 1):
        power = power @ neg
        inv = inv + power
    return inv @ (eye - M)


def _random_nilpotent(data: LieData, p: int, rng: random.Random) -> FpMatrix:
    m = data.m
    acc = [[0] * m for _ in range(m)]
    for N in data.n_basis:
        r = rng.randrange(p)
        if r:
            for i in range(m):
                for j in range(m):
                    if N[i][j]:
                        acc[i][j] += r * N[i][j]
    return FpMatrix(acc, p)


def random_unipotent(t: LieType, p: int, rng: random.Random, *, check: bool = False) -> FpMatrix:
    """Cayley transform of a uniformly random element of ``n`` mod ``p``."""
    if p <= 2:
        raise ValueError("prime must be odd")
    g = cayley(_random_nilpotent(lie_data(t), p, rng))
    if check:
        if not g.is_upper_unitriangular():
            raise AssertionError("Cayley image is not unitriangular")
        if t.tag != "A":
            J = FpMatrix(form_matrix(t), p)
            if g.transpose() @ J @ g != J:
                raise AssertionError("Cayley image does not preserve the form")
    return g


def _inverse_unipotent(g: FpMatrix) -> FpMatrix:
    # g = I + N with N nilpotent
    m = g.shape[0]
    eye = FpMatrix.identity(m, g.p)
    neg = eye - g
    inv, power = eye, eye
    for _ in range(m - 1):
        power = power @ neg
        inv = inv + power
    return inv


def _coordinates(data: LieData) -> list[tuple[int, int]]:
    # one anchor cell per basis vector of n; the supports are pairwise disjoint
    cells = []
    for N in data.n_basis:
        cells.append(next((i, j) for i in range(data.m) for j in range(data.m) if N[i][j]))
    return cells


def _conjugated_rows(basis, g: FpMatrix, ginv: FpMatrix, cells, p: int) -> list[list[int]]:
    rows = []
    for Z in basis:
        X = g @ FpMatrix(Z, p) @ ginv
        rows.append([X.rows[i][j] for i, j in cells])
    return rows


def vanish_test(u: WeylElement, v: WeylElement, w: WeylElement, t: LieType,
                p: int = DEFAULT_PRIME, trials: int = DEFAULT_TRIALS,
                rng: random.Random | None = None) -> VanishVerdict:
    """Randomized decision of ``c^w_{u,v} = 0`` in type ``t``.

    A mismatch of ``l(u) + l(v) + l(w0 w)`` with ``dim n`` settles vanishing by
    degree and returns ``ZeroCertified`` without sampling.
    """
    if p <= 2:
        raise ValueError("prime must be odd")
    if trials < 1:
        raise ValueError("need at least one trial")
    if rng is None:
        rng = random.Random(0)
    u, v, w = (check_element(x, t) for x in (u, v, w))
    data = lie_data(t)
    dim = data.dim_n
    w_dual = long_element(t) * w
    lengths = (length(u, t.tag), length(v, t.tag), length(w_dual, t.tag))
    if sum(lengths) != dim:
        return VanishVerdict("ZeroCertified", "dimension", 0, p,
                             {"lengths": list(lengths), "dim_n": dim})
    if dim == 0:
        return VanishVerdict("NonzeroCertified", "randomized", 0, p, {"rank": 0, "dim_n": 0})

    bases = [z_subspace(x, t) for x in (u, v, w_dual)]
    cells = _coordinates(data)
    best = 0
    for trial in range(1, trials + 1):
        rows: list[list[int]] = []
        for basis in bases:
            if not basis:
                continue
            g = random_unipotent(t, p, rng)
            rows += _conjugated_rows(basis, g, _inverse_unipotent(g), cells, p)
        rank = rank_mod_p(rows, p)
        best = max(best, rank)
        if rank == dim:
            return VanishVerdict("NonzeroCertified", "randomized", trial, p,
                                 {"rank": rank, "dim_n": dim})
    return VanishVerdict("ZeroWhp", "randomized", trials, p, {"rank": best, "dim_n": dim})
