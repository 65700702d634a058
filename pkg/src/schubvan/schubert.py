"""Schubert polynomials, Schubert-Kostka numbers and type-A Schubert coefficients.

Two independent constructions of ``S_w`` are provided: the divided-difference
recursion (:func:`schubert_poly_dd`) and the pipe-dream sum
(:func:`schubert_poly_pd`). Coefficients ``c^w_{u,v}`` come from peeling the
product ``S_u * S_v`` into the Schubert basis; the Postnikov-Stanley signed
sum (:func:`coeff_ps`) is kept as a cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .polyring import (Poly, divided_difference, exponent_vector, lex_min_monomial)
from .weyl import Permutation, code_to_perm, inversions, lehmer_code

__all__ = [
    "PipeDream", "schubert_poly", "schubert_poly_dd", "pipe_dreams", "schubert_poly_pd",
    "kostka", "expand_in_schubert_basis", "coeff_exact", "coeff_ps", "coeff_ps_structure",
    "product_expansion", "format_expansion",
]


# -- divided differences ---------------------------------------------------

@lru_cache(maxsize=None)
def _schubert_dd(window: tuple[int, ...]) -> Poly:
    code = lehmer_code(Permutation(window))
    # dominant permutations (weakly decreasing code) are monomials x^code
    i = max((k for k in range(len(code) - 1) if code[k] < code[k + 1]), default=None)
    if i is None:
        return Poly.from_exponents(code)
    w = list(window)
    w[i], w[i + 1] = w[i + 1], w[i]
    # w has an ascent at i+1, so S_w = d_{i+1} S_{w s_{i+1}}
    return divided_difference(_schubert_dd(tuple(w)), i + 1)


def schubert_poly_dd(w: Permutation) -> Poly:
    """``S_w`` by divided differences, starting from a dominant permutation above ``w``."""
    return _schubert_dd(w.trim().window)


schubert_poly = schubert_poly_dd


# -- pipe dreams -----------------------------------------------------------

@dataclass(frozen=True)
class PipeDream:
    """Cross cells ``(row, col)`` in the staircase ``row + col <= n``."""

    crosses: frozenset[tuple[int, int]]
    n: int

    def monomial(self) -> Poly:
        exps: dict[str, int] = {}
        for r, _ in self.crosses:
            exps[f"x{r}"] = exps.get(f"x{r}", 0) + 1
        return Poly.monomial(exps)

    def _trace(self, k: int) -> tuple[int, list[tuple[int, int]]]:
        # enter row k from the left; elbows turn right->up and up->right
        r, c, heading = k, 1, "right"
        visited = []
        while True:
            if (r, c) in self.crosses:
                visited.append((r, c))
            else:
                heading = "up" if heading == "right" else "right"
            if heading == "up":
                if r == 1:
                    return c, visited
                r -= 1
            else:
                c += 1

    def exits(self) -> tuple[int, ...]:
        """Exit column at the top edge of the pipe entering row ``k``, ``k = 1..n``."""
        return tuple(self._trace(k)[0] for k in range(1, self.n + 1))

    def crossing_counts(self) -> dict[tuple[int, int], int]:
        """Number of crosses shared by each pair of pipes."""
        tiles: dict[tuple[int, int], list[int]] = {}
        for k in range(1, self.n + 1):
            for cell in self._trace(k)[1]:
                tiles.setdefault(cell, []).append(k)
        pairs: dict[tuple[int, int], int] = {}
        for pipes in tiles.values():
            for a, b in itertools.combinations(sorted(pipes), 2):
                pairs[(a, b)] = pairs.get((a, b), 0) + 1
        return pairs


def _staircase(n: int) -> list[tuple[int, int]]:
    # rows top to bottom, each row right to left: the crosses read off s_{r+c-1}
    return [(r, c) for r in range(1, n) for c in range(n - r, 0, -1)]


def pipe_dreams(w: Permutation) -> list[PipeDream]:
    """All reduced pipe dreams (RC-graphs) of ``w``, by backtracking.

    A cross at ``(r, c)`` contributes ``s_{r+c-1}``; reading the crosses row by
    row, right to left, must give a reduced word for ``w``.
    """
    w = w.trim()
    n = max(w.n, 1)
    target = w.pad(n)
    ell = inversions(target)
    cells = _staircase(n)
    found: list[PipeDream] = []

    def prefix_ok(x: tuple[int, ...], lx: int) -> bool:
        # x is a left factor of w with lengths adding: l(x^{-1} w) = l(w) - l(x)
        xinv = [0] * n
        for i, a in enumerate(x):
            xinv[a - 1] = i + 1
        rest = tuple(xinv[target(i) - 1] for i in range(1, n + 1))
        return inversions(Permutation(rest)) == ell - lx

    def walk(pos: int, x: tuple[int, ...], lx: int, chosen: list[tuple[int, int]]):
        if lx == ell:
            if x == target.window:
                found.append(PipeDream(frozenset(chosen), n))
            return
        if len(cells) - pos < ell - lx:
            return
        r, c = cells[pos]
        k = r + c - 1
        if x[k - 1] < x[k]:
            y = list(x)
            y[k - 1], y[k] = y[k], y[k - 1]
            y = tuple(y)
            if prefix_ok(y, lx + 1):
                chosen.append((r, c))
                walk(pos + 1, y, lx + 1, chosen)
                chosen.pop()
        walk(pos + 1, x, lx, chosen)

    walk(0, tuple(range(1, n + 1)), 0, [])
    return found


@lru_cache(maxsize=None)
def _schubert_pd(window: tuple[int, ...]) -> Poly:
    total = Poly()
    for pd in pipe_dreams(Permutation(window)):
        total = total + pd.monomial()
    return total


def schubert_poly_pd(w: Permutation) -> Poly:
    """``S_w`` as the sum of ``x^H`` over pipe dreams ``H``."""
    return _schubert_pd(w.trim().window)


def kostka(w: Permutation, alpha) -> int:
    """Schubert-Kostka number: coefficient of ``x^alpha`` in ``S_w``."""
    return schubert_poly_pd(w).coeff({f"x{i}": a for i, a in enumerate(alpha, start=1)})


# -- basis expansion -------------------------------------------------------

def expand_in_schubert_basis(f: Poly, *, max_steps: int | None = None) -> dict[Permutation, int]:
    """Write ``f`` as an integer combination of Schubert polynomials.

    Peels off the lex-minimal monomial ``c * x^a`` as ``c * S_{code^{-1}(a)}``
    until nothing is left.
    """
    if max_steps is None:
        max_steps = 64 * (len(f) + 1) + 1000
    out: dict[Permutation, int] = {}
    rest = f
    for _ in range(max_steps):
        if not rest:
            return out
        m, c = lex_min_monomial(rest)
        w = code_to_perm(exponent_vector(m))
        out[w] = out.get(w, 0) + c
        rest = rest - schubert_poly(w).scale(c)
    raise RuntimeError("Schubert expansion did not terminate; lex-min peeling assumption broken")


@lru_cache(maxsize=4096)
def _product(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[tuple[Permutation, int], ...]:
    f = schubert_poly(Permutation(u)) * schubert_poly(Permutation(v))
    return tuple(expand_in_schubert_basis(f).items())


def product_expansion(u: Permutation, v: Permutation) -> dict[Permutation, int]:
    """``S_u * S_v`` in the Schubert basis."""
    return dict(_product(u.trim().window, v.trim().window))


def coeff_exact(u: Permutation, v: Permutation, w: Permutation) -> int:
    """Schubert coefficient ``c^w_{u,v}``."""
    return product_expansion(u, v).get(w, 0)


def format_expansion(expansion: dict[Permutation, int]) -> str:
    rows = sorted(expansion.items(), key=lambda item: item[0].trim().window)
    return "\n".join(f"{w}: {c}" for w, c in rows)


# -- Postnikov-Stanley -----------------------------------------------------

def _sign(p: tuple[int, ...]) -> int:
    sign = 1
    for i, j in itertools.combinations(range(len(p)), 2):
        if p[i] > p[j]:
            sign = -sign
    return sign


def _support(w: Permutation, n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    for m, c in schubert_poly_pd(w).terms.items():
        vec = exponent_vector(m)
        if len(vec) > n:
            continue
        yield vec + (0,) * (n - len(vec)), c


def coeff_ps(u: Permutation, v: Permutation, w: Permutation, n: int) -> int:
    """The signed triple sum over ``sigma`` in ``S_n`` and ``alpha + beta + gamma = sigma(rho)``.

    Every monomial triple is forced to total degree ``n(n-1)/2``, so this is a
    triple intersection number; see :func:`coeff_ps_structure` for ``c^w_{u,v}``.
    """
    rho = tuple(range(n - 1, -1, -1))
    su, sv = list(_support(u, n)), list(_support(v, n))
    sw = dict(_support(w, n))
    total = 0
    for sigma in itertools.permutations(range(n)):
        delta = tuple(rho[sigma[i]] for i in range(n))
        sgn = _sign(sigma)
        for a, ka in su:
            if any(x > d for x, d in zip(a, delta)):
                continue
            for b, kb in sv:
                g = tuple(d - x - y for d, x, y in zip(delta, a, b))
                if min(g) < 0:
                    continue
                kw = sw.get(g)
                if kw:
                    total += sgn * ka * kb * kw
    return total


def coeff_ps_structure(u: Permutation, v: Permutation, w: Permutation, n: int) -> int:
    """``c^w_{u,v}`` for ``u, v, w`` in ``S_n`` via the signed sum at ``w0 * w``."""
    w0 = Permutation(tuple(range(n, 0, -1)))
    return coeff_ps(u, v, w0 * w.pad(n), n)
