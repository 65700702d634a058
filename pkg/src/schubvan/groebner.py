"""Buchberger's algorithm over ``F_p`` and solution counting for specialized systems.

Polynomials are dicts from exponent tuples to residues; the order is degrevlex
with the first variable largest.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .lifted import LiftedSystem, expand_det_equations
from .polyring import Poly

__all__ = ["FpPoly", "SpecializedSystem", "QuotientInfo", "specialize", "buchberger",
           "solution_count", "count_system", "GroebnerBudgetExceeded", "DEFAULT_GB_PRIME",
           "leading_monomial", "reduce_by", "from_poly"]

DEFAULT_GB_PRIME = 32003
DEFAULT_BUDGET = 200_000

Exp = tuple[int, ...]
FpPoly = dict  # dict[Exp, int]


class GroebnerBudgetExceeded(RuntimeError):
    pass


def _key(e: Exp) -> tuple:
    return (sum(e), tuple(-a for a in reversed(e)))


def leading_monomial(f: FpPoly) -> Exp:
    return max(f, key=_key)


def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


def _monic(f: FpPoly, p: int) -> FpPoly:
    lm = leading_monomial(f)
    inv = pow(f[lm], p - 2, p)
    return {m: c * inv % p for m, c in f.items()}


def _add_scaled(f: FpPoly, g: FpPoly, c: int, shift: Exp, p: int) -> None:
    # f -= c * x^shift * g, in place
    for m, a in g.items():
        mm = tuple(x + y for x, y in zip(m, shift))
        v = (f.get(mm, 0) - c * a) % p
        if v:
            f[mm] = v
        else:
            f.pop(mm, None)


class _Reducer:
    def __init__(self, p: int, budget: int, seconds: float | None = None):
        self.p = p
        self.budget = budget
        self.steps = 0
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise GroebnerBudgetExceeded(f"more than {self.budget} reduction steps")
        if self.deadline is not None and self.steps % 256 == 1 and time.monotonic() > self.deadline:
            raise GroebnerBudgetExceeded("time limit reached")

    def reduce(self, f: FpPoly, G: Sequence[tuple[Exp, FpPoly]], full: bool = True) -> FpPoly:
        """Remainder of ``f`` by monic ``G``; ``full`` also reduces non-leading terms."""
        p = self.p
        f = dict(f)
        rem: FpPoly = {}
        while f:
            lm = leading_monomial(f)
            for glm, g in G:
                if _divides(glm, lm):
                    self.tick()
                    _add_scaled(f, g, f[lm], _sub(lm, glm), p)
                    break
            else:
                if not full:
                    rem.update(f)
                    return rem
                rem[lm] = f.pop(lm)
        return rem


def reduce_by(f: FpPoly, basis: Sequence[FpPoly], p: int) -> FpPoly:
    """Normal form of ``f`` modulo a monic basis."""
    G = [(leading_monomial(g), g) for g in basis]
    return _Reducer(p, DEFAULT_BUDGET).reduce({m: c % p for m, c in f.items() if c % p}, G)


def _spoly(f: FpPoly, flm: Exp, g: FpPoly, glm: Exp, p: int) -> FpPoly:
    L = _lcm(flm, glm)
    out: FpPoly = {}
    _add_scaled(out, f, p - 1, _sub(L, flm), p)
    _add_scaled(out, g, 1, _sub(L, glm), p)
    return out


def buchberger(polys: Iterable[FpPoly], p: int, budget: int = DEFAULT_BUDGET,
               seconds: float | None = None) -> list[FpPoly]:
    """Reduced Groebner basis (monic, sorted by leading monomial, descending).

    Raises :class:`GroebnerBudgetExceeded` after ``budget`` reduction steps or
    ``seconds`` of wall time.
    """
    red = _Reducer(p, budget, seconds)
    G: list[tuple[Exp, FpPoly]] = []
    for f in polys:
        f = {m: c % p for m, c in f.items() if c % p}
        f = red.reduce(f, G)
        if f:
            f = _monic(f, p)
            G.append((leading_monomial(f), f))
    # a constant means the ideal is trivial
    if any(sum(lm) == 0 for lm, _ in G):
        return [{_zero(G): 1}]

    pairs = {(i, j) for i, j in combinations(range(len(G)), 2)}
    alive = set(range(len(G)))
    while pairs:
        i, j = min(pairs, key=lambda ij: (_key(_lcm(G[ij[0]][0], G[ij[1]][0])), ij))
        pairs.discard((i, j))
        if i not in alive or j not in alive:
            continue
        (flm, f), (glm, g) = G[i], G[j]
        L = _lcm(flm, glm)
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(flm, glm)):
            continue
        # chain criterion
        if any(k not in (i, j) and _divides(G[k][0], L)
               and (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs
               for k in alive):
            continue
        h = red.reduce(_spoly(f, flm, g, glm, p), [G[k] for k in sorted(alive)])
        if not h:
            continue
        h = _monic(h, p)
        hlm = leading_monomial(h)
        if sum(hlm) == 0:
            return [{hlm: 1}]
        G.append((hlm, h))
        new = len(G) - 1
        for k in alive:
            pairs.add((k, new))
        alive.add(new)

    # minimalize, then interreduce
    basis = [G[k] for k in sorted(alive)]
    minimal = [(lm, f) for idx, (lm, f) in enumerate(basis)
               if not any(_divides(lm2, lm) and (lm2 != lm or idx2 < idx)
                          for idx2, (lm2, _) in enumerate(basis) if idx2 != idx)]
    reduced = []
    for idx, (lm, f) in enumerate(minimal):
        others = [g for k, g in enumerate(minimal) if k != idx]
        tail = {m: c for m, c in f.items() if m != lm}
        tail = red.reduce(tail, others)
        tail[lm] = 1
        reduced.append(tail)
    reduced.sort(key=lambda f: _key(leading_monomial(f)), reverse=True)
    return reduced


def _zero(G) -> Exp:
    return tuple(0 for _ in G[0][0])


@dataclass
class SpecializedSystem:
    variables: tuple[str, ...]
    polys: list[FpPoly]
    p: int
    values: dict[str, int]


def from_poly(f: Poly, variables: Sequence[str], p: int,
              values: Mapping[str, int] | None = None) -> FpPoly:
    """Integer polynomial to ``F_p`` form over ``variables``; other names are looked up in ``values``."""
    return _to_fp(f, {v: k for k, v in enumerate(variables)}, values or {}, p)


def _to_fp(f: Poly, index: Mapping[str, int], values: Mapping[str, int], p: int) -> FpPoly:
    nvars = len(index)
    out: FpPoly = {}
    for mono, c in f.terms.items():
        exps = [0] * nvars
        coef = c % p
        for name, e in mono:
            if name in index:
                exps[index[name]] += e
            else:
                coef = coef * pow(values[name], e, p) % p
        key = tuple(exps)
        v = (out.get(key, 0) + coef) % p
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def specialize(system: LiftedSystem, p: int = DEFAULT_GB_PRIME,
               seed: int | random.Random | None = 0,
               values: Mapping[str, int] | None = None) -> SpecializedSystem:
    """Substitute random residues for every parameter; expand determinant nodes."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    vals = dict(values or {})
    for name in system.parameters:
        if name not in vals:
            vals[name] = rng.randrange(p)
    index = {v: k for k, v in enumerate(system.variables)}
    eqs = list(system.equations) + expand_det_equations(system)
    polys = [_to_fp(f, index, vals, p) for f in eqs]
    return SpecializedSystem(tuple(system.variables), [f for f in polys if f], p, vals)


@dataclass(frozen=True)
class QuotientInfo:
    """Dimension of ``F_p[x]/I``; ``count is None`` when ``I`` is not zero-dimensional."""

    count: int | None

    @property
    def zero_dimensional(self) -> bool:
        return self.count is not None

    def to_dict(self) -> dict:
        if self.count is None:
            return {"status": "not_zero_dimensional"}
        return {"count": self.count}


def solution_count(basis: Sequence[FpPoly], nvars: int | None = None,
                   limit: int = 100_000) -> QuotientInfo:
    """Count standard monomials of a reduced basis."""
    if nvars is None:
        if not basis:
            raise ValueError("number of variables needed for an empty basis")
        nvars = len(next(iter(basis[0])))
    if not basis:
        return QuotientInfo(1 if nvars == 0 else None)
    lms = [leading_monomial(f) for f in basis]
    if any(sum(m) == 0 for m in lms):
        return QuotientInfo(0)
    for i in range(nvars):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            return QuotientInfo(None)
    seen = {tuple([0] * nvars)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(nvars):
                mm = m[:i] + (m[i] + 1,) + m[i + 1:]
                if mm in seen or any(_divides(l, mm) for l in lms):
                    continue
                seen.add(mm)
                nxt.append(mm)
        if len(seen) > limit:
            raise GroebnerBudgetExceeded("too many standard monomials")
        frontier = nxt
    return QuotientInfo(len(seen))


def count_system(system: LiftedSystem | SpecializedSystem, p: int = DEFAULT_GB_PRIME,
                 seed: int | random.Random | None = 0, budget: int = DEFAULT_BUDGET,
                 seconds: float | None = None) -> QuotientInfo:
    """Specialize (unless already done), compute a reduced basis and count solutions."""
    sp = system if isinstance(system, SpecializedSystem) else specialize(system, p, seed)
    if not sp.polys:
        return QuotientInfo(1 if not sp.variables else None)
    return solution_count(buchberger(sp.polys, sp.p, budget, seconds), len(sp.variables))
