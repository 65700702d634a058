"""Sparse multivariate polynomials with exact integer coefficients.

Variables are strings (``"x1"``, ``"alpha3_1"``, ``"y2_4"``). A monomial is a
tuple of ``(variable, exponent)`` pairs sorted by :func:`var_key`, with no
zero exponents.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping, Union

__all__ = ["Poly", "Monomial", "var_key", "x", "swap_action", "divided_difference",
           "divided_difference_formula", "exact_quotient", "lex_min_monomial",
           "exponent_vector", "format_poly", "parse_poly", "const"]

Monomial = tuple  # tuple[tuple[str, int], ...]

_TOKEN = re.compile(r"(\d+)|(\D+)")


@lru_cache(maxsize=None)
def var_key(name: str) -> tuple:
    """Natural sort key: ``x2 < x10``, ``y1_2 < y1_10``."""
    key = []
    for digits, text in _TOKEN.findall(name):
        key.append((1, int(digits), "") if digits else (0, 0, text))
    return tuple(key)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda ve: var_key(ve[0])))


def _mono_from_dict(d: Mapping[str, int]) -> Monomial:
    return tuple(sorted(((v, e) for v, e in d.items() if e), key=lambda ve: var_key(ve[0])))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class Poly:
    """An element of ``Z[vars]``; canonical (no zero coefficients stored)."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # -- constructors --
    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(): c}) if c else cls()

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: int = 1) -> "Poly":
        return cls({_mono_from_dict(exps): coeff})

    @classmethod
    def from_exponents(cls, exps: Iterable[int], coeff: int = 1, prefix: str = "x") -> "Poly":
        """``coeff * x1^e1 * x2^e2 * ...``."""
        return cls.monomial({f"{prefix}{i}": e for i, e in enumerate(exps, start=1)}, coeff)

    # -- basic protocol --
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coeff(self, exps: Mapping[str, int] | Monomial) -> int:
        key = exps if isinstance(exps, tuple) else _mono_from_dict(exps)
        return self.terms.get(key, 0)

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def degree_in(self, names: Iterable[str]) -> int:
        names = set(names)
        return max((sum(e for v, e in m if v in names) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self.terms}) <= 1

    # -- arithmetic --
    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, k: int) -> "Poly":
        return Poly({m: c * k for m, c in self.terms.items()}) if k else Poly()

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def rename(self, mapping: Mapping[str, str]) -> "Poly":
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            d: dict[str, int] = {}
            for v, e in m:
                v = mapping.get(v, v)
                d[v] = d.get(v, 0) + e
            key = _mono_from_dict(d)
            out[key] = out.get(key, 0) + c
        return Poly(out)

    def subs(self, values: Mapping[str, Union[int, "Poly"]]) -> "Poly":
        """Substitute integers or polynomials for variables."""
        out = Poly()
        for m, c in self.terms.items():
            term = Poly.const(c)
            rest = {}
            for v, e in m:
                if v in values:
                    term = term * (self._coerce(values[v]) ** e)
                else:
                    rest[v] = e
            out = out + term * Poly.monomial(rest)
        return out

    def eval_mod(self, values: Mapping[str, int], p: int) -> int:
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t = t * pow(values[v], e, p) % p
            total += t
        return total % p

    # -- rendering --
    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)


def x(i: int) -> Poly:
    return Poly.var(f"x{i}")


def const(c: int) -> Poly:
    return Poly.const(c)


# -- symmetric group action and divided differences --------------------------

def swap_action(f: Poly, i: int, prefix: str = "x") -> Poly:
    """Exchange ``x_i`` and ``x_{i+1}`` in every monomial."""
    a, b = f"{prefix}{i}", f"{prefix}{i + 1}"
    return f.rename({a: b, b: a})


def _split(m: Monomial, a: str) -> tuple[int, dict[str, int]]:
    e = 0
    rest = {}
    for v, k in m:
        if v == a:
            e = k
        else:
            rest[v] = k
    return e, rest


def exact_quotient(f: Poly, g: Poly, var: str) -> Poly:
    """Divide ``f`` by ``g``, both viewed as univariate in ``var``.

    ``g`` must have a unit leading coefficient in ``var`` (an integer ±1).
    Raises ``ArithmeticError`` when the division leaves a remainder.
    """
    g_deg = max((_split(m, var)[0] for m in g.terms), default=-1)
    lead = Poly({_mono_from_dict(rest): c for m, c in g.terms.items()
                 for e, rest in [_split(m, var)] if e == g_deg})
    if g_deg < 0 or len(lead) != 1 or () not in lead.terms or abs(lead.terms[()]) != 1:
        raise ValueError("divisor needs a unit leading coefficient")
    unit = lead.terms[()]
    quotient = Poly()
    rem = f
    while rem:
        r_deg = max(_split(m, var)[0] for m in rem.terms)
        if r_deg < g_deg:
            break
        top = Poly({_mono_from_dict(rest): c * unit for m, c in rem.terms.items()
                    for e, rest in [_split(m, var)] if e == r_deg})
        step = top * Poly.monomial({var: r_deg - g_deg})
        quotient = quotient + step
        rem = rem - step * g
    if rem:
        raise ArithmeticError(f"inexact division: remainder {rem}")
    return quotient


def divided_difference(f: Poly, i: int, prefix: str = "x") -> Poly:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed as an exact division."""
    num = f - swap_action(f, i, prefix)
    if not num:
        return Poly()
    a, b = f"{prefix}{i}", f"{prefix}{i + 1}"
    return exact_quotient(num, Poly.var(a) - Poly.var(b), a)


def divided_difference_formula(f: Poly, i: int, prefix: str = "x") -> Poly:
    """Closed form of ``∂_i`` on monomials; used to cross-check the division."""
    a, b = f"{prefix}{i}", f"{prefix}{i + 1}"
    out: dict[Monomial, int] = {}
    for m, c in f.terms.items():
        d = dict(m)
        ea, eb = d.pop(a, 0), d.pop(b, 0)
        if ea == eb:
            continue
        sign = 1 if ea > eb else -1
        lo, hi = min(ea, eb), max(ea, eb)
        for k in range(hi - lo):
            dd = dict(d)
            dd[a] = hi - 1 - k
            dd[b] = lo + k
            key = _mono_from_dict(dd)
            out[key] = out.get(key, 0) + sign * c
    return Poly(out)


def exponent_vector(m: Monomial, prefix: str = "x") -> tuple[int, ...]:
    """Exponents of ``x1, x2, ...`` up to the last variable present."""
    d = {}
    for v, e in m:
        if not v.startswith(prefix) or not v[len(prefix):].isdigit():
            raise ValueError(f"unexpected variable {v}")
        d[int(v[len(prefix):])] = e
    top = max(d, default=0)
    return tuple(d.get(i, 0) for i in range(1, top + 1))


def lex_min_monomial(f: Poly, prefix: str = "x") -> tuple[Monomial, int]:
    """Minimal monomial for lex order with ``x1 > x2 > ...``."""
    if not f:
        raise ValueError("zero polynomial has no monomials")
    width = max((len(exponent_vector(m, prefix)) for m in f.terms), default=0)

    def key(m):
        vec = exponent_vector(m, prefix)
        return vec + (0,) * (width - len(vec))

    m = min(f.terms, key=key)
    return m, f.terms[m]


# -- text format -------------------------------------------------------------

def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"

    def mono_key(item):
        m, _ = item
        return (-mono_degree(m), [(var_key(v), -e) for v, e in m])

    parts = []
    for m, c in sorted(f.terms.items(), key=mono_key):
        body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
        if not body:
            text = str(abs(c))
        elif abs(c) == 1:
            text = body
        else:
            text = f"{abs(c)}*{body}"
        if not parts:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str) -> Poly:
    """Parse the output of :func:`format_poly` (``"x1^2*x2 - 3*x3 + 1"``)."""
    text = text.strip()
    if text == "0":
        return Poly()
    out = Poly()
    pos = 0
    while pos < len(text):
        match = _TERM.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse polynomial at position {pos}: {text[pos:]!r}")
        sign = -1 if match.group(1) == "-" else 1
        coeff = sign
        exps: dict[str, int] = {}
        for factor in match.group(2).strip().split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor at position {match.start(2)}")
            if factor.isdigit():
                coeff *= int(factor)
            elif re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*(\^\d+)?", factor):
                name, _, power = factor.partition("^")
                exps[name] = exps.get(name, 0) + (int(power) if power else 1)
            else:
                raise ValueError(f"bad factor {factor!r} at position {match.start(2)}")
        out = out + Poly.monomial(exps, coeff)
        pos = match.end()
    return out
