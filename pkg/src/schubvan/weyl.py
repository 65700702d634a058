"""Permutations, signed permutations and their statistics.

Type A elements are :class:`Permutation` (one-line notation on ``1..n``).
Types B, C and D use :class:`SignedPermutation`, stored on the positive
positions only; ``w(-i) = -w(i)`` is implied.

Composition everywhere is ``(u * v)(i) = u(v(i))``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Union

__all__ = [
    "Permutation", "SignedPermutation", "LieType", "WeylElement",
    "inversions", "descents", "des", "lehmer_code", "code_to_perm",
    "rank_table", "bruhat_leq", "bruhat_leq_subword", "long_element",
    "rothe_diagram", "zeta", "negative_count", "length",
    "matrix_representative", "form_matrix", "elements", "parse_element",
    "format_element", "reduced_word",
]


@dataclass(frozen=True, eq=False)
class Permutation:
    """A permutation of ``1..n`` in one-line notation.

    Equality and hashing ignore trailing fixed points, so ``1432 == 14325``.
    """

    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(a) for a in self.window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ValueError(f"not a permutation of 1..{len(window)}: {self.window}")
        object.__setattr__(self, "window", window)

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if 1 <= i <= self.n:
            return self.window[i - 1]
        return i

    def __iter__(self) -> Iterator[int]:
        return iter(self.window)

    def __len__(self) -> int:
        return self.n

    @cached_property
    def _trimmed(self) -> tuple[int, ...]:
        w = list(self.window)
        while w and w[-1] == len(w):
            w.pop()
        return tuple(w)

    def trim(self) -> "Permutation":
        return Permutation(self._trimmed)

    def pad(self, n: int) -> "Permutation":
        if n < len(self._trimmed):
            raise ValueError(f"cannot fit {self} into S_{n}")
        base = self._trimmed
        return Permutation(base + tuple(range(len(base) + 1, n + 1)))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._trimmed == other._trimmed

    def __hash__(self):
        return hash(("A", self._trimmed))

    def __mul__(self, other: "Permutation") -> "Permutation":
        n = max(self.n, other.n)
        return Permutation(tuple(self(other(i)) for i in range(1, n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, a in enumerate(self.window, start=1):
            inv[a - 1] = i
        return Permutation(tuple(inv))

    def __repr__(self):
        return f"Permutation({format_element(self)})"

    def __str__(self):
        return format_element(self)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int | None = None) -> "Permutation":
        """The adjacent transposition ``s_i = (i, i+1)``."""
        n = max(n or 0, i + 1)
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))


@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation; ``values[i-1] = w(i)`` for ``i = 1..n``."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(a) for a in self.values)
        if 0 in values or sorted(abs(a) for a in values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a signed permutation: {self.values}")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        if i < 0:
            return -self.values[-i - 1]
        return self.values[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return self.n

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if self.n != other.n:
            raise ValueError("signed permutations of different rank")
        return SignedPermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i, a in enumerate(self.values, start=1):
            inv[abs(a) - 1] = i if a > 0 else -i
        return SignedPermutation(tuple(inv))

    @property
    def is_even(self) -> bool:
        return negative_count(self) % 2 == 0

    def __repr__(self):
        return f"SignedPermutation({format_element(self)})"

    def __str__(self):
        return format_element(self)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))


WeylElement = Union[Permutation, SignedPermutation]


@dataclass(frozen=True)
class LieType:
    """A classical type ``A``, ``B``, ``C`` or ``D`` with rank parameter ``n``.

    For type A the parameter is the size of the symmetric group (matrices are
    ``n x n``); for the others it is the number of letters of the signed
    permutations.
    """

    tag: str
    n: int

    def __post_init__(self):
        tag = self.tag.upper()
        if tag not in "ABCD" or len(tag) != 1:
            raise ValueError(f"unknown type {self.tag!r}")
        if self.n < 1:
            raise ValueError("rank must be positive")
        object.__setattr__(self, "tag", tag)

    @property
    def dim(self) -> int:
        """Ambient matrix dimension."""
        return {"A": self.n, "B": 2 * self.n + 1, "C": 2 * self.n, "D": 2 * self.n}[self.tag]

    @property
    def num_positive_roots(self) -> int:
        n = self.n
        return {"A": n * (n - 1) // 2, "B": n * n, "C": n * n, "D": n * n - n}[self.tag]

    def index(self, k: int) -> int:
        """Zero-based matrix row of basis vector ``e_k`` (``k`` signed for B/C/D).

        Basis order is ``e_{-n}, ..., e_{-1}, (e_0 in type B), e_1, ..., e_n``.
        """
        n = self.n
        if self.tag == "A":
            return k - 1
        if k < 0:
            return k + n
        if k == 0:
            if self.tag != "B":
                raise ValueError("e_0 only exists in type B")
            return n
        return k + n - 1 + (self.tag == "B")

    def signed_index(self, row: int) -> int:
        """Inverse of :meth:`index`."""
        n = self.n
        if self.tag == "A":
            return row + 1
        if row < n:
            return row - n
        if self.tag == "B":
            return row - n
        return row - n + 1

    def __str__(self):
        return f"{self.tag}{self.n}"


# -- statistics ------------------------------------------------------------

def inversions(w: Permutation) -> int:
    win = w.window
    return sum(1 for i, j in itertools.combinations(range(len(win)), 2) if win[i] > win[j])


def descents(w: Permutation) -> set[int]:
    win = w.window
    return {i for i in range(1, len(win)) if win[i - 1] > win[i]}


def des(w: Permutation) -> int:
    return len(descents(w))


def lehmer_code(w: Permutation) -> tuple[int, ...]:
    """``code[i] = #{j > i : w(j) < w(i)}``."""
    win = w.window
    return tuple(sum(1 for b in win[i + 1:] if b < a) for i, a in enumerate(win))


def code_to_perm(code: Sequence[int]) -> Permutation:
    code = list(code)
    while code and code[-1] == 0:
        code.pop()
    if any(c < 0 for c in code):
        raise ValueError("code entries must be nonnegative")
    n = max((i + c + 1 for i, c in enumerate(code)), default=0)
    available = list(range(1, n + 1))
    window = []
    for i in range(n):
        c = code[i] if i < len(code) else 0
        window.append(available.pop(c))
    return Permutation(tuple(window))


def rank_table(w: Permutation, n: int | None = None) -> tuple[tuple[int, ...], ...]:
    """``k_w(i, j) = #{r <= i : w(r) > j}`` for ``0 <= i, j <= n``."""
    n = n or w.n
    w = w.pad(n)
    table = []
    for i in range(n + 1):
        prefix = w.window[:i]
        table.append(tuple(sum(1 for a in prefix if a > j) for j in range(n + 1)))
    return tuple(table)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Strong Bruhat order via rank-table dominance."""
    n = max(u.n, w.n)
    tu, tw = rank_table(u, n), rank_table(w, n)
    return all(a <= b for ru, rw in zip(tu, tw) for a, b in zip(ru, rw))


def reduced_word(w: Permutation) -> list[int]:
    """A reduced word ``[i1, ..., il]`` with ``w = s_{i1} ... s_{il}``."""
    win = list(w.window)
    word = []
    # bubble sort from the right: w = w' s_i with a descent at i
    while True:
        for i in range(len(win) - 1):
            if win[i] > win[i + 1]:
                win[i], win[i + 1] = win[i + 1], win[i]
                word.append(i + 1)
                break
        else:
            break
    return word[::-1]


def bruhat_leq_subword(u: Permutation, w: Permutation) -> bool:
    """Brute-force Bruhat comparison through the subword property."""
    n = max(u.n, w.n)
    word = reduced_word(w)
    target = u.pad(n)
    for mask in itertools.product((0, 1), repeat=len(word)):
        x = Permutation.identity(n)
        for keep, i in zip(mask, word):
            if keep:
                x = x * Permutation.simple(i, n)
        if x == target:
            return True
    return False


def rothe_diagram(w: Permutation) -> set[tuple[int, int]]:
    """Cells ``(w(j), i)`` for ``i < j`` with ``w(i) > w(j)``."""
    win = w.window
    return {(win[j], i + 1) for i, j in itertools.combinations(range(len(win)), 2) if win[i] > win[j]}


def zeta(w: Permutation) -> int:
    """Number of nonzero rows of the Rothe diagram."""
    return len({row for row, _ in rothe_diagram(w)})


def negative_count(w: SignedPermutation) -> int:
    return sum(1 for a in w.values if a < 0)


def length(w: WeylElement, tag: str = "A") -> int:
    """Coxeter length of ``w`` in the Weyl group of the given type."""
    if isinstance(w, Permutation):
        return inversions(w)
    vals = w.values
    inv = sum(1 for i, j in itertools.combinations(range(len(vals)), 2) if vals[i] > vals[j])
    neg_sum = -sum(a for a in vals if a < 0)
    if tag.upper() in ("B", "C"):
        return inv + neg_sum
    if tag.upper() == "D":
        return inv + neg_sum - negative_count(w)
    raise ValueError(f"signed permutation in type {tag}")


def elements(t: LieType) -> Iterator[WeylElement]:
    """All elements of the Weyl group of ``t``."""
    n = t.n
    if t.tag == "A":
        for p in itertools.permutations(range(1, n + 1)):
            yield Permutation(p)
        return
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            w = SignedPermutation(tuple(a * s for a, s in zip(p, signs)))
            if t.tag == "D" and not w.is_even:
                continue
            yield w


def long_element(t: LieType) -> WeylElement:
    n = t.n
    if t.tag == "A":
        return Permutation(tuple(range(n, 0, -1)))
    values = [-i for i in range(1, n + 1)]
    if t.tag == "D" and n % 2 == 1:
        values[0] = 1
    return SignedPermutation(tuple(values))


def check_element(w: WeylElement, t: LieType) -> WeylElement:
    """Validate ``w`` against ``t`` and pad type-A windows to size ``t.n``."""
    if t.tag == "A":
        if not isinstance(w, Permutation):
            raise TypeError("type A needs a Permutation")
        return w.pad(t.n)
    if not isinstance(w, SignedPermutation) or w.n != t.n:
        raise TypeError(f"type {t.tag} needs a signed permutation of rank {t.n}")
    if t.tag == "D" and not w.is_even:
        raise ValueError(f"{w} has an odd number of sign changes; not in type D")
    return w


# -- matrices --------------------------------------------------------------

def form_matrix(t: LieType) -> list[list[int]]:
    """Gram matrix ``J`` of the bilinear form defining the group of type ``t``.

    Type A has no form and gets the identity.
    """
    m = t.dim
    J = [[0] * m for _ in range(m)]
    if t.tag == "A":
        for i in range(m):
            J[i][i] = 1
    elif t.tag == "C":
        n = t.n
        for i in range(n):
            J[i][m - 1 - i] = 1
            J[m - 1 - i][i] = -1
    else:
        for i in range(m):
            J[i][m - 1 - i] = 1
    return J


def _det(M: list[list[int]]) -> int:
    from fractions import Fraction

    A = [[Fraction(x) for x in row] for row in M]
    m = len(A)
    det = Fraction(1)
    for c in range(m):
        piv = next((r for r in range(c, m) if A[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, m):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return int(det)


def matrix_representative(w: WeylElement, t: LieType) -> list[list[int]]:
    """Determinant-one (signed) permutation matrix sending ``e_k`` to ``±e_{w(k)}``."""
    w = check_element(w, t)
    m = t.dim
    P = [[0] * m for _ in range(m)]
    if t.tag == "A":
        for j in range(1, m + 1):
            P[w(j) - 1][j - 1] = 1
        return P
    n = t.n
    for k in list(range(-n, 0)) + list(range(1, n + 1)):
        target = w(k)
        sign = 1
        # type C: positive basis vectors landing on negative ones pick up -1
        if t.tag == "C" and k > 0 and target < 0:
            sign = -1
        P[t.index(target)][t.index(k)] = sign
    if t.tag == "B":
        P[n][n] = 1
        if _det(P) == -1:
            P[n][n] = -1
    return P


# -- text syntax -----------------------------------------------------------

def parse_element(text: str, tag: str = "A") -> WeylElement:
    """Parse ``"1432"``, ``"10,3,2,..."`` or signed ``"-2,1"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty element")
    if "," in text or " " in text:
        parts = [int(p) for p in re.split(r"[,\s]+", text) if p]
    elif "-" in text:
        parts = [int(p) for p in re.findall(r"-?\d", text)]
    else:
        parts = [int(c) for c in text]
    if tag.upper() == "A":
        return Permutation(tuple(parts))
    return SignedPermutation(tuple(parts))


def format_element(w: WeylElement) -> str:
    vals = w.window if isinstance(w, Permutation) else w.values
    if isinstance(w, Permutation) and len(vals) <= 9:
        return "".join(str(a) for a in vals)
    return ",".join(str(a) for a in vals)
