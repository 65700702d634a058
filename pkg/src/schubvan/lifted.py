"""Lifted polynomial systems whose solution counts are Schubert coefficients.

Two formulations are built here.

* ``cell``: a Stiefel chart of a Schubert cell plus bilinear (type A) or
  trilinear (types B, C, D) flag-membership equations against two generic
  flags ``pi E`` and ``rho E``. With ``t = w0 w`` the number of solutions at
  generic parameters is ``c^w_{u,v}``.
* ``borel``: ``P1 u Q1 = pi P2 v Q2 = rho P3 (w0 w) Q3`` with ``P_k`` lower and
  ``Q_k`` upper triangular group elements. Satisfiable at generic parameters
  exactly when ``c^w_{u,v} > 0``.

Signed indices are laid out as ``-n, ..., -1, (0 in type B), 1, ..., n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence, Union

from .liealg import lie_data
from .polyring import Poly, format_poly, parse_poly
from .weyl import (LieType, Permutation, SignedPermutation, WeylElement, check_element,
                   descents, form_matrix, long_element, matrix_representative, parse_element)

__all__ = [
    "StiefelPattern", "DetEquation", "LiftedSystem", "stiefel_pattern_a", "stiefel_pattern_signed",
    "build_type_a", "build_type_b", "build_type_c", "build_type_d", "build_uniform",
    "build", "coefficient_system", "expand_det_equations", "serialize", "deserialize",
    "DET_EXPANSION_LIMIT",
]

DET_EXPANSION_LIMIT = 6

Cell = Union[int, str]
PolyMatrix = list[list[Poly]]


def _name(prefix: str, *idx: int) -> str:
    if all(0 <= i <= 9 for i in idx):
        return prefix + "".join(str(i) for i in idx)
    return prefix + "_".join(str(i) for i in idx)


# -- Stiefel coordinates ---------------------------------------------------

@dataclass(frozen=True)
class StiefelPattern:
    """Cells are ``0``, ``±1`` or a variable name."""

    cells: tuple[tuple[Cell, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.cells), (len(self.cells[0]) if self.cells else 0)

    @property
    def variables(self) -> list[str]:
        """Variable names in numbering order."""
        names = [c for col in zip(*self.cells) for c in col if isinstance(c, str)] if self.cells else []
        return sorted(names, key=lambda s: int(s[1:]))

    def entry(self, i: int, j: int) -> Poly:
        c = self.cells[i][j]
        return Poly.var(c) if isinstance(c, str) else Poly.const(c)

    def column(self, j: int) -> list[Poly]:
        return [self.entry(i, j) for i in range(self.shape[0])]

    def matrix(self) -> PolyMatrix:
        r, c = self.shape
        return [[self.entry(i, j) for j in range(c)] for i in range(r)]

    def __str__(self):
        return "\n".join(" ".join(f"{str(c):>4}" for c in row) for row in self.cells)


def _number_column_major(kinds: list[list[Any]]) -> tuple[tuple[Cell, ...], ...]:
    # free cells are numbered down each column, left to right
    rows, cols = len(kinds), (len(kinds[0]) if kinds else 0)
    out = [list(r) for r in kinds]
    k = 0
    for j in range(cols):
        for i in range(rows):
            if out[i][j] is None:
                k += 1
                out[i][j] = f"x{k}"
    return tuple(tuple(r) for r in out)


def stiefel_pattern_a(t: Permutation, d: int | None = None) -> StiefelPattern:
    """``n x d`` chart of the cell of ``t``: ``1`` at ``(t_j, j)``, ``0`` above it and right of earlier pivots."""
    n = t.n
    if d is None:
        d = max(descents(t), default=0)
    tinv = t.inverse()
    kinds: list[list[Any]] = []
    for i in range(1, n + 1):
        row: list[Any] = []
        for j in range(1, d + 1):
            if i == t(j):
                row.append(1)
            elif i < t(j) or tinv(i) < j:
                row.append(0)
            else:
                row.append(None)
        kinds.append(row)
    return StiefelPattern(_number_column_major(kinds))


def _signed_labels(n: int) -> list[int]:
    return list(range(-n, 0)) + list(range(1, n + 1))


def stiefel_pattern_signed(t: SignedPermutation, lie_type: LieType) -> StiefelPattern:
    """``2n x 2n`` chart for types C and D, rows and columns in signed order.

    The pivot entries carry the signs of :func:`matrix_representative`, so the
    pattern itself satisfies the form equation; all-positive pivots fail it
    already for ``n = 1``.
    """
    if lie_type.tag not in "CD":
        raise ValueError("signed Stiefel charts are built in type C or D")
    n = lie_type.n
    rep = matrix_representative(t, lie_type)
    tinv = t.inverse()
    labels = _signed_labels(n)
    kinds: list[list[Any]] = []
    for r, i in enumerate(labels):
        row: list[Any] = []
        for c, j in enumerate(labels):
            if i == t(j):
                row.append(rep[r][c])
            elif i < t(j) or tinv(i) < j:
                row.append(0)
            else:
                row.append(None)
        kinds.append(row)
    return StiefelPattern(_number_column_major(kinds))


# -- systems ---------------------------------------------------------------

@dataclass(frozen=True)
class DetEquation:
    """``det(matrix) = equals``, kept unexpanded."""

    matrix: tuple[tuple[Poly, ...], ...]
    equals: int = 1


@dataclass(frozen=True)
class LiftedSystem:
    lie_type: str
    formulation: str
    u: tuple[int, ...]
    v: tuple[int, ...]
    t: tuple[int, ...]
    variables: tuple[str, ...]
    parameters: tuple[str, ...]
    equations: tuple[Poly, ...]
    det_equations: tuple[DetEquation, ...] = field(default=())

    def __post_init__(self):
        if self.formulation not in ("cell", "borel"):
            raise ValueError(f"unknown formulation {self.formulation!r}")
        overlap = set(self.variables) & set(self.parameters)
        if overlap:
            raise ValueError(f"names both variable and parameter: {sorted(overlap)}")
        declared = set(self.variables) | set(self.parameters)
        for k, eq in enumerate(self.equations):
            stray = eq.variables() - declared
            if stray:
                raise ValueError(f"equation {k} uses undeclared names {sorted(stray)}")

    @property
    def num_equations(self) -> int:
        return len(self.equations)

    def size(self) -> int:
        """Total number of terms over all equations."""
        return sum(len(e) for e in self.equations)


def _dot(row: Sequence[Poly], col: Sequence[Poly]) -> Poly:
    total = Poly()
    for a, b in zip(row, col):
        if a and b:
            total = total + a * b
    return total


def _matmul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    cols = list(zip(*B))
    return [[_dot(r, c) for c in cols] for r in A]


def _const_matrix(M) -> PolyMatrix:
    return [[Poly.const(a) for a in row] for row in M]


def _var_matrix(prefix: str, m: int, keep=lambda i, j: True) -> tuple[PolyMatrix, list[str]]:
    names = []
    M = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, m + 1):
            if keep(i, j):
                nm = _name(prefix, i, j)
                names.append(nm)
                row.append(Poly.var(nm))
            else:
                row.append(Poly())
        M.append(row)
    return M, names


def _transpose(M: PolyMatrix) -> PolyMatrix:
    return [list(c) for c in zip(*M)]


def _entries(M: PolyMatrix) -> list[Poly]:
    return [a for row in M for a in row]


def _lie_parameter_matrix(prefix: str, t: LieType) -> tuple[PolyMatrix, list[str]]:
    """Generic element of the Lie algebra of ``t`` in independent parameters.

    Each basis vector of ``g`` gets one parameter, named after its cell closest
    to the top-left corner (weakly above the antidiagonal).
    """
    data = lie_data(t)
    m = data.m
    M = [[Poly() for _ in range(m)] for _ in range(m)]
    named: list[tuple[tuple[int, int], str]] = []
    for B in data.n_basis + data.bminus_basis:
        cells = [(i, j) for i in range(m) for j in range(m) if B[i][j]]
        ai, aj = min(cells, key=lambda c: (c[0] + c[1], c[0]))
        nm = _name(prefix, ai + 1, aj + 1)
        named.append(((ai, aj), nm))
        sign = B[ai][aj]
        for i, j in cells:
            M[i][j] = M[i][j] + Poly.var(nm).scale(B[i][j] * sign)
    names = [nm for _, nm in sorted(named)]
    return M, names


def _cayley_equations(g: PolyMatrix, Y: PolyMatrix, left: bool) -> list[Poly]:
    m = len(g)
    IpY = [[Y[i][j] + int(i == j) for j in range(m)] for i in range(m)]
    ImY = [[int(i == j) - Y[i][j] for j in range(m)] for i in range(m)]
    lhs = _matmul(IpY, g) if left else _matmul(g, IpY)
    return [a - b for a, b in zip(_entries(lhs), _entries(ImY))]


def _form_equations(M: PolyMatrix, J, transpose_first: bool) -> list[Poly]:
    Jp = _const_matrix(J)
    if transpose_first:
        prod = _matmul(_matmul(_transpose(M), Jp), M)
    else:
        prod = _matmul(_matmul(M, Jp), _transpose(M))
    return [a - b for a, b in zip(_entries(prod), _entries(Jp))]


def _window(w: WeylElement) -> tuple[int, ...]:
    return tuple(w.window) if isinstance(w, Permutation) else tuple(w.values)


# -- type A ------------------------------------------------------------------

def build_type_a(u: Permutation, v: Permutation, t: Permutation) -> LiftedSystem:
    """Bilinear system for ``X_u(pi E) ∩ X_v(rho E) ∩ X_t(E)`` with ``pi = (y_jk)``, ``rho = (z_jk)``."""
    n = max(u.n, v.n, t.n)
    u, v, t = u.pad(n), v.pad(n), t.pad(n)
    d = max(descents(u) | descents(v) | descents(t), default=0)
    pattern = stiefel_pattern_a(t, d)
    cols = [pattern.column(j) for j in range(d)]

    equations: list[Poly] = []
    extra_vars: list[str] = []
    params: list[str] = []
    for perm, coef, param in ((u, "alpha", "y"), (v, "beta", "z")):
        rows_used = 0
        for i in range(1, d + 1):
            g = list(cols[i - 1])
            for j in range(1, i):
                if perm(j) < perm(i):
                    nm = _name(coef, i, j)
                    extra_vars.append(nm)
                    a = Poly.var(nm)
                    g = [gk + a * ek for gk, ek in zip(g, cols[j - 1])]
            for j in range(1, perm(i)):
                row = [Poly.var(_name(param, j, k)) for k in range(1, n + 1)]
                equations.append(_dot(row, g))
                rows_used = max(rows_used, j)
        params += [_name(param, j, k) for j in range(1, rows_used + 1) for k in range(1, n + 1)]
    return LiftedSystem("A", "cell", _window(u), _window(v), _window(t),
                        tuple(pattern.variables + extra_vars), tuple(params), tuple(equations))


# -- types B, C, D -----------------------------------------------------------

def _build_signed(u, v, t, lie: LieType, tag: str) -> LiftedSystem:
    n = lie.n
    u, v, t = (check_element(x, lie) for x in (u, v, t))
    m = 2 * n
    labels = _signed_labels(n)
    pos = {k: r for r, k in enumerate(labels)}
    J = form_matrix(lie)
    pattern = stiefel_pattern_signed(t, lie)
    omega = pattern.matrix()
    cols = [pattern.column(c) for c in range(m)]

    pi, pi_names = _var_matrix("pi", m)
    rho, rho_names = _var_matrix("rho", m)
    Y, y_names = _lie_parameter_matrix("y", lie)
    Z, z_names = _lie_parameter_matrix("z", lie)

    equations: list[Poly] = []
    for M in (omega, pi, rho):
        equations += _form_equations(M, J, transpose_first=False)

    extra_vars: list[str] = []
    for perm, coef, G in ((u, "alpha", pi), (v, "beta", rho)):
        for i in labels:
            g = list(cols[pos[i]])
            for j in labels:
                if j < i and perm(j) < perm(i):
                    nm = _name(coef, pos[i] + 1, pos[j] + 1)
                    extra_vars.append(nm)
                    a = Poly.var(nm)
                    g = [gk + a * ek for gk, ek in zip(g, cols[pos[j]])]
            for j in labels:
                if j < perm(i):
                    equations.append(_dot(G[pos[j]], g))

    # C: g (I + M) = I - M ; D: (I + M) g = I - M
    left = lie.tag == "D"
    equations += _cayley_equations(pi, Y, left)
    equations += _cayley_equations(rho, Z, left)

    dets: tuple[DetEquation, ...] = ()
    if lie.tag == "D":
        dets = (DetEquation(tuple(tuple(r) for r in omega), 1),)
    variables = pattern.variables + extra_vars + pi_names + rho_names
    return LiftedSystem(tag, "cell", _window(u), _window(v), _window(t), tuple(variables),
                        tuple(y_names + z_names), tuple(equations), dets)


def build_type_c(u: SignedPermutation, v: SignedPermutation, t: SignedPermutation) -> LiftedSystem:
    """Isotropy, flag-membership and Cayley equations in ``Sp_2n``."""
    return _build_signed(u, v, t, LieType("C", t.n), "C")


def build_type_b(u: SignedPermutation, v: SignedPermutation, t: SignedPermutation) -> LiftedSystem:
    """The type-C system; only the ``lie_type`` label differs.

    Type-B coefficients are type-C coefficients times a power of two, so the
    same equations decide vanishing.
    """
    return _build_signed(u, v, t, LieType("C", t.n), "B")


def build_type_d(u: SignedPermutation, v: SignedPermutation, t: SignedPermutation) -> LiftedSystem:
    """As type C with the split symmetric form, plus ``det(omega) = 1`` as a node."""
    lie = LieType("D", t.n)
    for x in (u, v, t):
        if not x.is_even:
            raise ValueError(f"{x} has an odd number of sign changes; not in type D")
    return _build_signed(u, v, t, lie, "D")


# -- uniform Borel factorization ---------------------------------------------

def _borel(prefix: str, m: int, lower: bool) -> tuple[PolyMatrix, list[str]]:
    if lower:
        return _var_matrix(prefix, m, lambda i, j: i >= j)
    return _var_matrix(prefix, m, lambda i, j: i <= j)


def _borel_equations(B: PolyMatrix, lie: LieType, aux: str) -> tuple[list[Poly], list[str]]:
    """Membership of an upper triangular ``B`` in the Borel of ``lie``."""
    m = len(B)
    if lie.tag == "A":
        prod = Poly.var(aux)
        for i in range(m):
            prod = prod * B[i][i]
        return [prod - 1], [aux]
    eqs = [B[i][i] * B[m - 1 - i][m - 1 - i] - 1 for i in range(m)]
    eqs += _form_equations(B, form_matrix(lie), transpose_first=True)
    if lie.tag == "B":
        c = lie.n
        eqs.append(B[c][c] - 1)
    return eqs, []


def build_uniform(u: WeylElement, v: WeylElement, w: WeylElement, lie: LieType) -> LiftedSystem:
    """``P1 u Q1 = pi P2 v Q2`` and ``P1 u Q1 = rho P3 (w0 w) Q3`` with group-membership equations."""
    u, v, w = (check_element(x, lie) for x in (u, v, w))
    m = lie.dim
    dual = long_element(lie) * w
    equations: list[Poly] = []
    variables: list[str] = []
    if lie.tag == "A":
        pi, y_names = _var_matrix("y", m)
        rho, z_names = _var_matrix("z", m)
    else:
        pi, pi_names = _var_matrix("pi", m)
        rho, rho_names = _var_matrix("rho", m)
        Y, y_names = _lie_parameter_matrix("y", lie)
        Z, z_names = _lie_parameter_matrix("z", lie)
        equations += _cayley_equations(pi, Y, left=True)
        equations += _cayley_equations(rho, Z, left=True)
        variables += pi_names + rho_names

    mats = {}
    for k in (1, 2, 3):
        for side, lower in (("P", True), ("Q", False)):
            M, names = _borel(f"{side}{k}_", m, lower)
            variables += names
            upper = _transpose(M) if lower else M
            eqs, aux = _borel_equations(upper, lie, f"b{side}{k}")
            equations += eqs
            variables += aux
            mats[side, k] = M

    def chain(P, rep, Q):
        return _matmul(_matmul(P, _const_matrix(rep)), Q)

    lhs = chain(mats["P", 1], matrix_representative(u, lie), mats["Q", 1])
    rhs2 = _matmul(pi, chain(mats["P", 2], matrix_representative(v, lie), mats["Q", 2]))
    rhs3 = _matmul(rho, chain(mats["P", 3], matrix_representative(dual, lie), mats["Q", 3]))
    equations += [a - b for a, b in zip(_entries(lhs), _entries(rhs2))]
    equations += [a - b for a, b in zip(_entries(lhs), _entries(rhs3))]
    return LiftedSystem(lie.tag, "borel", _window(u), _window(v), _window(w), tuple(variables),
                        tuple(y_names + z_names), tuple(equations))


# -- dispatch ----------------------------------------------------------------

def build(u: WeylElement, v: WeylElement, t: WeylElement, tag: str) -> LiftedSystem:
    """Cell-formulation system of type ``tag`` with Stiefel chart at ``t``."""
    tag = tag.upper()
    if tag == "A":
        return build_type_a(u, v, t)
    return {"B": build_type_b, "C": build_type_c, "D": build_type_d}[tag](u, v, t)


def coefficient_system(u: WeylElement, v: WeylElement, w: WeylElement, tag: str,
                       formulation: str = "cell") -> LiftedSystem:
    """System attached to ``c^w_{u,v}``; composes with ``w0`` as needed."""
    tag = tag.upper()
    if tag == "A":
        n = max(u.n, v.n, w.n)
        u, v, w = u.pad(n), v.pad(n), w.pad(n)
    else:
        n = w.n
    lie = LieType(tag, n)
    if formulation == "borel":
        return build_uniform(u, v, w, lie)
    if formulation != "cell":
        raise ValueError(f"unknown formulation {formulation!r}")
    return build(u, v, long_element(lie) * check_element(w, lie), tag)


# -- determinants ------------------------------------------------------------

def _det_poly(M: Sequence[Sequence[Poly]]) -> Poly:
    m = len(M)
    if m == 0:
        return Poly.const(1)
    if m == 1:
        return M[0][0]
    total = Poly()
    for j, a in enumerate(M[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            term = a * _det_poly(minor)
            total = total + (term if j % 2 == 0 else -term)
    return total


def expand_det_equations(system: LiftedSystem, limit: int = DET_EXPANSION_LIMIT) -> list[Poly]:
    """``det(M) - value`` for every determinant node; refuses matrices larger than ``limit``."""
    out = []
    for node in system.det_equations:
        size = len(node.matrix)
        if size > limit:
            raise ValueError(f"refusing to expand a {size}x{size} determinant (limit {limit})")
        out.append(_det_poly(node.matrix) - node.equals)
    return out


# -- serialization -----------------------------------------------------------

def _poly_to_json(f: Poly) -> list[dict[str, Any]]:
    items = sorted(f.terms.items(), key=lambda mc: str(Poly({mc[0]: 1})))
    return [{"c": c, "m": {v: e for v, e in m}} for m, c in items]


def _poly_from_json(data: Any, where: str) -> Poly:
    if not isinstance(data, list):
        raise ValueError(f"{where}: expected a list of terms")
    out = Poly()
    for k, term in enumerate(data):
        if not isinstance(term, dict) or set(term) != {"c", "m"}:
            raise ValueError(f"{where}[{k}]: expected an object with keys 'c' and 'm'")
        c, mono = term["c"], term["m"]
        if not isinstance(c, int) or isinstance(c, bool):
            raise ValueError(f"{where}[{k}].c: expected an integer")
        if not isinstance(mono, dict) or not all(
                isinstance(e, int) and not isinstance(e, bool) and e > 0 for e in mono.values()):
            raise ValueError(f"{where}[{k}].m: expected positive integer exponents")
        out = out + Poly.monomial(mono, c)
    return out


def _to_dict(s: LiftedSystem) -> dict[str, Any]:
    return {
        "lie_type": s.lie_type,
        "formulation": s.formulation,
        "u": list(s.u), "v": list(s.v), "t": list(s.t),
        "variables": list(s.variables),
        "parameters": list(s.parameters),
        "equations": [_poly_to_json(e) for e in s.equations],
        "det_equations": [{"matrix": [[_poly_to_json(a) for a in row] for row in d.matrix],
                           "equals": d.equals} for d in s.det_equations],
    }


_KEYS = ("lie_type", "formulation", "u", "v", "t", "variables", "parameters", "equations",
         "det_equations")


def _from_dict(data: Any) -> LiftedSystem:
    if not isinstance(data, dict):
        raise ValueError("top level: expected an object")
    missing = [k for k in _KEYS if k not in data]
    if missing:
        raise ValueError(f"top level: missing keys {missing}")
    for key in ("u", "v", "t", "variables", "parameters", "equations", "det_equations"):
        if not isinstance(data[key], list):
            raise ValueError(f"{key}: expected a list")
    eqs = tuple(_poly_from_json(e, f"equations[{k}]") for k, e in enumerate(data["equations"]))
    dets = []
    for k, node in enumerate(data["det_equations"]):
        if not isinstance(node, dict) or "matrix" not in node:
            raise ValueError(f"det_equations[{k}]: expected an object with a matrix")
        rows = tuple(tuple(_poly_from_json(a, f"det_equations[{k}].matrix[{i}][{j}]")
                           for j, a in enumerate(row)) for i, row in enumerate(node["matrix"]))
        dets.append(DetEquation(rows, int(node.get("equals", 1))))
    return LiftedSystem(str(data["lie_type"]), str(data["formulation"]),
                        tuple(data["u"]), tuple(data["v"]), tuple(data["t"]),
                        tuple(data["variables"]), tuple(data["parameters"]), eqs, tuple(dets))


def _fmt_tuple(w: tuple[int, ...]) -> str:
    return ",".join(str(a) for a in w)


def _to_text(s: LiftedSystem) -> str:
    lines = [
        f"type {s.lie_type}",
        f"formulation {s.formulation}",
        f"u {_fmt_tuple(s.u)}",
        f"v {_fmt_tuple(s.v)}",
        f"t {_fmt_tuple(s.t)}",
        "variables " + " ".join(s.variables),
        "parameters " + " ".join(s.parameters),
        f"equations {len(s.equations)}",
    ]
    lines += [f"  {format_poly(e)} = 0" for e in s.equations]
    for d in s.det_equations:
        lines.append(f"det {len(d.matrix)} = {d.equals}")
        lines += ["  | " + " ; ".join(format_poly(a) for a in row) + " |" for row in d.matrix]
    return "\n".join(lines) + "\n"


def _from_text(text: str) -> LiftedSystem:
    lines = text.splitlines()
    pos = 0

    def fail(msg: str):
        raise ValueError(f"line {pos + 1}: {msg}")

    def header(key: str) -> str:
        nonlocal pos
        if pos >= len(lines):
            fail(f"expected '{key}', got end of input")
        word, _, rest = lines[pos].partition(" ")
        if word != key:
            fail(f"expected '{key}', got {lines[pos]!r}")
        pos += 1
        return rest.strip()

    def ints(text: str) -> tuple[int, ...]:
        try:
            return tuple(int(a) for a in text.split(",") if a.strip())
        except ValueError:
            fail(f"bad integer list {text!r}")

    def poly(body: str, col: int) -> Poly:
        try:
            return parse_poly(body)
        except ValueError as exc:
            fail(f"column {col}: {exc}")

    tag = header("type")
    formulation = header("formulation")
    u, v, t = ints(header("u")), ints(header("v")), ints(header("t"))
    variables = tuple(header("variables").split())
    parameters = tuple(header("parameters").split())
    try:
        count = int(header("equations"))
    except ValueError:
        pos -= 1
        fail("equation count is not an integer")
    eqs = []
    for _ in range(count):
        if pos >= len(lines):
            fail("missing equations")
        line = lines[pos]
        if not line.rstrip().endswith("= 0"):
            fail("equation must end with '= 0'")
        eqs.append(poly(line.rstrip()[:-3].strip(), 3))
        pos += 1
    dets = []
    while pos < len(lines) and lines[pos].strip():
        rest = header("det")
        size_text, _, value = rest.partition("=")
        try:
            size, value = int(size_text), int(value)
        except ValueError:
            pos -= 1
            fail("det header must read 'det <size> = <value>'")
        rows = []
        for _ in range(size):
            if pos >= len(lines):
                fail("missing determinant rows")
            body = lines[pos].strip()
            if not (body.startswith("|") and body.endswith("|")):
                fail("determinant row must be enclosed in '|'")
            rows.append(tuple(poly(a.strip(), 3) for a in body[1:-1].split(";")))
            pos += 1
        dets.append(DetEquation(tuple(rows), value))
    return LiftedSystem(tag, formulation, u, v, t, variables, parameters, tuple(eqs), tuple(dets))


def serialize(system: LiftedSystem, fmt: str = "json") -> bytes:
    if fmt == "json":
        return json.dumps(_to_dict(system), sort_keys=False).encode()
    if fmt == "text":
        return _to_text(system).encode()
    raise ValueError(f"unknown format {fmt!r}")


def deserialize(data: bytes | str, fmt: str = "json") -> LiftedSystem:
    text = data.decode() if isinstance(data, bytes) else data
    if fmt == "json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return _from_dict(obj)
    if fmt == "text":
        return _from_text(text)
    raise ValueError(f"unknown format {fmt!r}")


def element_from_window(window: Sequence[int], tag: str) -> WeylElement:
    return parse_element(",".join(str(a) for a in window), tag)
