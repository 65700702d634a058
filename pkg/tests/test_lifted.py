import itertools

import pytest
from hypothesis import given, strategies as st

from schubvan.acceptance import WORKED_EXAMPLE, _canonical
from schubvan.lifted import (LiftedSystem, build_type_a, build_type_b, build_type_c, build_type_d,
                             build_uniform, coefficient_system, deserialize, expand_det_equations,
                             serialize, stiefel_pattern_signed)
from schubvan.polyring import Poly, parse_poly
from schubvan.weyl import LieType, elements, length, long_element, parse_element

P = parse_element


def identity(tag, n):
    return next(w for w in elements(LieType(tag, n)) if length(w, tag) == 0)


def test_worked_example_reproduced():
    s = build_type_a(P("2143"), P("3124"), P("1423"))
    assert s.num_equations == 7
    assert s.variables == ("x1", "x2", "x3", "x4", "alpha31", "alpha32", "beta32")
    assert sorted(map(str, _canonical(s))) == sorted(str(parse_poly(e)) for e in WORKED_EXAMPLE)


def test_identity_type_a_is_empty():
    e = P("123")
    s = build_type_a(e, e, e)
    assert s.equations == () and s.variables == ()


def test_type_a_shape_on_s4():
    E = list(elements(LieType("A", 4)))
    for u, v, t in itertools.product(E, repeat=3):
        s = build_type_a(u, v, t)
        assert s.num_equations <= 3 * 6
        for f in s.equations:
            assert f.degree_in(s.variables) <= 2
            assert f.degree_in(s.parameters) <= 1
            assert set(f.terms.values()) <= {1}


def test_type_c_identity_counts():
    e = identity("C", 1)
    s = build_type_c(e, e, e)
    isotropy = 12 * 1
    cayley = 8 * 1
    flags = 2 * 1
    assert s.num_equations == isotropy + cayley + flags
    assert s.det_equations == ()


def test_type_b_matches_c():
    for u, v, t in itertools.islice(itertools.product(elements(LieType("C", 2)), repeat=3), 0, 512, 7):
        b, c = build_type_b(u, v, t), build_type_c(u, v, t)
        assert (b.variables, b.parameters, b.equations) == (c.variables, c.parameters, c.equations)
        assert b.lie_type == "B"


def test_type_d_det_node_is_pattern():
    e = identity("D", 2)
    s = build_type_d(e, e, e)
    assert len(s.det_equations) == 1
    pattern = stiefel_pattern_signed(e, LieType("D", 2)).matrix()
    assert [list(r) for r in s.det_equations[0].matrix] == [list(r) for r in pattern]
    assert s.num_equations == 12 * 4 + 8 * 4 + 2 * 6


def test_det_expansion_guard():
    e = identity("D", 2)
    s = build_type_d(e, e, e)
    (det,) = expand_det_equations(s)
    # the pattern is unitriangular so the determinant equation is trivial
    assert det == Poly()
    big = build_type_d(identity("D", 4), identity("D", 4), identity("D", 4))
    with pytest.raises(ValueError):
        expand_det_equations(big)


def test_type_d_rejects_odd_signs():
    with pytest.raises(ValueError):
        build_type_d(P("-1,2", "D"), identity("D", 2), identity("D", 2))


def trivial_point(system):
    values = {}
    for name in system.variables:
        if name.startswith("b"):
            values[name] = 1
        else:
            i, j = name[-2], name[-1]
            values[name] = int(i == j)
    for name in system.parameters:
        values[name] = int(system.lie_type == "A" and name[-2] == name[-1])
    return values


@pytest.mark.parametrize("tag,n", [("A", 2), ("A", 3), ("B", 2), ("C", 2), ("D", 2)])
def test_uniform_trivial_point(tag, n):
    t = LieType(tag, n)
    s = build_uniform(identity(tag, n), identity(tag, n), long_element(t), t)
    point = trivial_point(s)
    assert all(f.subs(point) == Poly() for f in s.equations)


def test_uniform_counts_type_a():
    t = LieType("A", 3)
    s = build_uniform(identity("A", 3), identity("A", 3), long_element(t), t)
    tri = 6
    assert len(s.variables) == 6 * (tri + 1)
    assert len(s.parameters) == 2 * 9
    assert s.num_equations == 6 + 2 * 9


def test_coefficient_system_uses_w0():
    u, v, w = P("2143"), P("3124"), P("4132")
    assert coefficient_system(u, v, w, "A") == build_type_a(u, v, P("1423"))
    assert coefficient_system(u, v, w, "A", "borel").formulation == "borel"


def test_validation():
    with pytest.raises(ValueError):
        LiftedSystem("A", "cell", (1,), (1,), (1,), ("x1",), ("x1",), ())
    with pytest.raises(ValueError):
        LiftedSystem("A", "cell", (1,), (1,), (1,), ("x1",), (), (parse_poly("x1*y1"),))


EMPTY = LiftedSystem("A", "cell", (1, 2), (1, 2), (1, 2), (), (), ())


@pytest.mark.parametrize("fmt", ["json", "text"])
def test_round_trip_examples(fmt):
    s = build_type_a(P("2143"), P("3124"), P("1423"))
    assert deserialize(serialize(s, fmt), fmt) == s
    assert deserialize(serialize(EMPTY, fmt), fmt) == EMPTY
    d = build_type_d(identity("D", 2), identity("D", 2), identity("D", 2))
    assert deserialize(serialize(d, fmt), fmt) == d


SYSTEM_SOURCES = [("A", 3), ("A", 4), ("C", 1), ("C", 2), ("B", 2), ("D", 2)]


@st.composite
def built_systems(draw):
    tag, n = draw(st.sampled_from(SYSTEM_SOURCES))
    E = list(elements(LieType(tag, n)))
    u, v, w = (draw(st.sampled_from(E)) for _ in range(3))
    formulation = draw(st.sampled_from(["cell", "cell", "borel"])) if n <= 2 else "cell"
    return coefficient_system(u, v, w, tag, formulation)


@given(built_systems(), st.sampled_from(["json", "text"]))
def test_round_trip_property(system, fmt):
    assert deserialize(serialize(system, fmt), fmt) == system


def test_json_is_canonical():
    s = build_type_a(P("2143"), P("3124"), P("1423"))
    assert serialize(s) == serialize(deserialize(serialize(s)))


@pytest.mark.parametrize("data,fmt,where", [
    ('{"lie_type": "A"', "json", "line 1"),
    ('{"lie_type": "A", "formulation": "cell"}', "json", "missing"),
    ("type A\nformulation cell\nu 1,2\nv 1,2\nt 1,2\nvariables x1\nparameters\nequations 1\n  x1 + = 0\n",
     "text", "line 9"),
])
def test_malformed_input_diagnostics(data, fmt, where):
    with pytest.raises(ValueError, match=where):
        deserialize(data, fmt)
