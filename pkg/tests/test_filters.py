import itertools

from schubvan.filters import filter_vanish, knutson_set
from schubvan.schubert import coeff_exact
from schubvan.weyl import LieType, elements, parse_element

P = parse_element


def test_degree_certificate():
    cert = filter_vanish(P("213"), P("213"), P("4321"))
    assert cert is not None and cert.name == "Degree"
    assert cert.explain()


def test_length_decrease_certified():
    assert filter_vanish(P("321"), P("123"), P("312")) is not None
    assert filter_vanish(P("321"), P("213"), P("312")) is not None


def test_no_certificate_for_nonzero():
    assert filter_vanish(P("213"), P("213"), P("312")) is None


def test_knutson_fires_on_zero():
    cert = filter_vanish(P("213"), P("213"), P("231"))
    assert cert is not None
    assert coeff_exact(P("213"), P("213"), P("231")) == 0


def test_knutson_set_is_descent_union_subset():
    u, v, w = P("2143"), P("3124"), P("4132")
    assert knutson_set(u, v, w) <= {1, 2, 3}


def test_sound_on_s3_cubed():
    E = list(elements(LieType("A", 3)))
    for u, v, w in itertools.product(E, repeat=3):
        if filter_vanish(u, v, w) is not None:
            assert coeff_exact(u, v, w) == 0
