import itertools

import pytest
from hypothesis import given, strategies as st

from schubvan.weyl import (LieType, Permutation, SignedPermutation, bruhat_leq, bruhat_leq_subword,
                           check_element, code_to_perm, descents, elements, form_matrix,
                           inversions, lehmer_code, length, long_element, matrix_representative,
                           negative_count, parse_element, reduced_word, rothe_diagram, zeta)
from schubvan.fpmatrix import int_det, int_matmul


def P(s):
    return parse_element(s)


perms = st.integers(1, 6).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def test_inversions():
    assert inversions(Permutation.identity(4)) == 0
    assert inversions(P("4321")) == 6


def test_descents():
    assert descents(Permutation.identity(4)) == set()
    assert descents(P("1432")) == {2, 3}
    assert descents(P("4321")) == {1, 2, 3}


def test_lehmer_code_identity():
    assert lehmer_code(Permutation.identity(5)) == (0,) * 5


@given(perms)
def test_code_round_trip(w):
    assert code_to_perm(lehmer_code(w)).pad(w.n) == w
    assert sum(lehmer_code(w)) == inversions(w)


def test_bruhat_examples():
    assert bruhat_leq(P("312"), P("312"))
    assert not bruhat_leq(P("321"), P("312"))


def test_bruhat_agrees_with_subword_on_s4():
    E = list(elements(LieType("A", 4)))
    for u, w in itertools.product(E, repeat=2):
        assert bruhat_leq(u, w) == bruhat_leq_subword(u, w)


@given(perms)
def test_reduced_word_length(w):
    word = reduced_word(w)
    assert len(word) == inversions(w)
    x = Permutation.identity(w.n)
    for i in word:
        x = x * Permutation.simple(i, w.n)
    assert x == w


def test_rothe_and_zeta():
    assert rothe_diagram(Permutation.identity(3)) == set()
    assert zeta(Permutation.identity(3)) == 0
    for w in elements(LieType("A", 4)):
        assert len(rothe_diagram(w)) == inversions(w)


def test_composition_convention():
    u, v = P("213"), P("132")
    assert u * v == P("231")
    for i in range(1, 4):
        assert (u * v)(i) == u(v(i))


def test_signed_lengths():
    assert length(SignedPermutation.identity(2), "C") == 0
    assert length(parse_element("-1,-2", "C"), "C") == 4
    assert length(parse_element("2,-1", "C"), "C") == 2
    assert negative_count(parse_element("-1,-2", "C")) == 2


def test_long_elements():
    assert long_element(LieType("C", 2)) == parse_element("-1,-2", "C")
    assert long_element(LieType("A", 3)) == P("321")
    # in type D with n odd the first sign stays positive
    assert long_element(LieType("D", 3)) == parse_element("1,-2,-3", "D")


@pytest.mark.parametrize("tag,n,count", [("A", 4, 24), ("B", 2, 8), ("C", 3, 48), ("D", 3, 24)])
def test_group_orders(tag, n, count):
    assert len(set(elements(LieType(tag, n)))) == count


@pytest.mark.parametrize("tag,n", [("A", 3), ("B", 2), ("C", 2), ("D", 3)])
def test_long_element_has_max_length(tag, n):
    t = LieType(tag, n)
    w0 = long_element(t)
    assert length(w0, tag) == t.num_positive_roots
    assert max(length(w, tag) for w in elements(t)) == t.num_positive_roots


def test_check_element_rejects_odd_sign_in_type_d():
    with pytest.raises(ValueError):
        check_element(parse_element("-1,2", "D"), LieType("D", 2))


@pytest.mark.parametrize("tag,n", [("A", 3), ("B", 2), ("C", 2), ("D", 2)])
def test_identity_matrix_representative(tag, n):
    t = LieType(tag, n)
    M = matrix_representative(next(w for w in elements(t) if length(w, tag) == 0), t)
    assert M == [[int(i == j) for j in range(t.dim)] for i in range(t.dim)]


@pytest.mark.parametrize("tag,n", [("B", 2), ("C", 2), ("D", 3)])
def test_representatives_preserve_form(tag, n):
    t = LieType(tag, n)
    J = form_matrix(t)
    for w in elements(t):
        M = matrix_representative(w, t)
        MT = [list(r) for r in zip(*M)]
        assert int_matmul(int_matmul(M, J), MT) == J
        assert int_det(M) == 1


def test_representatives_are_homomorphic():
    t = LieType("C", 2)
    E = list(elements(t))
    for u, v in itertools.product(E, repeat=2):
        Mu, Mv = matrix_representative(u, t), matrix_representative(v, t)
        assert [[abs(a) for a in r] for r in int_matmul(Mu, Mv)] == \
               [[abs(a) for a in r] for r in matrix_representative(u * v, t)]


def test_parse_rejects_garbage():
    for bad in ("1,1,2", "0,1", "abc", ""):
        with pytest.raises(ValueError):
            parse_element(bad, "C")
