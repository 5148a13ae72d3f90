from itertools import permutations

from hypothesis import given, settings, strategies as st

from artin_epi.core import (
    AffineElem,
    ArtinWord,
    CoxeterGraph,
    Perm,
    RankError,
    coxeter_gen,
    coxeter_gens,
    eval_word,
    perm_act,
    perm_to_simple_word,
    prod,
    trans_w,
)

import pytest


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(Perm)


def elems(n):
    vec = st.lists(st.integers(-6, 6), min_size=n - 1, max_size=n - 1).map(lambda v: tuple(v) + (-sum(v),))
    return st.builds(AffineElem, vec, perms(n))


def as_matrix(e):
    """(n+1)x(n+1) matrix of x -> s.x + u, an independent model of the product."""
    n = e.n
    m = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(1, n + 1):
        m[e.perm(j) - 1][j - 1] = 1
    for i in range(n):
        m[i][n] = e.trans[i]
    m[n][n] = 1
    return m


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_perm_composition_is_right_to_left():
    p = Perm.from_cycles(3, (1, 2))
    q = Perm.from_cycles(3, (2, 3))
    assert (p * q)(2) == p(q(2)) == 3
    assert (q * p)(2) == q(p(2)) == 1


def test_perm_rejects_non_bijection():
    with pytest.raises(ValueError):
        Perm((1, 1, 3))


@settings(max_examples=200, deadline=None)
@given(elems(4), elems(4), elems(4))
def test_affine_group_laws(a, b, c):
    one = AffineElem.identity(4)
    assert (a * b) * c == a * (b * c)
    assert a * one == a == one * a
    assert (a * a.inverse()).is_identity()
    assert sum((a * b).trans) == 0


@settings(max_examples=100, deadline=None)
@given(elems(5), elems(5))
def test_product_matches_affine_matrices(a, b):
    assert as_matrix(a * b) == matmul(as_matrix(a), as_matrix(b))


@given(perms(5), st.lists(st.integers(-5, 5), min_size=5, max_size=5))
def test_action_moves_coordinates(s, v):
    out = perm_act(s, v)
    for i in range(1, 6):
        assert out[s(i) - 1] == v[i - 1]


@given(elems(4), st.integers(-7, 7))
def test_power_matches_repeated_product(e, k):
    base = e if k >= 0 else e.inverse()
    want = AffineElem.identity(4)
    for _ in range(abs(k)):
        want = want * base
    assert e**k == want


def test_json_round_trip():
    e = AffineElem((2, -1, 0, -1), Perm((2, 3, 1, 4)))
    assert AffineElem.from_json(e.to_json()) == e
    w = ArtinWord.of(1, -3, 2)
    assert ArtinWord.from_json(w.to_json()) == w


def test_rank_mismatch_is_reported():
    with pytest.raises(RankError):
        AffineElem((1, -1, 0), Perm.identity(4))
    with pytest.raises(RankError):
        coxeter_gen(4, 5)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_coxeter_generators_satisfy_affine_relations(n):
    gens = coxeter_gens(n)
    one = AffineElem.identity(n)
    for g in gens:
        assert (g * g).is_identity()
    for i, j, m in CoxeterGraph.affine_a(n).edges():
        a, b = gens[i - 1], gens[j - 1]
        assert prod(a, b, m, one) == prod(b, a, m, one)


def test_affine_generator_is_reflection_with_unit_shift():
    assert coxeter_gen(4, 4) == AffineElem((1, 0, 0, -1), Perm((4, 2, 3, 1)))
    assert trans_w(4, 2, 3).trans == (0, 3, 0, -3)


@pytest.mark.parametrize("n", [3, 4])
def test_simple_words_have_inversion_length(n):
    for im in permutations(range(1, n + 1)):
        p = Perm(im)
        w = perm_to_simple_word(p)
        assert len(w) == p.inversions()
        assert w.is_positive()
        assert eval_word(coxeter_gens(n), w).perm == p


def test_artin_word_inverse_evaluates_to_inverse():
    gens = coxeter_gens(4)
    w = ArtinWord.of(1, 4, -2, 3)
    assert eval_word(gens, w) * eval_word(gens, w.inverse()) == AffineElem.identity(4)
