from hypothesis import given, strategies as st

import pytest

from artin_epi import dihedral as d

words = st.lists(st.sampled_from([1, 2]), max_size=14)


@given(words, words)
def test_product_matches_word_reduction(u, v):
    assert d.from_word(u) * d.from_word(v) == d.from_word(d.reduce_word(u + v))


@given(words)
def test_length_is_reduced_word_length(u):
    e = d.from_word(u)
    assert d.word_length(e) == len(d.reduce_word(u)) == len(e.word())
    assert d.from_word(e.word()) == e


@given(words)
def test_inverse_and_swap(u):
    e = d.from_word(u)
    assert (e * e.inverse()) == d.IDENTITY
    swapped = d.from_word([3 - i for i in u])
    assert d.swap(e) == swapped


def test_elements_up_to_length():
    elems = d.elements_up_to(5)
    assert len(elems) == len(set(elems)) == 11
    assert max(map(d.word_length, elems)) == 5


def test_surjectivity_rule_matches_closure():
    elems = d.elements_up_to(5)
    for a in elems:
        for b in elems:
            m = d.A1Morphism(a, b)
            assert d.is_epi_a1(m) == d.closure_reaches_generators(m), str(m)


def test_listed_families_are_onto():
    for q in range(1, 10, 2):
        for w in d.LENGTH_TWO:
            for start in (1, 2):
                assert d.is_epi_a1(d.xi1(q, w, start))
                assert d.is_epi_a1(d.xi2(q, w, start))
    assert d.is_epi_a1(d.MU)


def test_even_alternating_products_are_not_onto():
    assert not d.is_epi_a1(d.xi1(4))


def test_bounded_classification_has_three_classes():
    res = d.classify_bounded(7, 6)
    assert res.epis == 46
    assert not res.extras and not res.missing
    assert sorted(tuple(lab) for lab in res.labels) == [("mu",), ("xi1",), ("xi2",)]


def test_family_members_collapse_under_small_conjugators():
    # swapping the letters and conjugating by s1 takes (s1s2s1, s1s2) to (s1s2s1s2s1, s1s2)
    a, b = d.xi1(3), d.xi1(5)
    psi = d.find_equivalence(a, b, 3)
    assert psi == d.A1Auto(d.S1, True)
    assert psi.apply(a) == b


def test_bounds_are_enforced():
    with pytest.raises(d.BoundExceeded):
        d.classify_bounded(d.MAX_LEN_LIMIT + 1, 2)


def test_case_split_for_long_images_has_counterexamples():
    cases = d.long_image_cases()
    wrong = [c for c in cases if not c.agrees]
    assert wrong
    assert all(c.case == 1 and c.w_prime_start == 1 for c in wrong)
    assert d.is_epi_a1((d.from_word([1, 2, 1]), d.from_word([1, 2, 1, 2, 1])))
