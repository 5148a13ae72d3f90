from itertools import permutations, product

import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from artin_epi.core import Perm
from artin_epi.symmetric import (
    are_conjugate,
    enumerate_surjective_homs,
    generates_sn,
    listed_homs,
    satisfies_relations,
    standard_hom,
)


def brute_force_classes(n):
    """Plain product search with sympy deciding generation; no pruning by cycle type."""
    allp = list(permutations(range(n)))
    mul = lambda a, b: tuple(a[b[i]] for i in range(n))  # noqa: E731
    braid = lambda a, b: mul(mul(a, b), a) == mul(mul(b, a), b)  # noqa: E731
    commute = lambda a, b: mul(a, b) == mul(b, a)  # noqa: E731
    inv = lambda a: tuple(sorted(range(n), key=lambda i: a[i]))  # noqa: E731
    order = 1
    for k in range(2, n + 1):
        order *= k
    found = set()
    for tup in product(allp, repeat=n):
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                adjacent = j == i + 1 or (i == 0 and j == n - 1)
                a, b = tup[i], tup[j]
                if adjacent and (a == b or not braid(a, b)):
                    ok = False
                elif not adjacent and not commute(a, b):
                    ok = False
                if not ok:
                    break
            if not ok:
                break
        if not ok or PermutationGroup([Permutation(list(t)) for t in tup]).order() != order:
            continue
        key = min(tuple(mul(mul(c, t), inv(c)) for t in tup) for c in allp)
        found.add(key)
    return found


def test_rank_three_has_a_single_class():
    res = enumerate_surjective_homs(3)
    assert res.complete
    assert len(res.classes) == len(brute_force_classes(3)) == 1
    assert are_conjugate(res.classes[0].perms, standard_hom(3).perms)


def test_rank_four_search_matches_brute_force():
    res = enumerate_surjective_homs(4)
    assert len(res.classes) == len(brute_force_classes(4))


def test_listed_representations_are_surjections():
    for item, hom in listed_homs().items():
        assert satisfies_relations(hom.perms), item
        assert generates_sn(hom.perms), item


def test_listed_rank_four_items_are_pairwise_non_conjugate():
    four = [h for h in listed_homs().values() if h.n == 4]
    for i in range(len(four)):
        for j in range(i + 1, len(four)):
            assert not are_conjugate(four[i].perms, four[j].perms)


def test_rank_four_search_finds_a_class_beyond_the_listed_ones():
    res = enumerate_surjective_homs(4)
    listed = [h for h in listed_homs().values() if h.n == 4]
    unmatched = [c for c in res.classes if not any(are_conjugate(c.perms, h.perms) for h in listed)]
    assert len(unmatched) == 1
    # it is the listed item with (2,3),(3,4) moved one generator along the cycle
    rotated = tuple(Perm.from_cycles(4, c) for c in [(3, 4), (2, 3), (3, 4), (1, 4)])
    assert are_conjugate(unmatched[0].perms, rotated)


def test_degenerate_tuples_are_excluded_by_default():
    strict = enumerate_surjective_homs(4)
    loose = enumerate_surjective_homs(4, nondegenerate=False)
    assert len(loose.classes) >= len(strict.classes)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_standard_tuple_generates(n):
    assert generates_sn(standard_hom(n).perms)
    assert satisfies_relations(standard_hom(n).perms)
