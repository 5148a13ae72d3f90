import random

import pytest
from hypothesis import given, settings, strategies as st

from artin_epi.families import (
    FAMILIES,
    MorphismSpec,
    SpecError,
    arity,
    build_images,
    check_coxeter_relations,
    closed_form_p,
    conjugate_by_shift,
    eval_linear,
    normalize_to_yp,
    parse_linear,
    printed_images,
)


def random_spec(rng, family, n):
    return MorphismSpec(family, n, tuple(rng.randint(-9, 9) for _ in range(arity(family, n))))


@pytest.mark.parametrize("family", FAMILIES)
def test_every_family_respects_the_relations(family):
    rng = random.Random(7)
    ns = [4] if family in ("L3", "L4", "L5", "L6", "L7") else [6] if family == "L2" else [3, 4, 5, 7]
    for n in ns:
        for _ in range(10):
            spec = random_spec(rng, family, n)
            assert check_coxeter_relations(build_images(spec)).ok, spec


@pytest.mark.parametrize("family", ["L3", "L4", "L6", "L7"])
def test_literal_reading_breaks_relations(family):
    # the tabulated pairs taken as [u]s (translate after permuting) fail
    spec = MorphismSpec(family, 4, (1, 2, 3))
    assert not check_coxeter_relations(printed_images(spec)).ok


def test_standard_family_is_coxeter_generators():
    from artin_epi.core import coxeter_gens

    assert build_images(MorphismSpec("MU", 5)).images == coxeter_gens(5)


@pytest.mark.parametrize(
    "expr,params,value",
    [("-2x3-x4+1", (0, 0, 1, 2), -3), ("x1", (5, 0), 5), ("-x1+x2-x5+x4", (1, 2, 0, 4, 8), -3), ("7", (), 7)],
)
def test_linear_forms(expr, params, value):
    assert eval_linear(expr, params) == value


def test_parse_linear_coefficients():
    assert parse_linear("-2x3-x4+1", 4) == ((0, 0, -2, -1), 1)


@pytest.mark.parametrize(
    "obj",
    [{"family": "L9", "n": 4, "params": []}, {"family": "L3", "n": 5, "params": [1, 2, 3]}, {"family": "YP", "n": 4, "params": [1]}, {"n": 4}],
)
def test_malformed_specs_are_rejected(obj):
    with pytest.raises(SpecError):
        MorphismSpec.from_json(obj)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 8).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(-6, 6), min_size=n + 1, max_size=n + 1))))
def test_normal_form_conjugates_back(case):
    n, ps = case
    spec = MorphismSpec("L1", n, tuple(ps))
    y, p, v = normalize_to_yp(spec)
    assert y == ps[n]
    assert p == sum(ps[:n])
    assert conjugate_by_shift(v, build_images(spec)) == build_images(MorphismSpec("YP", n, (y, p)))


def test_tabulated_closed_formula_disagrees_with_normal_form():
    # the long closed formula for p is not the conjugation invariant sum
    n = 7
    xs = (1, 0, 0, 0, 0, 0, 0)
    y, p, _ = normalize_to_yp(MorphismSpec("L1", n, xs + (1,)))
    assert p == 1
    assert closed_form_p(n, xs) != p


def test_two_parameter_images_shape():
    # σ_i -> [y,..,-(n-2)y,0,y,..](i,i+1) and σ_n -> [p,y,..,y,-(n-2)y-p](1,n)
    imgs = build_images(MorphismSpec("YP", 4, (2, 3)))
    assert [g.trans for g in imgs.images] == [(-4, 0, 2, 2), (2, -4, 0, 2), (2, 2, -4, 0), (3, 2, 2, -7)]
