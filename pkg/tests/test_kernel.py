from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from artin_epi.core import eval_word
from artin_epi.families import MorphismSpec, build_images
from artin_epi import kernel
from artin_epi.lattice import same_lattice

from oracle_bfs import reaches_generators


def sympy_full(rows, dim):
    m = sympy.Matrix([list(r[:dim]) for r in rows])
    snf = smith_normal_form(m, domain=sympy.ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    return len(diag) >= dim and all(d == 1 for d in diag[:dim])


def test_verdicts_match_subgroup_closure_at_rank_three():
    for y in range(-3, 4):
        for p in range(-3, 4):
            spec = MorphismSpec("YP", 3, (y, p))
            assert kernel.is_epimorphism(spec).is_epi == reaches_generators(build_images(spec).images, 8), (y, p)


@pytest.mark.parametrize("y,p,onto", [(1, 1, True), (1, 2, False), (2, 3, True)])
def test_verdicts_match_subgroup_closure_at_rank_four(y, p, onto):
    spec = MorphismSpec("YP", 4, (y, p))
    assert reaches_generators(build_images(spec).images, 5) is onto
    assert kernel.is_epimorphism(spec).is_epi is onto


def test_closed_form_rule_misses_a_common_factor_of_p_and_n():
    # n = 3, p = 3: the parity rule accepts it, closure and lattice both reject
    spec = MorphismSpec("YP", 3, (1, 3))
    assert kernel.predicted_is_epi(spec)
    assert not reaches_generators(build_images(spec).images, 8)
    assert not kernel.is_epimorphism(spec).is_epi


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_lattice_verdict_matches_sympy(n, y, p):
    m = kernel.kernel_matrix(MorphismSpec("YP", n, (y, p)))
    full, _ = kernel.lattice_is_full(m)
    assert full == sympy_full(m.rows, n - 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_generator_sets_span_one_lattice(n, y, p):
    spec = MorphismSpec("YP", n, (y, p))
    a = kernel.project(kernel.kernel_matrix(spec, "SCHREIER").rows)
    b = kernel.project(kernel.kernel_matrix(spec, "ALL").rows)
    assert same_lattice(a, b, n - 1)


def test_cached_rows_equal_direct_evaluation():
    spec = MorphismSpec("YP", 5, (3, -2))
    direct = kernel.kernel_matrix_direct(build_images(spec), "SCHREIER")
    assert kernel.kernel_matrix(spec, "SCHREIER").rows == direct.rows


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 7), st.integers(-5, 5), st.integers(-5, 5))
def test_gk_images_have_closed_form(n, y, p):
    im = build_images(MorphismSpec("YP", n, (y, p)))
    for k in range(1, n):
        assert eval_word(im, kernel.gk_word(k, n)).trans == kernel.gk_closed_form(k, n, y, p)
    assert eval_word(im, kernel.gk_word(n, n)).trans == kernel.gn_closed_form(n, y)


def test_determinant_of_gk_rows_matches_sympy():
    for n in (3, 4, 5):
        for y, p in [(1, 2), (2, 3), (-1, 4)]:
            im = build_images(MorphismSpec("YP", n, (y, p)))
            rows = [eval_word(im, kernel.gk_word(k, n)).trans[: n - 1] for k in range(1, n)]
            want = kernel.det_product(n, y, p, range(1, n))
            assert abs(int(sympy.Matrix(rows).det())) == abs(want)


def test_l2_kernel_is_trivial():
    for ps in [(1, 2, 3, 4, 5), (-3, 0, 7, 1, 2)]:
        m = kernel.kernel_matrix(MorphismSpec("L2", 6, ps))
        assert not m.distinct_nonzero()


@pytest.mark.parametrize("family", ["L3", "L4", "L6", "L7"])
def test_cubic_families_are_conjugate_into_a_finite_group(family):
    for ps in kernel.LISTED_EPIS[family][:3]:
        spec = MorphismSpec(family, 4, ps)
        assert kernel.coboundary_shift(build_images(spec)) is not None
        assert not kernel.kernel_matrix(spec).distinct_nonzero()
        assert not kernel.is_epimorphism(spec).is_epi


def test_listed_cubic_tuple_is_not_onto_by_closure():
    spec = MorphismSpec("L3", 4, (1, 0, 0))
    assert not reaches_generators(build_images(spec).images, 5)


@settings(max_examples=40, deadline=None)
@given(st.tuples(*[st.integers(-5, 5)] * 4))
def test_l5_kernel_images_are_even(ps):
    m = kernel.kernel_matrix(MorphismSpec("L5", 4, ps))
    assert all(x % 2 == 0 for r in m.rows for x in r)
    assert not kernel.lattice_is_full(m)[0]


def test_rows_are_linear_in_parameters():
    n = 5
    f = lambda y, p: kernel.kernel_matrix(MorphismSpec("YP", n, (y, p))).rows  # noqa: E731
    a, b, s = f(1, 0), f(0, 1), f(3, -2)
    assert all(r == tuple(3 * x - 2 * z for x, z in zip(ra, rb)) for r, ra, rb in zip(s, a, b))


def test_gcd_shift_keeps_coprimality():
    for n in range(3, 8):
        for y in range(1, 6):
            for p in range(-6, 7):
                if gcd(y, p) == 1:
                    for k in range(1, n):
                        assert gcd(y, p + (n * n - n * k - n) * y) == 1
