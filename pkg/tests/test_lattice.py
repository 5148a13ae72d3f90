import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from artin_epi.lattice import determinant, lattice_invariants, minor_gcd, same_lattice, smith_invariants

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def sympy_invariants(rows):
    snf = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    return [abs(int(snf[i, i])) for i in range(min(snf.shape))]


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_smith_invariants_match_sympy(rows):
    assert smith_invariants(rows) == sympy_invariants(rows)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda k: st.lists(st.lists(st.integers(-20, 20), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_determinant_matches_sympy(m):
    assert determinant(m) == int(sympy.Matrix(m).det())


def test_invariants_of_even_lattice():
    assert lattice_invariants([(2, 0, 0), (0, 2, 0), (0, 0, 2), (2, 2, 2)], 3) == [2, 2, 2]
    assert lattice_invariants([(1, 1, 0), (0, 1, 1)], 3) == [1, 1, 0]


def test_minor_gcd_detects_common_factor():
    rows = [(2, 4, 7), (6, 2, 1)]
    assert minor_gcd(rows, 2) == 20
    assert minor_gcd(rows, 1) == 2


@settings(max_examples=60, deadline=None)
@given(matrices, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_lattice_unchanged_by_adding_combinations(rows, coeffs):
    dim = len(rows[0])
    extra = tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(dim))
    assert same_lattice(rows, list(rows) + [extra], dim)
