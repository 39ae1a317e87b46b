import pytest

from qschur.exactnum import cyclotomic_field, FieldSpec
from qschur.littlealg import (
    corner, double_bracket, full_basis, generated_little, generated_subalgebra,
    infinitesimal_basis, little_basis, little_dims, little_generators, little_zero_basis,
    omega_idempotent, p_lambda_bar, sandwich_check, triangular_check, two_row_corner_check,
    two_row_idempotent, u1_basis,
)
from qschur.schuralg import schur_algebra
from qschur.weightcomb import derived_l, pr_count

# dims of little(n, r) for r = 0, 1, ...; frozen from the spanning-set rank,
# cross-checked below against the generated subalgebra and #pr(Xi(n, r)_1)
LITTLE = {
    (2, 3): [1, 4, 10, 17, 23, 26, 27],
    (2, 4): [1, 4, 8, 12, 15, 16, 16],
    (2, 5): [1, 4, 10, 20, 35, 53, 72],
    (2, 6): [1, 4, 10, 18, 27, 36, 44],
    (3, 3): [1, 9, 45, 157, 423],
    (3, 4): [1, 9, 39, 111, 238],
    (3, 5): [1, 9, 45, 165, 495],
    (3, 6): [1, 9, 45, 159, 441],
}
U1 = {
    (2, 4): [1, 4, 7, 8, 8, 8, 8],
    (2, 6): [1, 4, 10, 17, 23, 26, 27],
    (3, 4): [1, 9, 37, 93, 163],
    (3, 6): [1, 9, 45, 157, 423],
}


@pytest.mark.parametrize("key", sorted(LITTLE))
def test_little_dims_frozen(key):
    n, lp = key
    l = derived_l(lp)
    for r, d in enumerate(LITTLE[key]):
        assert little_basis(n, r, lp).dim() == d == pr_count(n, r, l, lp)


@pytest.mark.parametrize("n,r,lp", [(2, 3, 3), (2, 4, 4), (2, 5, 6), (3, 3, 3), (3, 3, 4)])
def test_generated_equals_spanned(n, r, lp):
    gen = generated_little(n, r, lp)
    lit = little_basis(n, r, lp)
    assert gen.same_span(lit)


def test_generated_without_grading_agrees():
    alg = schur_algebra(2, 3, cyclotomic_field(3))
    plain = generated_subalgebra(little_generators(alg))
    assert plain.dim() == 17
    assert plain.same_span(little_basis(2, 3, 3))


def test_pinned_values():
    assert little_basis(2, 3, 3).dim() == 17
    assert little_basis(2, 2, 4).dim() == 8
    assert little_basis(2, 2, 3).dim() == 10


@pytest.mark.parametrize("key", sorted(U1))
def test_u1_dims_frozen(key):
    n, lp = key
    for r, d in enumerate(U1[key]):
        assert u1_basis(n, r, lp).dim() == d


def test_sandwich_strict_example():
    rep = sandwich_check(2, 2, 4)
    assert (rep["dim_u1"], rep["dim_little"], rep["dim_infinitesimal"]) == (7, 8, 8)
    assert rep["u1_in_little"] and rep["little_in_infinitesimal"]
    assert not rep["u1_equals_little"]


@pytest.mark.parametrize("lp", [3, 5])
def test_odd_lprime_u1_equals_little(lp):
    for r in range(5):
        assert sandwich_check(2, r, lp)["u1_equals_little"]


def test_even_lprime_small_r_can_be_equal():
    # equality at small r for even l' as well: the parity statement is per grid, not per cell
    assert sandwich_check(2, 1, 4)["u1_equals_little"]
    assert sandwich_check(2, 2, 6)["u1_equals_little"]
    assert not sandwich_check(2, 3, 6)["u1_equals_little"]


def test_little_dims_report():
    d = little_dims(2, 3, 3)
    assert d == {"n": 2, "r": 3, "lprime": 3, "dim_u1": 17, "dim_little": 17,
                 "dim_infinitesimal": 18, "dim_little_zero": 3}


def test_little_is_closed_under_products():
    for n, r, lp in [(2, 3, 3), (2, 4, 4), (3, 2, 3)]:
        assert little_basis(n, r, lp).is_closed()
        assert infinitesimal_basis(n, r, lp).is_closed()


def test_little_is_schur_when_l_exceeds_r():
    for n, r, lp in [(2, 2, 3), (2, 3, 8), (3, 2, 5)]:
        assert little_basis(n, r, lp).dim() == full_basis(n, r, lp).dim()


def test_zero_part():
    B = little_zero_basis(3, 4, 3)
    assert B.dim() == 9
    alg = B.ambient
    total = alg.zero()
    for lb in [(0, 0, 1), (1, 0, 0)]:
        p = p_lambda_bar(alg, lb)
        assert p * p == p
        total = total + p
    assert total * total == total


def test_triangular_decomposition():
    assert triangular_check(2, 3, 3)
    assert triangular_check(3, 2, 4)


def test_double_bracket_sum_over_class():
    alg = schur_algebra(2, 4, cyclotomic_field(3))
    x = double_bracket(alg, (0, 0, 0, 0), (1, 0))
    assert x == p_lambda_bar(alg, (1, 0))
    assert sorted(x.vec) == [(1, 0, 0, 3), (4, 0, 0, 0)]


@pytest.mark.parametrize("n", [2, 3])
def test_omega_corner_has_dimension_r_factorial(n):
    S = little_basis(n, n, 3)
    k = omega_idempotent(S.ambient)
    assert corner(k, S).dim() == {2: 2, 3: 6}[n]


def test_corner_requires_idempotent():
    S = little_basis(2, 2, 3)
    with pytest.raises(ValueError):
        corner(S.ambient.e(1), S)
    with pytest.raises(ValueError):
        omega_idempotent(schur_algebra(2, 3, cyclotomic_field(3)))


def test_two_row_idempotent():
    alg = schur_algebra(3, 3, cyclotomic_field(4))
    e = two_row_idempotent(alg)
    assert e * e == e


@pytest.mark.parametrize("r,lp", [(1, 3), (2, 3), (1, 4), (2, 4), (3, 4), (4, 4),
                                  (2, 5), (3, 5), (4, 5)])
def test_two_row_corner_isomorphic_for_small_r(r, lp):
    rep = two_row_corner_check(r, lp)
    assert rep["dim_corner"] == rep["dim_two_row"]
    assert rep["isomorphic_by_padding"]


def test_two_row_corner_larger_once_third_part_can_be_lprime():
    # mu_3 = l' is congruent to 0, so the corner picks up extra weights
    rep = two_row_corner_check(3, 3)
    assert (rep["dim_corner"], rep["dim_two_row"]) == (21, 17)
    assert not rep["isomorphic_by_padding"]
    assert two_row_corner_check(4, 3)["dim_corner"] == 43


def test_prime_field_dims_agree():
    f = FieldSpec(3, "prime", 7)
    assert little_basis(2, 3, f).dim() == 17
    assert sandwich_check(2, 2, FieldSpec(4, "prime", 5))["dim_u1"] == 7
