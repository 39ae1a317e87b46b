import pytest

from qschur.appendixalg import (
    DiagonalElement, binom_values, certificate_lines, construct_klambda, evaluate_in_algebra,
    ktilde_relation, little_zero_image, strata, verify_integral_surjectivity,
)
from qschur.exactnum import gauss_binom
from qschur.qcoord import compositions
from qschur.schuralg import schur_algebra


def test_top_stratum_certificates():
    assert construct_klambda(2, 2, (2, 0)).render() == "[kt1;2/4]"
    assert construct_klambda(2, 2, (0, 2)).render() == "[kt1^-1;2/4]"


def test_binom_values_oracle():
    W = tuple(compositions(3, 2))
    vals = binom_values(W, 1, 1, 2)
    for lam in W:
        assert vals.get(lam) == gauss_binom(lam[0] - lam[1] + 1, 2)


@pytest.mark.parametrize("n,r", [(1, 3), (2, 0), (2, 3), (2, 5), (3, 2), (3, 3), (3, 4)])
def test_integral_surjectivity(n, r):
    assert verify_integral_surjectivity(n, r)


@pytest.mark.parametrize("lam", list(compositions(3, 3)))
def test_certificates_evaluate_in_the_algebra(lam):
    # second route: multiply the actual operators in U(3, 3) over Z[v, v^-1]
    cert = construct_klambda(3, 3, lam)
    assert cert.verify()
    assert evaluate_in_algebra(cert) == schur_algebra(3, 3).k_lambda(lam)


def test_dependencies_are_certified():
    cert = construct_klambda(3, 4, (1, 2, 1))
    for name in cert.dependencies():
        assert name in cert.store.exprs
    assert cert.store.recheck()


def test_strata_n3():
    S = strata(3, 3)
    assert S[3] == [(0, 3, 0), (3, 0, 0)]
    assert (0, 0, 3) in S[0]
    assert -3 not in S


def test_strata_n2_bottom():
    assert strata(2, 3)[-3] == [(0, 3)]


def test_bad_weight():
    with pytest.raises(ValueError):
        construct_klambda(2, 2, (3, -1))


def test_diagonal_element_arithmetic():
    W = tuple(compositions(2, 2))
    a = DiagonalElement.indicator(W, [(2, 0), (1, 1)])
    b = DiagonalElement.indicator(W, [(1, 1), (0, 2)])
    assert a * b == DiagonalElement.indicator(W, [(1, 1)])
    assert a + b - a * b == DiagonalElement.constant(W)


def test_little_zero_image():
    a = little_zero_image(2, 3, 3)
    assert (a["dim_generated"], a["dim_little_zero"], a["equal"]) == (3, 3, True)
    b = little_zero_image(3, 3, 4)
    assert (b["dim_generated"], b["dim_little_zero"], b["equal"]) == (10, 10, True)
    c = little_zero_image(3, 4, 3)
    assert (c["dim_generated"], c["dim_little_zero"], c["gcd"]) == (3, 9, 3)


def test_ktilde_relation():
    assert ktilde_relation(4, 3)


def test_certificate_lines():
    lines = certificate_lines(2, 2)
    assert [x["lambda"] for x in lines] == [[0, 2], [1, 1], [2, 0]]
    assert all(x["verified"] for x in lines)
    mid = lines[1]
    assert mid["definitions"]["k(2,0)"] == "[kt1;2/4]"
    assert certificate_lines(2, 2, (2, 0))[0]["expression"] == "[kt1;2/4]"
