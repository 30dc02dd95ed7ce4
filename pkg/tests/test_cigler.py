from fractions import Fraction

import pytest

from qbell.cigler import (
    cigler_qstirling,
    qbell_poly,
    qstirling_oracle,
    verify_cigler_identity,
    xq_product,
)
from qbell.classical import bell, stirling2
from qbell.exact import Q, QPolynomial
from qbell.umbral import XPolynomial, apply_functional, falling_poly, rota_functional

X = XPolynomial([0, 1])


def P(*cs):
    return QPolynomial(cs)


def test_xq_product_examples():
    assert xq_product(0) == XPolynomial([1])
    assert xq_product(1) == X
    assert xq_product(2) == XPolynomial([0, Q - 1, 1])


def test_xq_product_in_shifted_variable():
    # with X = x + 1 the product is (x+1)(x+q)...(x+q^(n-1)); check at a few
    # numeric points in x and q
    for n in range(6):
        p = xq_product(n)
        for x in (Fraction(-3, 2), 0, 2):
            for q in (Fraction(1, 3), 2):
                expected = Fraction(1)
                for i in range(n):
                    expected *= x + q**i
                assert p.substitute_q(q)(x + 1) == expected


def test_qstirling_examples():
    assert cigler_qstirling(0, 0) == 1
    assert cigler_qstirling(2, 1) == Q
    assert cigler_qstirling(3, 2) == P(1, 1, 1)
    assert cigler_qstirling(3, 4) == 0
    assert cigler_qstirling(3, -1) == 0


def test_oracle_examples():
    assert qstirling_oracle(1).entries == (0, 1)
    assert qstirling_oracle(2).entries == (0, Q, 1)
    assert qstirling_oracle(4)[3] == P(3, 1, 1, 1)
    with pytest.raises(ValueError):
        qstirling_oracle(17)


def test_frozen_rows():
    # rows 4 and 5, computed independently by CAS expansion of the product
    assert qstirling_oracle(4).entries == (
        P(0), P(0, 0, 0, 0, 0, 0, 1), P(1, 1, 1, 2, 1, 1), P(3, 1, 1, 1), P(1),
    )
    assert [cigler_qstirling(5, k) for k in range(6)] == [
        P(0),
        P(0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
        P(1, 1, 1, 2, 2, 2, 2, 2, 1, 1),
        P(7, 3, 3, 4, 4, 2, 1, 1),
        P(6, 1, 1, 1, 1),
        P(1),
    ]


def test_qbell_examples():
    assert qbell_poly(0) == 1
    assert qbell_poly(3) == P(2, 1, 1, 1)
    assert qbell_poly(4) == P(5, 2, 2, 3, 1, 1, 1)
    assert qbell_poly(4)(1) == 15
    assert qbell_poly(5) == P(15, 5, 5, 7, 7, 4, 3, 3, 1, 1, 1)


def test_qbell_at_half():
    assert qbell_poly(3)(Fraction(1, 2)) == Fraction(23, 8)
    assert qbell_poly(4)(Fraction(1, 2)) == Fraction(447, 64)


@pytest.mark.parametrize("n", range(0, 13))
def test_recurrence_matches_oracle(n):
    oracle = qstirling_oracle(n)
    assert [cigler_qstirling(n, k) for k in range(n + 1)] == list(oracle.entries)


@pytest.mark.parametrize("n", range(0, 11))
def test_qbell_is_functional_of_product(n):
    assert apply_functional(rota_functional(), xq_product(n)) == qbell_poly(n)


def test_identity_report():
    assert verify_cigler_identity(0).passed
    case = verify_cigler_identity(2).cases[2]
    assert case.lhs == X * XPolynomial([Q - 1, 1])
    assert case.rhs == X * Q + falling_poly(2)
    report = verify_cigler_identity(12)
    assert report.passed
    assert [c.n for c in report.cases] == list(range(13))
    assert report.lines()[3] == "n=3\tpass"


@pytest.mark.parametrize("n", range(0, 17))
def test_specializations(n):
    for k in range(n + 1):
        assert cigler_qstirling(n, k)(1) == stirling2(n, k)
    assert qbell_poly(n)(1) == bell(n)
    if n >= 1:
        assert qbell_poly(n)(0) == bell(n - 1)


@pytest.mark.parametrize("n", range(0, 15))
def test_structure(n):
    for k in range(n + 1):
        for c in cigler_qstirling(n, k).coeffs:
            assert c.denominator == 1 and c >= 0
    if n >= 1:
        assert cigler_qstirling(n, 0) == 0
        assert cigler_qstirling(n, n) == 1
        assert cigler_qstirling(n, 1).degree == n * (n - 1) // 2
        assert qbell_poly(n).degree == n * (n - 1) // 2
