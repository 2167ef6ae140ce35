from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hesslab.qlaurent import (ONE, ZERO, InexactDivision, QPoly, QPolyMatrix, format_expanded,
                              format_qnumber, parse_qpoly, q, qfactorial, qint, qp_det, qp_gcd,
                              qp_is_palindromic, qp_solve_lower_triangular,
                              qp_solve_upper_triangular)

laurent = st.dictionaries(st.integers(-4, 6), st.integers(-5, 5), max_size=5).map(QPoly)
poly = st.dictionaries(st.integers(0, 6), st.integers(0, 4), max_size=5).map(QPoly)


def test_qint_products():
    assert qint(2) * qint(4) == parse_qpoly("1+2q+2q^2+2q^3+q^4")
    assert (ONE + q) * qint(5) == parse_qpoly("1+2q+2q^2+2q^3+2q^4+q^5")
    p = parse_qpoly("3+q^-2")
    assert p * 1 == p


def test_palindromic_examples():
    assert (qint(2) * qint(4) * qint(6)).is_palindromic(9)
    assert qp_is_palindromic(qint(2) * qint(4) * qint(6), Fraction(9, 2))
    assert ZERO.is_palindromic(3)
    assert parse_qpoly("q^3+2q^4+q^5").is_palindromic(8)
    assert not parse_qpoly("1+2q").is_palindromic(1)


def test_negative_powers_only_for_monomials():
    assert (2 * q) ** -2 == QPoly({-2: Fraction(1, 4)})
    with pytest.raises(InexactDivision):
        (ONE + q) ** -1


def test_exact_division():
    assert (qint(3) * qint(4)).exact_div(qint(3)) == qint(4)
    with pytest.raises(InexactDivision):
        qint(3).exact_div(qint(2))


def test_gcd():
    assert qp_gcd((ONE + q) * (ONE + q * q) * q ** 3, 2 * (ONE + q) * (ONE - q)) == ONE + q
    assert qp_gcd(ZERO, ZERO) == ZERO


def test_triangular_solves():
    A = QPolyMatrix([[ONE, ZERO], [ONE, q]])
    assert qp_solve_lower_triangular(A, [ONE, ONE + q]) == [ONE, ONE]
    I = QPolyMatrix.identity(3)
    b = [qint(2), q, ZERO]
    assert qp_solve_lower_triangular(I, b) == b
    assert qp_solve_upper_triangular(A.transpose(), [2 * ONE, q]) == [ONE, ONE]


def test_det():
    assert qp_det([[ONE, q], [q, ONE]]) == ONE - q * q
    assert qp_det([[qint(2)]]) == qint(2)


def test_format():
    assert format_qnumber(qint(2) * qint(4) * qint(6)) == "[2][4][6]"
    assert format_qnumber(parse_qpoly("q^3+2q^4+q^5")) == "q^3[2][2]"
    assert format_qnumber(parse_qpoly("1+3q")) == "1+3q"
    assert format_qnumber(parse_qpoly("[2][2](1+q+2q^2)")) == "[2][2](1+q+2q^2)"
    assert format_qnumber(ZERO) == "0"
    assert qfactorial(3) == qint(2) * qint(3)


def test_parse():
    assert parse_qpoly("") == ZERO
    assert parse_qpoly("2[2]") == 2 * qint(2)
    assert parse_qpoly(r"1\!+\!3q\!+\!q^2") == parse_qpoly("1+3q+q^2")
    assert parse_qpoly("q^{10}") == q ** 10
    assert parse_qpoly("q[2](2+2q+q^2)") == q * qint(2) * parse_qpoly("2+2q+q^2")


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a - a == ZERO


@given(laurent, poly)
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    quot, rem = (a * b + ONE).divmod(b)
    assert rem.is_zero() or rem.degree < b.degree - b.low_degree
    assert (a * b).exact_div(b) == a


@given(laurent)
def test_format_parse_roundtrip(a):
    assert parse_qpoly(format_expanded(a)) == a


@given(poly)
def test_qnumber_roundtrip(a):
    assert parse_qpoly(format_qnumber(a)) == a


@given(laurent)
def test_json_roundtrip(a):
    assert QPoly.from_json(a.to_json()) == a
