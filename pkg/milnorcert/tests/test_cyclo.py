from fractions import Fraction

import pytest

from milnorcert.app.milnor.cyclo import (
    CycloNum,
    cyclotomic_polynomial,
    euler_phi,
    nonvanishing_guaranteed,
    parse_cyclo,
    sum_roots,
    vanishing_subsets,
    zeta,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert euler_phi(12) == 4
    assert euler_phi(7) == 6


def test_zeta_powers_close_up():
    z = zeta(12)
    assert z**12 == 1
    assert zeta(12, 3) ** 4 == 1
    assert z**-1 == zeta(12, 11)
    assert zeta(3) + zeta(3, 2) == -1


def test_field_operations():
    a = parse_cyclo("1/2 - 3z^2", 7)
    b = parse_cyclo("2 + z + 1/3*z^5", 7)
    assert a * a.inverse() == 1
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert 1 - a == -(a - 1)
    assert 2 * a == a + a


def test_rational_comparisons():
    half = CycloNum.rational(5, Fraction(1, 2))
    assert half == Fraction(1, 2)
    assert half.to_rational() == Fraction(1, 2)
    assert CycloNum.zero(5) == 0
    assert not CycloNum.zero(5)
    with pytest.raises(ValueError):
        zeta(5).to_rational()


def test_orders_do_not_mix():
    with pytest.raises(ValueError):
        zeta(3) == zeta(6)
    with pytest.raises(ValueError):
        zeta(3) + zeta(6)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        CycloNum.zero(7).inverse()


def test_conjugate_and_embed():
    assert zeta(5).conjugate() == zeta(5, 4)
    assert zeta(3).embed(6) == zeta(6, 2)
    with pytest.raises(ValueError):
        zeta(4).embed(6)


def test_to_complex():
    assert abs(zeta(4).to_complex() - 1j) < 1e-12
    assert abs(parse_cyclo("1 + z", 3).to_complex() - (0.5 + 0.8660254037844386j)) < 1e-12


def test_literal_text_round_trips():
    value = parse_cyclo("-3/4 + 2z - 1/5*z^3", 7)
    assert parse_cyclo(str(value), 7) == value
    assert str(CycloNum.rational(1, -3)) == "-3"


@pytest.mark.parametrize("text,order", [("z", 1), ("", 3), ("1/2/3", 3), ("*z", 5), ("2x", 3)])
def test_bad_literals(text, order):
    with pytest.raises(ValueError):
        parse_cyclo(text, order)


def test_sum_roots():
    assert sum_roots(12, [0, 3, 4, 8, 9]).is_zero()
    assert sum_roots(6, [0, 3]).is_zero()
    assert sum_roots(4, [0, 1]) == parse_cyclo("1 + z", 4)
    assert sum_roots(3, [0, 0, 0]) == 3
    with pytest.raises(ValueError):
        sum_roots(1, [0])


def test_nonvanishing_guaranteed():
    assert not nonvanishing_guaranteed(12, 5)
    assert not nonvanishing_guaranteed(6, 2)
    assert nonvanishing_guaranteed(7, 3)
    assert nonvanishing_guaranteed(12, 1)
    assert nonvanishing_guaranteed(4, 1)
    assert nonvanishing_guaranteed(4, 3)


def test_vanishing_subsets():
    assert vanishing_subsets(6, 2) == [(0, 3), (1, 4), (2, 5)]
    assert vanishing_subsets(7, 3) == []
    assert (0, 3, 4, 8, 9) in vanishing_subsets(12, 5)
    with pytest.raises(ValueError):
        vanishing_subsets(4, 5)


def test_search_agrees_with_guarantee():
    for m in (4, 6, 8, 9, 12):
        for size in range(1, m):
            if nonvanishing_guaranteed(m, size):
                assert vanishing_subsets(m, size) == []
