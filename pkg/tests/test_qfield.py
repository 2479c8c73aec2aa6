from fractions import Fraction

import pytest

from ellmcm.errors import DivisionByZero, MixedDiscriminant, UnsupportedDegree
from ellmcm.qfield import QuadNum, discriminant, mu, quad_arith, sign


def test_mu_values():
    assert mu(4) == 1
    assert mu(5) == QuadNum(Fraction(3, 2), Fraction(1, 2), 5)
    assert mu(6) == QuadNum(2, Fraction(1, 2), 12)
    assert discriminant(6) == 12
    with pytest.raises(UnsupportedDegree):
        mu(3)


def test_mu_times_conjugate_is_one():
    m = mu(5)
    assert quad_arith(m, QuadNum(Fraction(3, 2), Fraction(-1, 2), 5), "mul") == 1
    assert m * m.conjugate() == 1
    assert m.norm() == 1


def test_golden_ratio_square():
    phi = QuadNum(Fraction(1, 2), Fraction(1, 2), 5)
    assert phi ** 2 == mu(5)
    assert phi + 0 == phi


def test_signs():
    m = mu(5)
    assert sign(m - 1) == 1
    assert sign(m * m ** -1 - 1) == 0
    assert sign(-11 * m - 4) == -1
    # 3 - sqrt(5) > 0 and 2 - sqrt(5) < 0: mixed-sign parts
    assert sign(QuadNum(3, -1, 5)) == 1
    assert sign(QuadNum(2, -1, 5)) == -1


def test_perfect_square_folds():
    assert QuadNum(1, 1, 9) == 4
    assert QuadNum(1, 1, 9).b == 0
    assert QuadNum(1, 1, 0) == 1


def test_errors():
    with pytest.raises(MixedDiscriminant):
        QuadNum(1, 1, 5) + QuadNum(1, 1, 8)
    with pytest.raises(DivisionByZero):
        QuadNum(1, 1, 5) / QuadNum(0, 0, 5)
    with pytest.raises(ZeroDivisionError):
        QuadNum(1, 1, 5) / 0


def test_division_and_comparisons():
    m = mu(7)
    assert (m / m) == 1
    assert m * (1 / m) == 1
    assert m > 1 > m.conjugate() > 0
    assert abs(float(m) - (5 + 21 ** 0.5) / 2) < 1e-12
