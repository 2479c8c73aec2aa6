import pytest

from ellmcm.charge import (IDENTITY, Charge, LatticeMap, apply, check_degree, compose, euler_pairing,
                           finite_order, inverse, power, shift_matrix, sigma_matrix)
from ellmcm.errors import UnsupportedDegree


def test_sigma_matrices():
    assert sigma_matrix(5) == LatticeMap(1, -1, 5, -4)
    assert sigma_matrix(2) == LatticeMap(1, -1, 2, -1)
    assert sigma_matrix(1) == LatticeMap(0, -1, 1, 1)
    assert shift_matrix(7).rows() == ((1, -1), (7, -6))


def test_apply():
    assert apply(sigma_matrix(5), (-1, 0)) == Charge(-1, -5)
    assert apply(IDENTITY, (7, 3)) == (7, 3)
    assert apply(sigma_matrix(1), (0, 1)) == (-1, 1)


def test_power_and_order():
    assert power(sigma_matrix(1), 6) == IDENTITY
    assert power(sigma_matrix(2), 2) == LatticeMap(-1, 0, 0, -1)
    assert power(sigma_matrix(5), 0) == IDENTITY
    assert finite_order(sigma_matrix(1), 100) == 6
    assert finite_order(sigma_matrix(2), 100) == 4
    assert finite_order(sigma_matrix(5), 1000) is None


def test_negative_power_is_inverse():
    m = sigma_matrix(6)
    assert compose(power(m, -3), power(m, 3)) == IDENTITY
    assert power(m, -1) == inverse(m)
    assert abs(m.det) == 1


def test_euler_pairing():
    assert euler_pairing((1, 0), (0, 1)) == 1
    assert euler_pairing((2, 3), (2, 3)) == 0
    assert euler_pairing((1, 5), (4, 15)) == -5


def test_degree_gate():
    for n in (1, 2, 4, 9):
        check_degree(n)
    with pytest.raises(UnsupportedDegree, match="n=3 unsupported"):
        check_degree(3)


def test_big_integers_do_not_overflow():
    m = power(shift_matrix(8), 200)
    assert abs(m.det) == 1
    assert max(abs(x) for x in m) > 2 ** 300
