import json

import pytest

from ellmcm.errors import DivisionByZero, NonIntegralCoefficient, NotKoszul, PoleAtZero
from ellmcm.series import (IntPolynomial, RationalFunction, hilbert_koszul_module, hilbert_minell_module,
                           hilbert_R, monomial, poincare_koszul, rank_multiplicity_minell, rf_arith,
                           series_coeffs)

ONE_MINUS_T = RationalFunction([1, -1], [1])


def rf(num, den=(1,)):
    return RationalFunction(list(num), list(den))


def test_canonical_form():
    # (2 - 2t) / (4 - 4t^2) = 1 / (2 + 2t): primitive, lowest denominator coefficient positive
    f = rf([2, -2], [4, 0, -4])
    assert f == rf([1], [2, 2])
    assert f.denominator[0] > 0
    assert rf([-1], [-1, -1]) == rf([1], [1, 1])
    assert rf([0], [5, 7]) == rf([0])


def test_arith():
    inv = rf([1], [1, -1])
    assert rf_arith(inv, inv, "mul") == rf([1], [1, -2, 1])
    assert inv - inv == rf([0])
    left = rf([4, 1], [1, 3, 1])
    right = rf([1, 3, 1], [1, -2, 1])
    assert left * right == rf([4, 1], [1, -2, 1])
    with pytest.raises(DivisionByZero):
        inv / rf([0])


def test_series_coeffs():
    assert series_coeffs(rf([1], [1, -2, 1]), 3) == [1, 2, 3, 4]
    assert series_coeffs(rf([4, -1], [1, -3, 1]), 3) == [4, 11, 29, 76]
    assert series_coeffs(rf([7]), 3) == [7, 0, 0, 0]
    with pytest.raises(PoleAtZero):
        series_coeffs(rf([1], [0, 1]), 3)
    with pytest.raises(NonIntegralCoefficient):
        series_coeffs(rf([1], [2, 1]), 3)


def test_hilbert_R():
    assert hilbert_R(5) == rf([1, 3, 1], [1, -2, 1])
    assert hilbert_R(1) == rf([1, -1, 1], [1, -2, 1])
    assert hilbert_R(2) == rf([1, 0, 1], [1, -2, 1])


def test_koszul_series():
    assert poincare_koszul(5, (1, 4)) == rf([4, -1], [1, -3, 1])
    assert poincare_koszul(5, (1, 5)) == rf([5], [1, -3, 1])
    assert hilbert_koszul_module(5, (1, 4)) == rf([4, 1], [1, -2, 1])
    assert hilbert_koszul_module(5, (1, 5)) == rf([5], [1, -2, 1])
    with pytest.raises(NotKoszul):
        poincare_koszul(5, (1, 0))


def test_koszul_n4_linear_case():
    # (1, 3) for n = 4: s_0 = -3, s_-1 = -5, s_-2 = -7, so S(t) = 3 + 5t + 7t^2 + ...
    S = poincare_koszul(4, (1, 3))
    assert S == rf([3, -1], [1, -2, 1])
    assert series_coeffs(S, 4) == [3, 5, 7, 9, 11]


def test_master_identity_instance():
    S = poincare_koszul(6, (2, 9))
    assert S.substitute_neg() * hilbert_R(6) == hilbert_koszul_module(6, (2, 9))


def test_minell_series():
    B = IntPolynomial([0, 3, 2, 1])
    expect = rf([0, 3, 2, 1], [1]) * rf([1, -1, 1], [1, -2, 1]) / rf([1, 0, 0, 1])
    assert hilbert_minell_module(1, B) == expect
    assert hilbert_minell_module(2, IntPolynomial([1, 2, 1])) == rf([1, 2, 1], [1, -2, 1])
    assert hilbert_minell_module(1, IntPolynomial([])) == rf([0])


def test_rank_multiplicity():
    inv = rank_multiplicity_minell(IntPolynomial([0, 3, 2, 1]))
    assert (inv.rank, inv.multiplicity, inv.generators) == (3, 6, 6)
    assert rank_multiplicity_minell(IntPolynomial([1, 2, 2, 1])).rank == 3
    assert rank_multiplicity_minell(IntPolynomial([])).rank == 0


def test_json_round_trip():
    f = hilbert_koszul_module(7, (2, 11))
    assert RationalFunction.from_json(json.loads(json.dumps(f.to_json()))) == f


def test_monomial_and_evaluation():
    assert rf(monomial(3)) * rf([1], [1, -1]) == rf([0, 0, 0, 1], [1, -1])
    assert hilbert_R(5)(0) == 1
