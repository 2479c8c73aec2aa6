import pytest

from ellmcm.errors import UnsupportedDegree
from ellmcm.kbundle import (NONPOSITIVE, POSITIVE, SSeqSpec, closed_form, closed_form_value, detect_jump,
                            jump_chamber, k_charge, s_value, s_window)


def test_k_charge_values():
    for n in (4, 5, 9):
        assert k_charge(n, 0) == (1, 0)
        assert k_charge(n, 1) == (1, n)
        assert k_charge(n, -1) == (n - 1, n)
        assert k_charge(n, 2) == (n - 1, n * n - 2 * n)
    assert k_charge(5, 3) == (11, 40)
    assert k_charge(5, 4) == (29, 105)
    assert k_charge(5, -2) == (11, 15)
    with pytest.raises(UnsupportedDegree):
        k_charge(3, 1)


def test_s_values():
    spec = SSeqSpec(5, 1, 4)
    assert s_value(spec, 0) == -4
    assert s_value(spec, 1) == 1
    assert s_value(spec, -1) == -11
    assert s_value(spec, -2) == -29
    assert s_window(spec, -3, 2) == [-76, -29, -11, -4, 1, -1]


def test_rank_must_be_positive():
    with pytest.raises(ValueError):
        SSeqSpec(5, 0, 1)


def test_closed_forms():
    assert closed_form(SSeqSpec(4, 1, 1), POSITIVE) == (2, 1)
    # constant case for n = 4: s_1 = s_2 = c gives A = 0
    spec = SSeqSpec(4, 1, 2)
    assert s_value(spec, 1) == 2 and s_value(spec, 2) == 2
    assert closed_form(spec, POSITIVE) == (0, 2)
    d_side = SSeqSpec(5, 1, 0)
    assert closed_form_value(d_side, closed_form(d_side, POSITIVE), 3) == 40
    spec = SSeqSpec(5, 1, 4)
    assert closed_form_value(spec, closed_form(spec, NONPOSITIVE), -3) == -76


def test_closed_form_matches_iteration():
    for n in (4, 5, 6, 8):
        spec = SSeqSpec(n, 3, 7)
        for j in range(-20, 21):
            side = POSITIVE if j >= 1 else NONPOSITIVE
            assert closed_form_value(spec, closed_form(spec, side), j) == s_value(spec, j)


def test_detect_jump_examples():
    r = detect_jump(SSeqSpec(5, 1, 0), NONPOSITIVE)
    assert r.exists and r.at_integer and r.bracket == 0
    r = detect_jump(SSeqSpec(5, 1, 4), POSITIVE)
    assert r.exists and not r.at_integer and r.bracket == (1, 2)
    r = detect_jump(SSeqSpec(5, 1, 4), NONPOSITIVE)
    assert not r.exists and r.bracket is None
    assert not detect_jump(SSeqSpec(4, 1, 2), POSITIVE).exists


def test_detect_jump_bad_side():
    with pytest.raises(ValueError):
        detect_jump(SSeqSpec(5, 1, 4), "sideways")


def test_chamber_labels():
    assert jump_chamber(SSeqSpec(5, 1, 4), POSITIVE) == "system-1"
    assert jump_chamber(SSeqSpec(5, 1, 0), NONPOSITIVE) == "origin"
    assert jump_chamber(SSeqSpec(4, 1, 1), POSITIVE) == "none"
