import json

import pytest

from ellmcm.betti import BettiTable, ModuleDescriptor, betti_entry, betti_table, growth_class, shape_report
from ellmcm.cohom import GENERIC, BundleCohomology, SpecialityOracle, cohomology_dims
from ellmcm.errors import InvalidSpeciality, UnsupportedDegree
from ellmcm.qfield import mu


def test_cohomology_dims():
    assert cohomology_dims(5) == BundleCohomology(5, 0)
    assert cohomology_dims(0, special=True) == BundleCohomology(1, 1)
    assert cohomology_dims(0) == BundleCohomology(0, 0)
    assert cohomology_dims(-3) == BundleCohomology(0, 3)
    for d in range(-10, 11):
        c = cohomology_dims(d)
        assert c.h0 - c.h1 == d


def test_speciality_oracle():
    assert not GENERIC.is_special(0)
    assert SpecialityOracle([1, -2]).is_special(-2)


def test_betti_entries():
    d = ModuleDescriptor(5, (1, 4))
    assert betti_entry(d, 0, 0) == 4
    assert betti_entry(d, 1, 1) == 11
    assert betti_entry(d, 0, 1) == 0
    assert betti_entry(d, 5, 2) == 0


def test_betti_table_diagonal():
    t = betti_table(ModuleDescriptor(5, (1, 4)), (0, 2))
    assert t.entries == {(0, 0): 4, (1, 1): 11, (2, 2): 29}
    assert all(v > 0 for v in t.entries.values())


def test_special_double_point():
    t = betti_table(ModuleDescriptor(5, (1, 0), 0, [0]), (0, 0))
    assert t.entries == {(-1, 0): 1, (0, 0): 1}


def test_empty_window():
    assert betti_table(ModuleDescriptor(5, (1, 4)), (1, 0)).entries == {}


def test_entries_lie_on_three_lines():
    for l in (-1, 0, 2):
        d = ModuleDescriptor(6, (2, 5), l)
        for (i, j) in betti_table(d, (-8, 8)).entries:
            assert j - i in (-l - 1, -l, -l + 1)


def test_invalid_speciality():
    with pytest.raises(InvalidSpeciality):
        ModuleDescriptor(5, (2, 5), 0, [1])


def test_json_round_trip():
    t = betti_table(ModuleDescriptor(5, (1, 5), 0, [1]), (-3, 4))
    back = BettiTable.from_json(json.loads(json.dumps(t.to_json())))
    assert back.entries == t.entries
    assert tuple(back.window) == tuple(t.window)


def test_grid_rows_are_j_minus_i():
    t = betti_table(ModuleDescriptor(5, (1, 5), 0, [1]), (-2, 2))
    # the window is over internal degrees j; rows -1 and 0, columns i = -1..2
    assert t.grid() == [[5, 1, 0, 0], [1, 5, 15, 40]]
    text = t.render_text()
    assert text.splitlines()[1].startswith("-1:")


def test_shape_report_koszul():
    rep = shape_report(ModuleDescriptor(5, (1, 4)))
    assert rep.tail_positive_i == "D0"
    assert not rep.jumps["nonpositive"].exists
    assert rep.half_line_violations == []


def test_shape_report_jump_at_origin():
    rep = shape_report(ModuleDescriptor(5, (1, 0)))
    j = rep.jumps["nonpositive"]
    assert j.exists and j.at_integer and j.bracket == 0


def test_shape_report_n4_linear():
    rep = shape_report(ModuleDescriptor(4, (1, 1)))
    assert not rep.jumps["positive"].exists
    assert rep.growth.kind == "linear"


def test_growth_class():
    assert growth_class(4).kind == "linear"
    g = growth_class(5)
    assert g.kind == "exponential" and g.rate == mu(5)
    with pytest.raises(UnsupportedDegree):
        growth_class(3)
