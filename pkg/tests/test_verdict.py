import json

import pytest

from cablecross.degrees import CaseTag
from cablecross.diagram import CATALOG, catalog, from_pd, mirror, parse_pd
from cablecross.states import stats
from cablecross.verdict import (
    ReportError,
    cable_report,
    connect_sum_report,
    mirror_composite_report,
)

KNOTS = [n for n in CATALOG if n != "unknot"]
KEYS = ["knot", "p", "q", "case", "lower_bound", "exact", "witness_crossings", "adequacy",
        "admissible", "citations"]


@pytest.mark.parametrize("p", [1, -1])
def test_figure_eight_admissible(p):
    r = cable_report(catalog("4_1"), p, 2, name="4_1")
    assert r.exact == 17
    assert r.constructed_diagram_crossings == 17
    assert r.lower_bound == 17
    assert r.case is CaseTag.CASE1
    assert r.adequacy_verdict == "non_adequate"
    assert r.admissible
    assert {"Thm1.1", "Thm3.1", "Cor1.2"} <= set(r.citations)


def test_figure_eight_non_admissible():
    r = cable_report(catalog("4_1"), 3, 2)
    assert r.exact is None
    assert r.lower_bound == 17
    assert not r.admissible
    assert r.constructed_diagram_crossings == 19
    assert "Cor1.2" not in r.citations


@pytest.mark.parametrize("p", [-7, -5])
def test_trefoil_admissible(p):
    assert cable_report(catalog("3_1"), p, 2).exact == 13


def test_large_slope_lower_bound():
    r = cable_report(mirror(catalog("3_1")), 13, 2)
    assert r.case is CaseTag.CASE2
    assert r.exact is None
    assert r.lower_bound == 13
    assert r.adequacy_verdict == "unknown"
    assert "Thm2.2" in r.citations

    r = cable_report(mirror(catalog("3_1")), 41, 2)
    # the Jones diameter 82 + 0 beats 4c + 1
    assert r.lower_bound == 41


def test_q_one():
    r = cable_report(catalog("5_2"), 4, 1)
    assert (r.exact, r.lower_bound, r.case) == (5, 5, CaseTag.CASE1)


@pytest.mark.parametrize("name", KNOTS)
@pytest.mark.parametrize("sign", [1, -1])
def test_exact_is_4c_plus_1(name, sign):
    d = catalog(name)
    st = stats(d)
    r = cable_report(d, 2 * st.wr + sign, 2)
    assert r.exact == 4 * st.c + 1 == r.lower_bound


@pytest.mark.parametrize("name", KNOTS)
def test_reports_never_undercut_bound(name):
    d = catalog(name)
    for p in range(-31, 32, 2):
        try:
            r = cable_report(d, p, 2)
        except ValueError:
            continue  # boundary slope
        assert r.lower_bound <= r.constructed_diagram_crossings
        if r.exact is not None:
            assert r.exact == r.lower_bound == r.constructed_diagram_crossings


@pytest.mark.parametrize("name, expected", [("3_1", 25), ("4_1", 33)])
@pytest.mark.parametrize("sign", [1, -1])
def test_mirror_composite(name, expected, sign):
    r = mirror_composite_report(catalog(name), sign)
    assert r.exact == expected
    assert r.citations[-1] == "Cor1.3"


def test_connect_sum_examples():
    r = connect_sum_report(catalog("4_1"), 1, catalog("3_1"))
    assert r.exact == 20 == r.constructed_diagram_crossings
    assert r.citations == ["Cor1.2", "Thm1.4"]
    assert connect_sum_report(catalog("3_1"), -7, catalog("4_1")).exact == 17
    assert connect_sum_report(catalog("unknot"), 1, catalog("4_1")).exact == 4


def test_connect_sum_rejects_non_admissible():
    with pytest.raises(ReportError, match="not an admissible cable"):
        connect_sum_report(catalog("4_1"), 3, catalog("3_1"))


def test_errors():
    with pytest.raises(ReportError, match="trivial companion"):
        cable_report(catalog("unknot"), 1, 2)
    with pytest.raises(ReportError, match="coprime"):
        cable_report(catalog("4_1"), 2, 2)
    with pytest.raises(ReportError, match="not certified adequate"):
        cable_report(parse_pd("X[1,1,2,2]"), 1, 2)
    with pytest.raises(ReportError, match="not a knot"):
        cable_report(from_pd([(1, 3, 2, 4), (3, 1, 4, 2)]), 1, 2)
    with pytest.raises(ReportError, match="second summand"):
        connect_sum_report(catalog("4_1"), 1, parse_pd("X[1,1,2,2]"))
    with pytest.raises(ReportError, match="sign"):
        mirror_composite_report(catalog("3_1"), 0)


def test_json_schema():
    data = json.loads(cable_report(catalog("4_1"), 1, 2, name="4_1").to_json())
    assert list(data) == KEYS
    assert data["case"] == "CASE1"
    assert data["exact"] == 17
    assert json.loads(cable_report(catalog("4_1"), 3, 2).to_json())["exact"] is None
