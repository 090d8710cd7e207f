import itertools

import numpy as np
import pytest

from cablecross.cabling import cable_diagram
from cablecross.diagram import CATALOG, catalog, connected_sum, mirror, parse_pd
from cablecross.jones import (
    OracleInfeasible,
    chebyshev,
    colored_jones,
    degree_check,
    kauffman_bracket,
    state_histogram,
    unknot_value,
)
from cablecross.laurent import LaurentPoly, degree_span
from cablecross.states import resolve

DELTA = LaurentPoly.from_A({2: -1, -2: -1})

# Jones polynomials from the Knot Atlas, as {power of t: coeff}, one chirality
JONES_TABLE = {
    "3_1": {1: 1, 3: 1, 4: -1},
    "4_1": {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1},
    "5_1": {2: 1, 4: 1, 5: -1, 6: 1, 7: -1},
    "5_2": {1: 1, 2: -1, 3: 2, 4: -1, 5: 1, 6: -1},
    "6_1": {-4: 1, -3: -1, -2: 1, -1: -2, 0: 2, 1: -1, 2: 1},
    "6_2": {-1: 1, 0: -1, 1: 2, 2: -2, 3: 2, 4: -2, 5: 1},
    "6_3": {-3: -1, -2: 2, -1: -2, 0: 3, 1: -2, 2: 2, 3: -1},
}


def reference_bracket(d):
    """State sum through the pure-Python circle count in ``states``."""
    total = LaurentPoly.zero()
    for state in itertools.product("AB", repeat=d.c):
        na = state.count("A")
        term = LaurentPoly.from_A({na - (d.c - na): 1}) * DELTA ** (resolve(d, state) - 1)
        total = total + term
    return total


def test_bracket_unknot_and_curls():
    assert kauffman_bracket(catalog("unknot")).poly == 1
    assert kauffman_bracket(parse_pd("X[1,1,2,2]")).poly == LaurentPoly.from_A({3: -1})
    assert kauffman_bracket(parse_pd("X[1,2,2,1]")).poly == LaurentPoly.from_A({-3: -1})


def test_bracket_trefoil():
    res = kauffman_bracket(catalog("3_1"))
    assert res.states_visited == 8
    assert res.poly == LaurentPoly.from_A({7: 1, 3: -1, -5: -1})


@pytest.mark.parametrize("name", [n for n in CATALOG if n != "unknot"])
def test_bracket_matches_reference(name):
    d = catalog(name)
    assert kauffman_bracket(d).poly == reference_bracket(d)


def test_bracket_matches_reference_on_cable():
    d, _ = cable_diagram(catalog("3_1"), -1, 2)  # t = 5, 17 crossings
    small, _ = cable_diagram(catalog("3_1"), -5, 2)
    assert kauffman_bracket(small).poly == reference_bracket(small)
    assert d.c == 17


@pytest.mark.parametrize("name", list(JONES_TABLE))
def test_catalog_against_knot_tables(name):
    v = LaurentPoly({4 * e: c for e, c in JONES_TABLE[name].items()})
    j = colored_jones(catalog(name), 2)
    assert j in (v * unknot_value(2), v.invert_variable() * unknot_value(2))


def test_chebyshev():
    assert chebyshev(0) == [1]
    assert chebyshev(1) == [0, 1]
    assert chebyshev(2) == [-1, 0, 1]
    assert chebyshev(3) == [0, -2, 0, 1]
    assert chebyshev(4) == [1, 0, -3, 0, 1]


@pytest.mark.parametrize("n", range(1, 9))
def test_unknot_colored(n):
    assert colored_jones(catalog("unknot"), n) == unknot_value(n)


def test_unknot_values_expanded():
    t = LaurentPoly.monomial(4)
    assert unknot_value(2) == -(LaurentPoly.monomial(2) + LaurentPoly.monomial(-2))
    assert unknot_value(3) == t ** -1 + 1 + t
    assert degree_span(unknot_value(5))[2] == 16


@pytest.mark.parametrize("name", ["3_1", "4_1", "6_2"])
def test_trivial_color(name):
    assert colored_jones(catalog(name), 1) == 1


def test_figure_eight_color_two():
    j = colored_jones(catalog("4_1"), 2)
    lo, hi, span4 = degree_span(j)
    assert (lo, hi) == (-2.5, 2.5)
    assert span4 == 20


@pytest.mark.parametrize(
    "name, n, expected",
    [
        ("4_1", 2, (-10, 10)),
        ("3_1", 2, (-18, -2)),
        ("3_1", 3, (-48, -4)),
        ("4_1", 3, (-28, 28)),
        ("5_2", 2, None),
        ("unknot", 5, (-8, 8)),
    ],
)
def test_degree_check(name, n, expected):
    chk = degree_check(catalog(name), n)
    assert chk.match
    assert chk.formula4d_minus == chk.oracle4d_minus
    if expected is not None:
        assert (chk.oracle4d_minus, chk.oracle4d_plus) == expected


@pytest.mark.parametrize("name", CATALOG)
def test_mirror_antisymmetry(name):
    d = catalog(name)
    assert colored_jones(mirror(d), 2) == colored_jones(d, 2).invert_variable()


def test_mirror_antisymmetry_color_three():
    d = catalog("3_1")
    j, jm = colored_jones(d, 3), colored_jones(mirror(d), 3)
    assert jm == j.invert_variable()
    assert jm.max_exponent() == -j.min_exponent()


@pytest.mark.parametrize("a, b", [("3_1", "4_1"), ("3_1", "3_1"), ("4_1", "5_2")])
def test_connect_sum_bracket_multiplicative(a, b):
    d1, d2 = catalog(a), catalog(b)
    expected = kauffman_bracket(d1).poly * kauffman_bracket(d2).poly
    assert kauffman_bracket(connected_sum(d1, d2)).poly == expected
    other = connected_sum(d1, d2, site1=d1.edge_labels[-1], site2=d2.edge_labels[2])
    assert other != connected_sum(d1, d2)
    assert kauffman_bracket(other).poly == expected


def test_thread_and_chunk_independence():
    d, _ = cable_diagram(catalog("4_1"), -1, 2)
    ref = state_histogram(d, threads=1)
    for threads, chunks in [(2, 64), (4, 7), (1, 1), (3, 1000)]:
        assert np.array_equal(state_histogram(d, threads=threads, chunks=chunks), ref)
    assert kauffman_bracket(d, threads=1).poly == kauffman_bracket(d, threads=8).poly


def test_histogram_counts_every_state():
    d = catalog("6_3")
    h = state_histogram(d)
    assert h.sum() == 2 ** 6
    # row nB sums to C(c, nB)
    assert [int(r) for r in h.sum(axis=1)] == [1, 6, 15, 20, 15, 6, 1]


def test_cap():
    d, _ = cable_diagram(catalog("4_1"), -1, 2)
    with pytest.raises(OracleInfeasible, match="oracle infeasible"):
        kauffman_bracket(d, cap=16)
    with pytest.raises(OracleInfeasible):
        colored_jones(catalog("4_1"), 4)
    with pytest.raises(ValueError):
        colored_jones(catalog("4_1"), 0)
