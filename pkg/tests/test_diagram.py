import itertools

import pytest

from cablecross.diagram import (
    CATALOG,
    DiagramError,
    catalog,
    connected_sum,
    crossing_sign,
    from_pd,
    mirror,
    parse_pd,
    writhe,
)

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def test_parse_trefoil():
    d = parse_pd(TREFOIL_PD)
    assert d.c == 3
    assert d.components == 1
    assert d == catalog("3_1")


def test_parse_empty_and_unknot():
    assert parse_pd("").c == 0
    assert parse_pd("unknot").c == 0
    assert parse_pd("unknot").components == 1


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("X[1,2,3,4]", "edge label"),
        ("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] junk", "malformed token"),
        ("X[1,4,2] X[3,6,4,1]", "malformed token"),
        ("foo", "unknown knot name"),
        # edge 2 leaves both crossings along an under-strand
        ("X[1,5,2,6] X[1,6,2,5]", "orientation inconsistency at edge label 2"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(DiagramError, match=fragment):
        parse_pd(text)


def test_orientation_error_names_label():
    # edge 2 leaves both crossings along an under-strand
    with pytest.raises(DiagramError, match="edge label 2"):
        from_pd([(1, 3, 2, 4), (5, 4, 2, 3)] + [(1, 6, 5, 6)])


def test_json_input():
    d = parse_pd('{"crossings": [[1,4,2,5],[3,6,4,1],[5,2,6,3]]}')
    assert d == catalog("3_1")
    assert parse_pd(d.to_json()) == d


@pytest.mark.parametrize("name", CATALOG)
def test_round_trip(name):
    d = catalog(name)
    assert parse_pd(d.to_text() or "unknot") == d


@pytest.mark.parametrize("name", CATALOG)
def test_catalog_valid(name):
    d = catalog(name)
    labels = [e for x in d.crossings for e in x.edges]
    assert all(labels.count(e) == 2 for e in set(labels))
    assert d.components == 1
    # edges run consecutively along the knot
    if d.c:
        (comp,) = d.component_edges
        n = len(comp)
        assert all(comp[(i + 1) % n] % n == (comp[i] + 1) % n for i in range(n))


@pytest.mark.parametrize("name", [n for n in CATALOG if n != "unknot"])
def test_catalog_alternating(name):
    d = catalog(name)
    (comp,) = d.component_edges
    # entering a crossing through slot 0 is an under-passage
    heads = [d.head(e)[1] == 0 for e in comp]
    assert all(heads[i] != heads[i - 1] for i in range(len(heads)))


def test_signs():
    assert catalog("3_1").signs == (-1, -1, -1)
    assert sorted(catalog("4_1").signs) == [-1, -1, 1, 1]
    assert crossing_sign(catalog("4_1"), 0) == 1
    assert parse_pd("X[1,1,2,2]").signs == (1,)
    assert parse_pd("X[1,2,2,1]").signs == (-1,)


def test_writhe():
    assert writhe(catalog("3_1")) == -3
    assert writhe(catalog("4_1")) == 0
    assert writhe(catalog("unknot")) == 0


@pytest.mark.parametrize("name", CATALOG)
def test_mirror(name):
    d = catalog(name)
    m = mirror(d)
    assert mirror(m) == d
    assert m.signs == tuple(-s for s in d.signs)
    assert writhe(m) == -writhe(d)


def test_mirror_trefoil_writhe():
    assert writhe(mirror(catalog("3_1"))) == 3


def test_connected_sum_with_unknot():
    d = catalog("5_2")
    assert connected_sum(d, catalog("unknot")) == d
    assert connected_sum(catalog("unknot"), d) == d


@pytest.mark.parametrize("a, b", list(itertools.combinations_with_replacement([n for n in CATALOG if n != "unknot"], 2)))
def test_connected_sum_additive(a, b):
    d1, d2 = catalog(a), catalog(b)
    s = connected_sum(d1, d2)
    assert s.components == 1
    assert s.c == d1.c + d2.c
    assert writhe(s) == writhe(d1) + writhe(d2)


def test_connected_sum_needs_knots():
    hopf = from_pd([(1, 3, 2, 4), (3, 1, 4, 2)])
    assert hopf.components == 2
    with pytest.raises(DiagramError, match="components"):
        connected_sum(hopf, catalog("3_1"))


def test_over_only_component_oriented_by_labels():
    # the component on edges 3, 4 never passes under; label order 3 -> 4 orients it
    d = from_pd([(1, 3, 2, 4), (2, 4, 1, 3)])
    assert d.components == 2
    assert d.signs == (-1, -1)
    assert d.tail(4) == (0, 3)
