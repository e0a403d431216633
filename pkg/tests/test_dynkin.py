import pytest

from minrpp.dynkin import (
    DynkinDiagram, DynkinQuiver, all_orientations, coxeter_number, minuscule_vertices,
    positive_roots, psi, sigma_vertex,
)

from conftest import make_quiver


def D(name):
    return DynkinDiagram.parse(name)


@pytest.mark.parametrize("name, expected", [
    ("A4", {1, 2, 3, 4}), ("D5", {1, 4, 5}), ("E6", {1, 5}), ("E7", {6}), ("E8", set()),
])
def test_minuscule_vertices(name, expected):
    assert minuscule_vertices(D(name)) == expected


@pytest.mark.parametrize("name, h", [("A1", 2), ("A3", 4), ("D4", 6), ("E6", 12), ("E7", 18)])
def test_coxeter_number(name, h):
    assert coxeter_number(D(name)) == h


@pytest.mark.parametrize("family, ranks", [("A", range(1, 9)), ("D", range(4, 9)), ("E", (6, 7, 8))])
def test_coxeter_number_is_one_plus_highest_height(family, ranks):
    for n in ranks:
        d = DynkinDiagram(family, n)
        assert coxeter_number(d) == 1 + max(sum(r) for r in positive_roots(d))


@pytest.mark.parametrize("name, count", [("A2", 3), ("A5", 15), ("D4", 12), ("E7", 63)])
def test_positive_root_counts(name, count):
    assert len(positive_roots(D(name))) == count


def test_psi_tables():
    assert psi(D("A4")) == {1: 4, 2: 3, 3: 2, 4: 1}
    assert psi(D("D4")) == {v: v for v in range(1, 5)}
    assert psi(D("D5")) == {1: 1, 2: 2, 3: 3, 4: 5, 5: 4}


@pytest.mark.parametrize("name", ["A5", "D5", "D6", "E6", "E7", "E8"])
def test_psi_is_an_adjacency_preserving_involution(name):
    d = D(name)
    p = psi(d)
    assert all(p[p[v]] == v for v in d.vertices)
    assert all(d.adjacent(p[a], p[b]) for a, b in d.edges)


def test_degrees_and_branch_points():
    assert sorted(len(n) for n in D("A5").adjacency.values()) == [1, 1, 2, 2, 2]
    for name in ("D5", "E6", "E7", "E8"):
        degs = sorted(len(n) for n in D(name).adjacency.values())
        assert degs.count(3) == 1 and max(degs) == 3
    assert D("E6").adjacent(3, 6)
    assert D("E7").adjacent(3, 7)


def test_orientation_parsing():
    q = make_quiver("A3", "1>2<3")
    assert q.arrows == {(1, 2), (3, 2)}
    assert make_quiver("A3", "2>1,2>3").arrows == {(2, 1), (2, 3)}
    assert make_quiver("A3").arrows == {(1, 2), (2, 3)}
    with pytest.raises(ValueError):
        make_quiver("A3", "1>2")
    with pytest.raises(ValueError):
        make_quiver("A3", "1>x<3")


def test_sigma_vertex():
    q = make_quiver("A3", "1>2<3")
    assert sigma_vertex(q, 1) == make_quiver("A3", "1<2<3")
    assert sigma_vertex(q, 2) == make_quiver("A3", "1<2>3")
    with pytest.raises(ValueError):
        sigma_vertex(make_quiver("A3", "1<2<3"), 2)


@pytest.mark.parametrize("name", ["A4", "D4", "D5"])
def test_sigma_is_an_involution_and_numbering_admissible(name):
    for q in all_orientations(D(name)):
        for k in q.vertices:
            if q.is_source(k) or q.is_sink(k):
                assert sigma_vertex(sigma_vertex(q, k), k) == q
        assert all(q.number[s] < q.number[t] for s, t in q.arrows)


def test_numbering_breaks_ties_by_label():
    assert make_quiver("A3", "1>2<3").order == (1, 3, 2)
    assert make_quiver("A3", "1<2>3").order == (2, 1, 3)


def test_json_roundtrip():
    q = make_quiver("E6", "1<2>3<4<5,3<6")
    assert DynkinQuiver.from_json(q.to_json()) == q


def test_bad_diagrams():
    with pytest.raises(ValueError):
        DynkinDiagram.parse("D3")
    with pytest.raises(ValueError):
        DynkinDiagram.parse("E9")
