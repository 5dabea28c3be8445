import random

import pytest
from hypothesis import given, strategies as st

from obk import _linalg as la
from obk.errors import DuplicateId, ParseError, UnknownDisk
from obk.plumbgraph import (
    BUILTINS,
    PlumbingGraph,
    e8_graph,
    elementary_divisors,
    format_graph,
    intersection_matrix,
    lattice_report,
    milnor_graph,
    parse_graph,
)

MILNOR = (
    (2, 1, 0, 0, 0, 0, 0, 0),
    (1, 2, 1, 0, -1, 0, 0, 0),
    (0, 1, 2, 1, 0, 0, 0, 0),
    (0, 0, 1, 2, 1, 0, 0, 0),
    (0, -1, 0, 1, 2, 1, 0, 0),
    (0, 0, 0, 0, 1, 2, 1, 0),
    (0, 0, 0, 0, 0, 1, 2, 1),
    (0, 0, 0, 0, 0, 0, 1, 2),
)


def test_milnor_matrix():
    m = intersection_matrix(milnor_graph())
    assert m == MILNOR
    assert la.det(m) == 1
    assert lattice_report(milnor_graph()) == (1, (1,) * 8)


def test_e8():
    for euler in (2, -2):
        g = e8_graph(euler)
        m = intersection_matrix(g)
        assert la.det(m) == 1
        assert len(g.edges) == 7 and g.is_connected()
    with pytest.raises(ValueError):
        e8_graph(3)
    # v5 is the trivalent vertex
    deg = {v.id: 0 for v in e8_graph().vertices}
    for e in e8_graph().edges:
        deg[e.v] += 1
        deg[e.w] += 1
    assert [k for k, d in deg.items() if d == 3] == ["v5"]


def test_builtins():
    assert set(BUILTINS) >= {"milnor", "e8"}
    assert all(lattice_report(f()).determinant == 1 for f in BUILTINS.values())


def test_torsion_of_a_non_unimodular_lattice():
    g = PlumbingGraph([("a", 2), ("b", 3)])
    assert lattice_report(g) == (6, (1, 6))
    assert sorted(elementary_divisors(((0, 0), (0, 4)))) == [0, 4]
    assert lattice_report(PlumbingGraph([("a", 0)])) == (0, (0,))


def test_validation():
    with pytest.raises(DuplicateId):
        PlumbingGraph([("a", 2), ("a", 2)])
    with pytest.raises(UnknownDisk):
        PlumbingGraph([("a", 2)], [("a", "b", 1)])
    with pytest.raises(ValueError):
        PlumbingGraph([("a", 2)], [("a", "a", 1)])
    with pytest.raises(ValueError):
        PlumbingGraph([("a", 2), ("b", 2)], [("a", "b", 2)])
    assert not PlumbingGraph([("a", 2), ("b", 2)]).is_connected()


def test_text_round_trip(data_dir):
    g = parse_graph((data_dir / "milnor.graph").read_text())
    assert intersection_matrix(g) == MILNOR
    assert parse_graph(format_graph(g)) == g
    with pytest.raises(ParseError):
        parse_graph("vertex a two")
    with pytest.raises(ParseError):
        parse_graph("edge a b 0")


def random_graph(rng):
    n = rng.randint(1, 7)
    vs = [(f"x{i}", rng.randint(-4, 4)) for i in range(n)]
    es = [(f"x{i}", f"x{j}", rng.choice((1, -1))) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    return PlumbingGraph(vs, es)


@given(st.integers(0, 10**9))
def test_matrix_is_symmetric_and_invariant_under_relabelling(seed):
    rng = random.Random(seed)
    g = random_graph(rng)
    m = intersection_matrix(g)
    assert m == la.transpose(m)
    order = [v.id for v in g.vertices]
    rng.shuffle(order)
    h = g.relabel(order)
    assert la.det(intersection_matrix(h)) == la.det(m)
    assert lattice_report(h) == lattice_report(g)


@given(st.integers(0, 10**9))
def test_elementary_divisors_multiply_to_the_determinant(seed):
    g = random_graph(random.Random(seed))
    rep = lattice_report(g)
    prod = 1
    for d in rep.torsion:
        prod *= d
    assert prod == abs(rep.determinant)
