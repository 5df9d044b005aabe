import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from boxicity.errors import CapExceeded
from boxicity.graphs import Graph, complete_graph, cycle_graph, path_graph
from boxicity.intervals import interval_graph_of, intersect_graphs, verify_box_representation
from boxicity.oracle import (
    check_subdivision_lower_bound,
    exact_boxicity,
    is_interval_graph,
    maximal_cliques,
)

from conftest import graphs

OCTAHEDRON = Graph(6, tuple((u, v) for u, v in itertools.combinations(range(6), 2) if v - u != 3))


def _is_clique(g, vs):
    return all(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2))


def cliques_bruteforce(g):
    cl = [set(s) for r in range(1, g.n + 1) for s in itertools.combinations(range(g.n), r) if _is_clique(g, s)]
    return sorted(tuple(sorted(c)) for c in cl if not any(c < d for d in cl))


def _chordal(g):
    # repeatedly strip a simplicial vertex
    alive = set(range(g.n))
    while alive:
        for v in sorted(alive):
            if _is_clique(g, g.adj[v] & alive):
                alive.remove(v)
                break
        else:
            return False
    return True


def _connected_avoiding(g, a, b, banned):
    seen, stack = {a}, [a]
    while stack:
        u = stack.pop()
        if u == b:
            return True
        for w in g.adj[u]:
            if w not in seen and w not in banned:
                seen.add(w)
                stack.append(w)
    return False


def _has_asteroidal_triple(g):
    for trip in itertools.combinations(range(g.n), 3):
        if any(g.has_edge(u, v) for u, v in itertools.combinations(trip, 2)):
            continue
        if all(
            _connected_avoiding(g, a, b, g.closed_neighborhood(c))
            for a, b, c in ((trip[0], trip[1], trip[2]), (trip[0], trip[2], trip[1]), (trip[1], trip[2], trip[0]))
        ):
            return True
    return False


def interval_by_characterization(g):
    return _chordal(g) and not _has_asteroidal_triple(g)


def test_maximal_clique_examples():
    assert maximal_cliques(complete_graph(3)) == [(0, 1, 2)]
    assert maximal_cliques(path_graph(3)) == [(0, 1), (1, 2)]
    assert maximal_cliques(cycle_graph(4)) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert maximal_cliques(Graph(2, ())) == [(0,), (1,)]
    with pytest.raises(CapExceeded):
        maximal_cliques(Graph(40, ()))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_maximal_cliques_match_bruteforce(g):
    assert maximal_cliques(g) == cliques_bruteforce(g)


def test_interval_recognition_examples():
    check = is_interval_graph(path_graph(4))
    assert check.ok and interval_graph_of(check.rep) == path_graph(4)
    assert not is_interval_graph(cycle_graph(4))
    check = is_interval_graph(complete_graph(5))
    assert check.ok and check.clique_order == [(0, 1, 2, 3, 4)]
    with pytest.raises(CapExceeded):
        is_interval_graph(Graph(13, ()))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_interval_recognition_matches_characterization(g):
    check = is_interval_graph(g)
    assert check.ok == interval_by_characterization(g)
    if check.ok:
        assert interval_graph_of(check.rep) == g


@pytest.mark.parametrize(
    "g, k",
    [
        (complete_graph(4), 1),
        (path_graph(4), 1),
        (cycle_graph(4), 2),
        (cycle_graph(6), 2),
        (OCTAHEDRON, 3),
        (Graph(4, ()), 1),
    ],
)
def test_exact_boxicity_values(g, k):
    cert = exact_boxicity(g)
    assert cert.k == k
    assert intersect_graphs(list(cert.witnesses)) == g
    assert verify_box_representation(g, cert.as_boxrep()).valid


def test_exact_boxicity_caps():
    with pytest.raises(CapExceeded):
        exact_boxicity(Graph(13, ((0, 1),)))
    with pytest.raises(CapExceeded):
        exact_boxicity(cycle_graph(8), max_non_edges=10)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_boxicity_one_iff_interval(g):
    cert = exact_boxicity(g)
    assert (cert.k <= 1) == is_interval_graph(g).ok
    assert verify_box_representation(g, cert.as_boxrep()).valid


def test_exact_boxicity_is_deterministic():
    a = exact_boxicity(cycle_graph(6))
    b = exact_boxicity(cycle_graph(6))
    assert a == b


def test_lower_bound_examples():
    three = check_subdivision_lower_bound(3)
    assert three.holds and three.boxicity == 2 and three.bound == 1
    two = check_subdivision_lower_bound(2)
    assert two.holds and two.boxicity == 1 and two.bound == Fraction(1, 2)
    with pytest.raises(CapExceeded):
        check_subdivision_lower_bound(10)
