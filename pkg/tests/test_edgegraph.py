from itertools import combinations

import pytest
from hypothesis import given

from clawfree.catalog import cycle, named
from clawfree.edgegraph import (
    OddWalk,
    TwoColoring,
    bipartition,
    edge_graph,
    is_odd_walk,
    is_proper,
    parity_coloring,
    two_color_graph,
)
from clawfree.graph import GraphError, complement, complete, edgeless, is_isomorphic, make_graph

from conftest import graphs


def brute_edge_graph_edges(u):
    verts = u.edges()
    out = set()
    for a, b in combinations(range(len(verts)), 2):
        shared = set(verts[a]) & set(verts[b])
        if len(shared) == 1:
            y, z = (set(verts[a]) ^ set(verts[b]))
            if not u.has_edge(y, z):
                out.add((a, b))
    return out


class TestEdgeGraph:
    def test_claw_is_triangle(self):
        assert is_isomorphic(edge_graph(named("claw")).as_graph(), complete(3)) is not None

    def test_a6_is_nine_cycle(self):
        assert is_isomorphic(edge_graph(named("A6")).as_graph(), cycle(9)) is not None

    def test_triangle_has_no_adjacency(self):
        s = edge_graph(complete(3))
        assert s.order == 3 and s.edges() == []

    @pytest.mark.parametrize("n", range(4, 13))
    def test_cycles(self, n):
        assert is_isomorphic(edge_graph(cycle(n)).as_graph(), cycle(n)) is not None

    @given(graphs(max_n=8))
    def test_matches_definition(self, u):
        s = edge_graph(u)
        assert list(s.vertices) == u.edges()
        assert set(s.edges()) == brute_edge_graph_edges(u)


class TestBipartition:
    def test_square(self):
        s = edge_graph(cycle(4))
        b = bipartition(s)
        assert isinstance(b, TwoColoring)
        got = dict(zip(s.vertices, b.color))
        assert got == {(0, 1): 0, (2, 3): 0, (1, 2): 1, (0, 3): 1}

    def test_pentagon(self):
        s = edge_graph(cycle(5))
        b = bipartition(s)
        assert isinstance(b, OddWalk) and len(b) == 5
        assert is_odd_walk(s.adj, b.cycle)

    def test_empty(self):
        b = bipartition(edge_graph(edgeless(4)))
        assert b.color == () and b.components == ()

    @given(graphs(max_n=8))
    def test_certificate(self, g):
        r = two_color_graph(g)
        if isinstance(r, TwoColoring):
            assert is_proper(g.adj, r.color)
            for root, members in r.components:
                assert root == min(members) and r.color[root] == 0
        else:
            assert len(r) % 2 == 1 and is_odd_walk(g.adj, r.cycle)


class TestParityColoring:
    def test_single_edge(self):
        u = make_graph(4, [(0, 1)])
        c = parity_coloring(u, {0: 0, 1: 1, 2: 0, 3: 0})
        s = edge_graph(complement(u))
        got = dict(zip(s.vertices, c.color))
        assert got[(2, 3)] == 0 and got[(0, 2)] == 0 and got[(1, 2)] == 1
        assert is_proper(s.adj, c.color)

    def test_hexagon(self):
        u = cycle(6)
        c = parity_coloring(u, [0, 1, 0, 1, 0, 1])
        assert is_proper(edge_graph(complement(u)).adj, c.color)

    def test_edgeless(self):
        c = parity_coloring(edgeless(4), [0, 0, 0, 0])
        assert c.color == (0,) * 6

    def test_improper_rejected(self):
        with pytest.raises(GraphError):
            parity_coloring(make_graph(3, [(0, 1)]), [0, 0, 1])

    def test_wrong_length(self):
        with pytest.raises(GraphError):
            parity_coloring(edgeless(3), [0, 0])

    @given(graphs(max_n=8))
    def test_proper_for_bipartite(self, u):
        r = two_color_graph(u)
        if isinstance(r, TwoColoring):
            c = parity_coloring(u, r)
            assert is_proper(edge_graph(complement(u)).adj, c.color)
