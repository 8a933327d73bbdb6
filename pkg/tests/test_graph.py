from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from clawfree.catalog import cycle, named, path
from clawfree.graph import (
    Graph,
    GraphError,
    boolean_sum,
    canonical_code,
    canonical_code_bruteforce,
    cartesian_product,
    complement,
    complete,
    edgeless,
    find_induced_embedding,
    induced,
    is_isomorphic,
    is_induced_embedding,
    make_graph,
    relabel,
)

from conftest import graphs


def is_bijective_iso(g, h, phi):
    return sorted(phi) == list(range(g.n)) and all(
        g.has_edge(i, j) == h.has_edge(phi[i], phi[j]) for i, j in combinations(range(g.n), 2)
    )


class TestMakeGraph:
    def test_triangle(self):
        g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g == complete(3)
        assert g.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_single_vertex(self):
        g = make_graph(1, [])
        assert g.n == 1 and g.num_edges == 0

    def test_square(self):
        g = make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert g == cycle(4)
        assert g.degrees() == [2, 2, 2, 2]

    def test_duplicates_collapse(self):
        assert make_graph(3, [(0, 1), (1, 0), (0, 1)]).num_edges == 1

    @pytest.mark.parametrize(
        "n, edges",
        [(3, [(0, 3)]), (3, [(1, 1)]), (63, []), (3, [(-1, 2)])],
    )
    def test_errors(self, n, edges):
        with pytest.raises(GraphError):
            make_graph(n, edges)

    def test_indicator(self):
        g = cycle(4)
        assert g(0, 1) == 1 and g(0, 2) == 0
        assert g.bits() == "101101"

    def test_immutable(self):
        g = cycle(4)
        with pytest.raises(AttributeError):
            g.mask = 0


class TestComplement:
    def test_triangle(self):
        assert complement(complete(3)) == edgeless(3)

    def test_paley_self_complementary(self):
        p9 = named("P9")
        phi = is_isomorphic(p9, complement(p9))
        assert phi is not None and is_bijective_iso(p9, complement(p9), phi)

    def test_involution_square(self):
        assert complement(complement(cycle(4))) == cycle(4)

    @given(graphs())
    def test_edge_counts(self, g):
        c = complement(g)
        assert c.n == g.n
        assert g.num_edges + c.num_edges == g.n * (g.n - 1) // 2
        assert complement(c) == g


class TestInduced:
    def test_edge(self):
        sub, index = induced(complete(3), [0, 1])
        assert sub == make_graph(2, [(0, 1)])
        assert index == {0: 0, 1: 1}

    def test_square_to_path(self):
        sub, _ = induced(cycle(4), [0, 1, 2])
        assert sub == path(3)

    def test_paley_vertex_deleted(self):
        p9 = named("P9")
        ref = named("P9_minus_v")
        for v in range(9):
            sub, _ = induced(p9, [w for w in range(9) if w != v])
            assert is_isomorphic(sub, ref) is not None

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            induced(cycle(4), [0, 4])

    def test_relabels_in_order(self):
        sub, index = induced(cycle(5), [4, 0, 2])
        assert index == {0: 0, 2: 1, 4: 2}
        assert sub.edges() == [(0, 2)]


class TestBooleanSum:
    @given(graphs())
    def test_self_sum_is_empty(self, g):
        assert boolean_sum(g, g) == edgeless(g.n)
        assert boolean_sum(g, edgeless(g.n)) == g

    def test_triangle_minus_path(self):
        assert boolean_sum(complete(3), make_graph(3, [(0, 1), (1, 2)])) == make_graph(3, [(0, 2)])

    @given(st.data())
    def test_involution(self, data):
        g = data.draw(graphs(min_n=1))
        h = Graph(g.n, data.draw(st.integers(0, (1 << (g.n * (g.n - 1) // 2)) - 1)))
        assert boolean_sum(boolean_sum(g, h), h) == g

    def test_mismatched(self):
        with pytest.raises(GraphError):
            boolean_sum(cycle(4), cycle(5))


class TestCartesianProduct:
    def test_k3_squared_is_paley(self):
        assert is_isomorphic(cartesian_product(complete(3), complete(3)), named("P9")) is not None
        assert named("P9").degrees() == [4] * 9

    @given(graphs(max_n=6))
    def test_k1_identity(self, g):
        assert cartesian_product(complete(1), g) == g

    def test_k2_squared_is_square(self):
        assert is_isomorphic(cartesian_product(complete(2), complete(2)), cycle(4)) is not None

    def test_cap(self):
        with pytest.raises(GraphError):
            cartesian_product(complete(8), complete(8))


class TestIsomorphism:
    def test_relabeled_square(self):
        perm = [2, 3, 1, 0]  # 0->2, 2->1, 1->3, 3->0
        h = relabel(cycle(4), perm)
        phi = is_isomorphic(cycle(4), h)
        assert phi is not None and is_bijective_iso(cycle(4), h, phi)

    def test_triangle_vs_path(self):
        assert is_isomorphic(complete(3), path(3)) is None

    def test_different_orders(self):
        assert is_isomorphic(cycle(4), cycle(5)) is None

    @given(graphs(max_n=9), st.randoms(use_true_random=False))
    def test_random_relabel(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        h = relabel(g, perm)
        phi = is_isomorphic(g, h)
        assert phi is not None and is_bijective_iso(g, h, phi)

    @given(graphs(max_n=9))
    def test_self(self, g):
        assert is_isomorphic(g, g) is not None

    @given(graphs(max_n=6), graphs(max_n=6))
    def test_agrees_with_canonical_code(self, g, h):
        if g.n == h.n:
            assert (is_isomorphic(g, h) is not None) == (canonical_code(g) == canonical_code(h))

    def test_degree_sequence_equal_but_not_isomorphic(self):
        # C6 and two disjoint triangles are both 2-regular on 6 vertices
        two_triangles = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert is_isomorphic(cycle(6), two_triangles) is None


class TestInducedEmbedding:
    def test_square_in_paley(self):
        phi = find_induced_embedding(cycle(4), named("P9"))
        assert phi is not None and is_induced_embedding(cycle(4), named("P9"), phi)

    def test_claw_not_in_paley(self):
        assert find_induced_embedding(named("claw"), named("P9")) is None

    def test_too_big(self):
        assert find_induced_embedding(cycle(5), cycle(4)) is None


class TestCanonicalCode:
    def test_relabel_invariant(self):
        assert canonical_code(cycle(4)) == canonical_code(relabel(cycle(4), [3, 1, 0, 2]))

    def test_triangle_vs_path(self):
        assert canonical_code(complete(3)) != canonical_code(path(3))

    def test_eleven_graphs_on_four_vertices(self):
        # oracle: minimum over all 24 permutations of every labeled graph
        brute = {canonical_code_bruteforce(Graph(4, m)) for m in range(64)}
        assert len(brute) == 11
        assert {canonical_code(Graph(4, m)) for m in range(64)} == brute

    def test_matches_bruteforce_on_five_vertices(self):
        for m in range(0, 1024, 7):
            g = Graph(5, m)
            assert canonical_code(g) == canonical_code_bruteforce(g)

    @given(graphs(max_n=10), st.randoms(use_true_random=False))
    def test_invariant_up_to_ten(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_code(g) == canonical_code(relabel(g, perm))

    def test_symmetric_graphs_are_fast(self):
        assert canonical_code(edgeless(10)) == "0" * 45
        assert canonical_code(complete(10)) == "1" * 45
        assert len(canonical_code(named("P9"))) == 36

    def test_cap(self):
        with pytest.raises(GraphError):
            canonical_code(edgeless(11))


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degrees()) == 2 * g.num_edges
