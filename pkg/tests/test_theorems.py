from itertools import combinations

import pytest
from hypothesis import given, settings

from clawfree.catalog import cycle, named, path
from clawfree.detect import is_forb_bruteforce, is_claw
from clawfree.graph import (
    Graph,
    GraphError,
    boolean_sum,
    complement,
    complete,
    edgeless,
    is_induced_embedding,
    make_graph,
)
from clawfree.theorems import (
    Decomposition,
    Obstruction,
    all_decompositions,
    classify,
    condition3,
    decompose,
    decompose_with_flips,
    lemma_ggu_check,
    same_h3,
    validate_certificate,
    validate_decomposition,
)

from conftest import graphs


def brute_same_h3(g, g2):
    def hom(x, t):
        return len({x.has_edge(a, b) for a, b in combinations(t, 2)}) == 1

    return all(hom(g, t) == hom(g2, t) for t in combinations(range(g.n), 3))


class TestClassify:
    def test_pentagon(self):
        cert = classify(cycle(5))
        assert cert.is_member and cert.case == "direct_shape"
        assert [(s.tag, s.length) for s in cert.shapes] == [("cycle", 5)]

    def test_a6(self):
        cert = classify(named("A6"))
        assert cert.is_member and cert.case == "a6" and cert.target == "A6"

    def test_claw(self):
        cert = classify(named("claw"))
        assert not cert.is_member
        assert cert.witness == ("U", (0, 1, 2, 3))

    def test_paley_minus_vertex(self):
        cert = classify(named("P9_minus_v"))
        assert cert.case == "p9_embedding"
        assert is_induced_embedding(named("P9_minus_v"), named("P9"), cert.embedding)

    def test_complement_case(self):
        cert = classify(complete(5))
        assert cert.is_member and cert.case == "complement_shape"

    def test_cotriangle_witness(self):
        cert = classify(named("clawbar"))
        assert not cert.is_member and cert.witness[0] == "complement"
        assert is_claw(complement(named("clawbar")), cert.witness[1])

    @settings(max_examples=300)
    @given(graphs(max_n=9))
    def test_agrees_with_bruteforce(self, u):
        cert = classify(u)
        assert cert.is_member == is_forb_bruteforce(u)
        assert validate_certificate(u, cert)

    def test_forged_certificate_rejected(self):
        cert = classify(named("P9"))
        bad = type(cert)(cert.verdict, cert.case, embedding=(0,) * 9)
        assert not validate_certificate(named("P9"), bad)


class TestCondition3:
    def test_square(self):
        assert condition3(cycle(4)).case == "direct_shape"

    def test_pentagon(self):
        r = condition3(cycle(5))
        assert not r.holds
        assert [(side, s.tag, s.length) for side, s in r.offending] == [("U", "cycle", 5), ("complement", "cycle", 5)]

    def test_paley(self):
        r = condition3(named("P9"))
        assert r.case == "p9_embedding"
        assert is_induced_embedding(named("P9"), named("P9"), r.embedding)

    def test_complement_side(self):
        assert condition3(complement(cycle(6))).case == "complement_shape"


class TestDecompose:
    def test_square(self):
        d = decompose(cycle(4))
        assert set(d.G.edges()) == {(0, 1), (2, 3), (0, 2), (1, 3)}
        assert set(d.G2.edges()) == {(1, 2), (0, 3), (0, 2), (1, 3)}
        assert len(brute_h3_edges(d.G)) == 0 == len(brute_h3_edges(d.G2))

    def test_edgeless(self):
        for n in range(1, 7):
            d = decompose(edgeless(n))
            assert d.G == complete(n) == d.G2

    def test_claw(self):
        ob = decompose(named("claw"))
        assert isinstance(ob, Obstruction) and ob.side == "S(U)" and len(ob.odd_cycle) == 3

    def test_pentagon(self):
        ob = decompose(cycle(5))
        assert isinstance(ob, Obstruction) and ob.side == "S(U)" and len(ob.odd_cycle) == 5
        assert ob.to_json()["obstruction"]["in"] == "S(U)"

    def test_complement_obstruction(self):
        ob = decompose(complement(named("claw")))
        assert isinstance(ob, Obstruction) and ob.side == "S(complement U)"

    def test_all_square(self):
        ds = all_decompositions(cycle(4))
        assert len(ds) == 8
        assert len(all_decompositions(cycle(4), dedup=True)) == 4
        assert all(validate_decomposition(cycle(4), d) for d in ds)
        assert ds[0] == decompose(cycle(4))

    def test_all_two_points(self):
        assert len(all_decompositions(edgeless(2))) == 2

    def test_all_raises_on_obstruction(self):
        with pytest.raises(GraphError):
            all_decompositions(cycle(5))

    def test_flip_count_checked(self):
        with pytest.raises(GraphError):
            decompose_with_flips(cycle(4), flips=(1,))

    @settings(max_examples=300)
    @given(graphs(max_n=8))
    def test_success_is_valid(self, u):
        d = decompose(u)
        if isinstance(d, Decomposition):
            assert boolean_sum(d.G, d.G2) == u
            assert brute_same_h3(d.G, d.G2)
            assert validate_decomposition(u, d)
            assert condition3(u).holds
        else:
            assert not condition3(u).holds

    @given(graphs(max_n=5))
    def test_every_flip_is_valid(self, u):
        if isinstance(decompose(u), Decomposition):
            for d in all_decompositions(u):
                assert validate_decomposition(u, d)


def brute_h3_edges(g):
    return [t for t in combinations(range(g.n), 3) if len({g.has_edge(a, b) for a, b in combinations(t, 2)}) == 1]


class TestLemma:
    def test_same_h3_examples(self):
        g = cycle(5)
        assert same_h3(g, g)
        assert same_h3(g, complement(g))
        assert not same_h3(complete(3), path(3))

    def test_same_h3_mismatch(self):
        with pytest.raises(GraphError):
            same_h3(cycle(4), cycle(5))

    @given(graphs(max_n=7))
    def test_identical_pair(self, g):
        r = lemma_ggu_check(g, g)
        assert (r.a, r.b, r.c) == (True, True, True)

    def test_square_decomposition(self):
        d = decompose(cycle(4))
        r = lemma_ggu_check(d.G, d.G2)
        assert (r.a, r.b, r.c) == (True, True, True)

    def test_triangle_vs_edgeless(self):
        g = make_graph(4, [(0, 1), (1, 2), (0, 2)])
        r = lemma_ggu_check(g, edgeless(4))
        assert (r.a, r.b, r.c) == (False, False, False)

    @settings(max_examples=300)
    @given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
    def test_equivalence(self, g, h):
        if g.n == h.n:
            assert lemma_ggu_check(g, h).agree
            assert lemma_ggu_check(g, h).a == brute_same_h3(g, h)

    def test_equivalence_exhaustive_four(self):
        for a in range(64):
            for b in range(64):
                assert lemma_ggu_check(Graph(4, a), Graph(4, b)).agree
