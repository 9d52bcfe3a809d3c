import networkx as nx
import pytest
from conftest import brute_antibalanced, brute_balanced, complete, cycle, graph_and_subset, path, signed_graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from signedcolour.graph import (
    PositiveLoopError,
    SignedGraph,
    UnderlyingMismatchError,
    VertexOutOfRangeError,
    build_graph,
    circuit_sign,
    forest_switch_set,
    is_antibalanced,
    is_balanced,
    switch,
    switching_equivalent,
)


class TestBuild:
    def test_negative_triangle(self):
        g = build_graph(3, [(0, 1, "-"), (1, 2, "-"), (0, 2, "-")])
        assert g.edges == ((0, 1, -1), (1, 2, -1), (0, 2, -1))
        assert g.max_degree == 2

    def test_positive_loop_rejected(self):
        with pytest.raises(PositiveLoopError) as exc:
            build_graph(1, [(0, 0, "+")])
        assert exc.value.vertex == 0

    def test_parallel_pair_kept(self):
        g = build_graph(2, [(0, 1, 1), (0, 1, -1)])
        assert g.m == 2
        assert g.max_degree == 2
        assert not g.is_simple

    def test_negative_loop_counts_twice(self):
        g = build_graph(2, [(0, 0, -1), (0, 1, 1)])
        assert g.degree(0) == 3
        assert g.loops == (1, 0)

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRangeError):
            build_graph(2, [(0, 2, 1)])

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            build_graph(2, [(0, 1, 0)])

    def test_immutable_value_semantics(self):
        a = build_graph(2, [(0, 1, 1)])
        b = build_graph(2, [(0, 1, "+")])
        assert a == b and hash(a) == hash(b)
        assert switch(a, {0}) != a


class TestSwitch:
    def test_cut_reversal(self):
        g = switch(complete(3), {0})
        assert g.edges == ((0, 1, -1), (0, 2, -1), (1, 2, 1))

    @pytest.mark.parametrize("s", [set(), {0, 1, 2}])
    def test_empty_cut(self, s):
        assert switch(complete(3, -1), s) == complete(3, -1)

    def test_loop_unchanged(self):
        g = build_graph(2, [(0, 0, -1), (0, 1, 1)])
        assert switch(g, {0}).edges == ((0, 0, -1), (0, 1, -1))

    def test_range_checked(self):
        with pytest.raises(VertexOutOfRangeError):
            switch(complete(3), {3})

    @given(graph_and_subset(max_n=6, simple=False, loops=True))
    def test_involution(self, gs):
        g, s = gs
        assert switch(switch(g, s), s) == g

    @given(graph_and_subset(max_n=6, simple=False), graph_and_subset(max_n=6))
    def test_composition_is_symmetric_difference(self, gs, other):
        g, s = gs
        t = {v for v in other[1] if v < g.n}
        assert switch(switch(g, s), t) == switch(g, s ^ t)

    @settings(max_examples=60)
    @given(graph_and_subset(max_n=6))
    def test_circuit_signs_preserved(self, gs):
        g, s = gs
        h = switch(g, s)
        index = {(min(u, v), max(u, v)): i for i, (u, v, _) in enumerate(g.edges)}
        nxg = nx.Graph(list(index))
        for cyc in nx.simple_cycles(nxg):
            ids = [index[(min(a, b), max(a, b))] for a, b in zip(cyc, cyc[1:] + cyc[:1])]
            assert circuit_sign(g, ids) == circuit_sign(h, ids)


class TestBalance:
    def test_all_positive(self):
        r = is_balanced(complete(5))
        assert r.balanced and r.switch_set == frozenset()

    @given(signed_graphs(max_n=7, simple=False))
    def test_forests_balanced(self, g):
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from((u, v) for u, v, _ in g.edges)
        first = {}
        for u, v, s in g.edges:
            first.setdefault((min(u, v), max(u, v)), s)
        tree = [(u, v, first[min(u, v), max(u, v)]) for u, v in nx.minimum_spanning_edges(nxg, data=False)]
        r = is_balanced(SignedGraph(g.n, tree))
        assert r.balanced
        assert all(s == 1 for _, _, s in switch(SignedGraph(g.n, tree), r.switch_set).edges)

    def test_tree_balanced(self):
        g = SignedGraph(5, [(0, 1, -1), (0, 2, 1), (2, 3, -1), (2, 4, -1)])
        r = is_balanced(g)
        assert r.balanced
        assert all(s == 1 for _, _, s in switch(g, r.switch_set).edges)

    def test_one_negative_triangle(self):
        g = cycle(3, negatives={0})
        r = is_balanced(g)
        assert not r.balanced
        assert sorted(r.circuit) == [0, 1, 2]
        assert circuit_sign(g, r.circuit) == -1

    def test_negative_loop_unbalanced(self):
        r = is_balanced(build_graph(2, [(0, 1, 1), (1, 1, -1)]))
        assert not r.balanced and r.circuit == (1,)

    def test_parallel_pair_unbalanced(self):
        r = is_balanced(build_graph(2, [(0, 1, 1), (0, 1, -1)]))
        assert not r.balanced and sorted(r.circuit) == [0, 1]

    def test_witness_is_deterministic(self):
        g = cycle(4, negatives={3})
        assert is_balanced(g) == is_balanced(g)
        assert sorted(is_balanced(g).circuit) == [0, 1, 2, 3]

    @given(signed_graphs(max_n=6, simple=False, loops=True))
    def test_matches_bruteforce_and_witness_replays(self, g):
        r = is_balanced(g)
        assert r.balanced == brute_balanced(g)
        if r.balanced:
            assert all(s == 1 for _, _, s in switch(g, r.switch_set).edges)
        else:
            assert circuit_sign(g, r.circuit) == -1
            # the witness is a closed walk visiting each vertex once
            ends = [v for i in r.circuit for v in g.edges[i][:2]]
            assert all(ends.count(v) == 2 for v in set(ends))

    @given(graph_and_subset(max_n=6, simple=False, loops=True))
    def test_switching_invariant(self, gs):
        g, s = gs
        assert is_balanced(g).balanced == is_balanced(switch(g, s)).balanced


class TestAntibalance:
    def test_all_negative_complete(self):
        assert is_antibalanced(complete(6, -1))

    def test_positive_odd_circuit(self):
        assert not is_antibalanced(cycle(5))

    def test_positive_even_circuit(self):
        assert is_antibalanced(cycle(6))

    def test_negative_loop_allowed(self):
        assert is_antibalanced(build_graph(2, [(0, 0, -1), (0, 1, 1)]))

    @given(signed_graphs(max_n=6, simple=False))
    def test_negation_and_harary(self, g):
        assert is_antibalanced(g) == is_balanced(g.negated()).balanced
        assert is_antibalanced(g) == brute_antibalanced(g)

    @given(signed_graphs(max_n=6, simple=False, loops=True))
    def test_harary_with_loops(self, g):
        assert is_antibalanced(g) == brute_antibalanced(g)


class TestSwitchingEquivalence:
    @given(graph_and_subset(max_n=6, simple=False, loops=True))
    def test_switched_copy(self, gs):
        g, s = gs
        assert switching_equivalent(g, switch(g, s))

    def test_triangles_differ(self):
        assert not switching_equivalent(cycle(3), cycle(3, negatives={0}))

    def test_c4_two_opposite_negatives(self):
        assert switching_equivalent(cycle(4), cycle(4, negatives={0, 2}))

    def test_mismatch(self):
        with pytest.raises(UnderlyingMismatchError):
            switching_equivalent(cycle(4), path(4))

    @given(signed_graphs(max_n=5, simple=False), st.data())
    def test_agrees_with_bruteforce(self, g, data):
        h = g.with_signs(data.draw(st.lists(st.sampled_from((1, -1)), min_size=g.m, max_size=g.m)))
        expected = any(
            sorted(switch(g, {v for v in range(g.n) if bits >> v & 1}).edges) == sorted(h.edges)
            for bits in range(1 << g.n)
        )
        assert switching_equivalent(g, h) == expected


class TestForestSwitch:
    def test_makes_tree_negative(self):
        g = path(5)
        s = forest_switch_set(g, range(4), target=-1)
        assert all(sg == -1 for _, _, sg in switch(g, s).edges)
        assert 0 not in s

    def test_rejects_cycle(self):
        with pytest.raises(ValueError):
            forest_switch_set(cycle(4), range(4))


def test_induced_relabels():
    g = cycle(5, negatives={1})
    h, names = g.without([0])
    assert names == [1, 2, 3, 4]
    assert h.edges == ((0, 1, -1), (1, 2, 1), (2, 3, 1))


def test_components_and_underlying():
    g = build_graph(5, [(0, 1, 1), (0, 1, -1), (3, 4, -1), (2, 2, -1)])
    assert g.components == ((0, 1), (2,), (3, 4))
    assert g.underlying().edges == ((0, 1, 1), (3, 4, 1))
