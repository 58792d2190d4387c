import itertools

import pytest
from hypothesis import given, settings

from seidel_lab.errors import ClassificationFailure, IsLambdaEdge, NotDisjoint
from seidel_lab.graph import (
    Graph,
    all_graphs,
    complement,
    complete_graph,
    cycle_graph,
    path_graph,
    relabel,
    star_graph,
    type1_tree,
    type2_tree,
)
from seidel_lab.odd import (
    NonedgeCase,
    classify_lambda_nonedge,
    count_cut_edges,
    count_odd_pairs,
    count_odd_pairs_naive,
    first_component_counts,
    is_odd_pair,
    lambda_degree,
    lambda_graph,
    matching_cases,
    odd_pairs_with_first,
    odd_pairs_with_first_naive,
)
from seidel_lab.spectral import seidel_switch
from seidel_lab.trees import enumerate_free_trees

from .strategies import graphs

P4 = path_graph(4)


def test_cut_edge_examples():
    assert count_cut_edges(P4, (0, 1), (2, 3)) == 1
    assert count_cut_edges(P4, (0, 2), (1, 3)) == 3
    assert count_cut_edges(complete_graph(4), (0, 3), (1, 2)) == 4
    with pytest.raises(NotDisjoint):
        count_cut_edges(P4, (0, 1), (1, 2))


def test_odd_pair_examples():
    assert is_odd_pair(P4, (0, 1), (2, 3))
    assert not is_odd_pair(P4, (0, 3), (1, 2))
    K4 = complete_graph(4)
    for X in itertools.combinations(range(4), 2):
        Y = tuple(v for v in range(4) if v not in X)
        assert not is_odd_pair(K4, X, Y)


def test_count_examples():
    for n in range(1, 9):
        assert count_odd_pairs(complete_graph(n)) == 0
    # exhaustive scan on 4 vertices: ({0,1},{2,3}), ({0,2},{1,3}) and reversals
    assert count_odd_pairs(P4) == 4
    assert count_odd_pairs(P4, ordered=False) == 2
    assert count_odd_pairs(path_graph(3)) == 0
    assert odd_pairs_with_first(P4, (0, 1)) == 1
    assert odd_pairs_with_first(complete_graph(6), (2, 4)) == 0


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_fast_route_matches_naive_scan(G):
    assert count_odd_pairs(G) == count_odd_pairs_naive(G)
    assert count_odd_pairs(G, ordered=False) == count_odd_pairs_naive(G, ordered=False)
    for X in itertools.combinations(range(G.n), 2):
        assert odd_pairs_with_first(G, X) == odd_pairs_with_first_naive(G, X)


@pytest.mark.parametrize("n", range(4, 6))
def test_fast_route_matches_naive_all_graphs(n):
    for G in all_graphs(n):
        assert count_odd_pairs(G) == count_odd_pairs_naive(G)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_partition_identity(G):
    assert sum(first_component_counts(G).values()) == count_odd_pairs(G)
    assert sum(odd_pairs_with_first(G, X)
               for X in itertools.combinations(range(G.n), 2)) == count_odd_pairs(G)


def test_lambda_examples():
    assert lambda_graph(P4).sorted_edges() == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert any(relabel(lambda_graph(P4), p) == cycle_graph(4)
               for p in itertools.permutations(range(4)))
    assert lambda_graph(cycle_graph(5)) == complete_graph(5)
    assert lambda_graph(cycle_graph(4)).size == 0
    for n in range(1, 9):
        assert lambda_graph(complete_graph(n)).size == 0


def test_lambda_degree_examples():
    assert all(lambda_degree(cycle_graph(5), v) == 4 for v in range(5))
    assert all(lambda_degree(complete_graph(6), v) == 0 for v in range(6))
    # spider with legs of length 2 is neither a star nor Type 1 / Type 2
    spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    for w in (0, 1, 3, 5):
        assert lambda_degree(spider, w) == 6


@pytest.mark.parametrize("n", range(1, 7))
def test_switching_and_complement_invariance(n):
    graphs_n = list(all_graphs(n)) if n <= 5 else list(all_graphs(n))[::97]
    for G in graphs_n:
        nop, L = count_odd_pairs(G), lambda_graph(G)
        assert lambda_graph(complement(G)) == L
        for k in range(n + 1):
            for v1 in itertools.combinations(range(n), k):
                H = seidel_switch(G, v1)
                assert count_odd_pairs(H) == nop
                assert lambda_graph(H) == L


@pytest.mark.parametrize("n", range(4, 8))
def test_per_edge_lower_bound(n):
    graphs_n = all_graphs(n) if n <= 6 else enumerate_free_trees(n)
    for G in graphs_n:
        for k in first_component_counts(G).values():
            assert k == 0 or k >= n - 3


def test_classify_examples():
    S5 = star_graph(5)
    assert classify_lambda_nonedge(S5, 1, 2) is NonedgeCase.Case1_TwinLeaves
    T = type1_tree(2, 2)
    assert classify_lambda_nonedge(T, 0, 1) is NonedgeCase.Case2_Type1Hubs
    assert classify_lambda_nonedge(path_graph(6), 1, 4) is NonedgeCase.Case3_Type2Hubs
    assert classify_lambda_nonedge(type2_tree(3, 1), 0, 3) is NonedgeCase.Case3_Type2Hubs
    with pytest.raises(IsLambdaEdge):
        classify_lambda_nonedge(P4, 0, 1)


def test_classify_degenerate_members():
    # star centre with a leaf: double star whose second hub carries no leaves
    assert classify_lambda_nonedge(star_graph(6), 0, 3) is NonedgeCase.Case2_Type1Hubs
    # P_4 endpoints: hub path with no extra leaves
    assert classify_lambda_nonedge(P4, 0, 3) is NonedgeCase.Case3_Type2Hubs


def test_classification_failure_is_reported(monkeypatch):
    import seidel_lab.odd as odd
    monkeypatch.setattr(odd, "matching_cases", lambda T, u, v: set())
    with pytest.raises(ClassificationFailure):
        odd.classify_lambda_nonedge(star_graph(5), 1, 2)


@pytest.mark.parametrize("n", range(4, 11))
def test_classification_total_and_unique(n):
    for T in enumerate_free_trees(n):
        L = lambda_graph(T)
        for u, v in itertools.combinations(range(n), 2):
            cases = matching_cases(T, u, v)
            if L.has_edge(u, v):
                assert not cases
            else:
                assert len(cases) == 1
