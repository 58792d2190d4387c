import math
from fractions import Fraction

import pytest

from seidel_lab.bounds import (
    REFERENCE_AVERAGE_D,
    aekn_lower_bound,
    average_D_exact,
    average_D_monte_carlo,
    chained_nop_bound,
    check_tree,
    excluded_reason,
    haemers_bound,
    tree_lower_bound,
    verify_classification,
    verify_lemma_lambda_size,
    verify_lemma_per_edge,
    verify_tree,
)
from seidel_lab.errors import EnumerationTooLarge, ExcludedTree, OutOfDomain
from seidel_lab.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    max_leaf_concentration,
    path_graph,
    star_graph,
    type1_tree,
    type2_tree,
)
from seidel_lab.odd import count_odd_pairs_naive
from seidel_lab.trees import enumerate_free_trees, enumerate_labeled_trees

SPIDER = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
ENERGY_P4 = 2 + 2 * math.sqrt(5)

# sum of D(T) over all labelled trees on n vertices; quotient by n**(n-2)
# reproduces the tabulated means for n = 6..9 to the last printed digit
EXACT_NUMERATORS = {4: 24, 5: 200, 6: 2010, 7: 26922, 8: 423416, 9: 7883136}


def test_haemers_examples():
    assert haemers_bound(4) == 6
    assert haemers_bound(1) == 0
    assert haemers_bound(23) == 44


def test_aekn_examples():
    assert aekn_lower_bound(4, 0) == pytest.approx(math.sqrt(12 + 8 * math.sqrt(3)), rel=1e-15)
    assert aekn_lower_bound(4, 0) == pytest.approx(5.0849195, abs=1e-7)
    assert aekn_lower_bound(4, 4) == pytest.approx(math.sqrt(28), rel=1e-15)
    assert ENERGY_P4 >= aekn_lower_bound(4, 4)
    assert aekn_lower_bound(6, 10) > aekn_lower_bound(6, 0)
    with pytest.raises(OutOfDomain):
        aekn_lower_bound(3, 0)


def test_tree_bound_examples():
    assert tree_lower_bound(4, 1) == pytest.approx(2 + math.sqrt(6))
    for n in range(3, 15):
        assert tree_lower_bound(n, n - 1) == pytest.approx(2 * n - 6 + math.sqrt(2))
    with pytest.raises(OutOfDomain):
        tree_lower_bound(5, 5)
    with pytest.raises(OutOfDomain):
        tree_lower_bound(5, 0)


@pytest.mark.parametrize("n", range(4, 30))
def test_tree_bound_beats_haemers_iff(n):
    for D in range(1, n - 1):
        stronger = tree_lower_bound(n, D) > haemers_bound(n)
        assert stronger == (n - D > 8)


def test_exclusions():
    assert excluded_reason(star_graph(7)) == "star"
    assert excluded_reason(path_graph(5)) == "P5"
    assert excluded_reason(path_graph(7)) is None
    assert excluded_reason(SPIDER) is None
    with pytest.raises(ExcludedTree):
        chained_nop_bound(path_graph(6))
    with pytest.raises(ExcludedTree):
        verify_lemma_lambda_size(star_graph(8))


def test_chain_examples():
    for T in (SPIDER, path_graph(7)):
        rec = chained_nop_bound(T)
        assert max_leaf_concentration(T) == 1
        assert rec.rhs2 == 84
        assert rec.nop == count_odd_pairs_naive(T)
        assert rec.holds
    assert chained_nop_bound(SPIDER).nop == 120
    assert chained_nop_bound(path_graph(7)).nop == 112


def test_lemma_lambda_examples():
    rec = verify_lemma_lambda_size(type1_tree(3, 2))
    assert (rec.lambda_edges, rec.bound, rec.holds) == (16, 14, True)
    rec = verify_lemma_lambda_size(type2_tree(2, 1))
    assert (rec.lambda_edges, rec.bound, rec.holds) == (19, Fraction(35, 2), True)
    rec = verify_lemma_lambda_size(path_graph(7))
    assert rec.lambda_edges == 21 == rec.bound


@pytest.mark.parametrize("a,b", [(a, b) for a in range(2, 7) for b in range(1, a + 1)])
def test_type1_lambda_size_formula(a, b):
    n = a + b + 2
    rec = verify_lemma_lambda_size(type1_tree(a, b))
    assert 2 * rec.lambda_edges == n * (n - 1) - 2 - a * (a - 1) - b * (b - 1)


def test_per_edge_examples():
    rec = verify_lemma_per_edge(path_graph(4))
    assert rec.min_first_component_count == 1 == rec.bound and rec.holds
    rec = verify_lemma_per_edge(complete_graph(6))
    assert rec.min_first_component_count is None and rec.holds
    rec = verify_lemma_per_edge(cycle_graph(5))
    assert rec.min_first_component_count >= 2 and rec.holds


def test_classification_examples():
    rec = verify_classification(star_graph(6))
    assert rec.all_classified
    # 10 twin-leaf pairs plus the 5 centre-leaf pairs of the star
    assert rec.cases == {"Case1_TwinLeaves": 10, "Case2_Type1Hubs": 5}
    rec = verify_classification(type1_tree(2, 1))
    assert rec.all_classified
    assert rec.cases == {"Case1_TwinLeaves": 1, "Case2_Type1Hubs": 1}
    rec = verify_classification(path_graph(7))
    assert rec.nonedges_checked == 0 and rec.all_classified


def test_check_tree_examples():
    rep = check_tree(path_graph(2))
    assert rep.energy == pytest.approx(2) and rep.haemers == 2 and rep.passed
    assert rep.aekn is None
    rep = check_tree(path_graph(4))
    assert rep.energy == pytest.approx(ENERGY_P4, abs=1e-12)
    assert rep.energy >= rep.haemers >= rep.tree_bound
    assert rep.tree_bound == pytest.approx(4.4494897, abs=1e-7)
    rep = check_tree(star_graph(5))
    assert rep.d_stat == 4
    assert rep.tree_bound == pytest.approx(4 + math.sqrt(2))
    assert rep.tree_bound <= rep.haemers <= rep.energy + 1e-8
    assert rep.slack_tree == rep.energy - rep.tree_bound
    assert rep.passed


def test_verify_tree_row_conjunction():
    row = verify_tree(SPIDER)
    assert row["passed"] and row["chain"] and row["lemma_lambda"] and row["classify"]
    row = verify_tree(path_graph(5), checks=("theorem",))
    assert row["excluded"] == "P5" and row["chain"] is None and row["passed"]
    with pytest.raises(ValueError):
        verify_tree(SPIDER, checks=("bogus",))


def test_average_exact_small():
    assert average_D_exact(2).mean == 1.0
    assert average_D_exact(3).mean == 2.0
    with pytest.raises(EnumerationTooLarge):
        average_D_exact(10)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_exact_average_matches_scalar_route(n):
    total = sum(max_leaf_concentration(T) for T in enumerate_labeled_trees(n))
    res = average_D_exact(n)
    assert res.exact_numerator == total == EXACT_NUMERATORS[n]
    assert res.denominator == n ** (n - 2)


@pytest.mark.parametrize("n", [6, 7, 8, 9])
def test_exact_average_reference(n):
    res = average_D_exact(n)
    assert res.exact_numerator == EXACT_NUMERATORS[n]
    assert res.mean == res.exact_numerator / n ** (n - 2)
    assert abs(res.mean - REFERENCE_AVERAGE_D[n]) <= 1e-12 * REFERENCE_AVERAGE_D[n]


def test_monte_carlo_contract():
    a = average_D_monte_carlo(8, 20000, seed=11)
    b = average_D_monte_carlo(8, 20000, seed=11)
    assert a == b
    assert a.rng == "PCG64" and a.samples == 20000
    assert abs(a.mean - REFERENCE_AVERAGE_D[8]) <= 5 * a.std_error
    c = average_D_monte_carlo(8, 20000, seed=12)
    assert c.mean != a.mean
    one = average_D_monte_carlo(5, 1, seed=0)
    assert math.isnan(one.std_error)


@pytest.mark.parametrize("n", range(4, 11))
def test_aekn_and_chain_sweep(n):
    for T in enumerate_free_trees(n):
        rep = check_tree(T)
        assert rep.slack_aekn >= -1e-8
        if excluded_reason(T) is None:
            assert chained_nop_bound(T).holds
