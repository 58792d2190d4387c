"""Seidel energy of trees: Seidel matrices, odd pairs, Lambda(G), and bound checks."""
from .bounds import (
    aekn_lower_bound,
    average_D_exact,
    average_D_monte_carlo,
    chained_nop_bound,
    check_tree,
    haemers_bound,
    tree_lower_bound,
    verify_classification,
    verify_lemma_lambda_size,
    verify_lemma_per_edge,
)
from .graph import (
    Graph,
    TreeFamily,
    complement,
    distance,
    from_edge_list,
    is_tree,
    make_family,
    max_leaf_concentration,
)
from .odd import (
    NonedgeCase,
    classify_lambda_nonedge,
    count_cut_edges,
    count_odd_pairs,
    is_odd_pair,
    lambda_degree,
    lambda_graph,
    odd_pairs_with_first,
)
from .spectral import (
    Spectrum,
    charpoly_oracle,
    seidel_energy,
    seidel_matrix,
    seidel_switch,
    symmetric_eigenvalues,
)
from .trees import (
    canonical_form,
    enumerate_free_trees,
    enumerate_labeled_trees,
    prufer_decode,
    prufer_encode,
    sample_uniform_labeled_tree,
)

__version__ = "0.1.0"
