"""Odd pairs, the graph Lambda(G), and the Lambda-nonedge cases for trees.

An odd pair is an ordered pair (X, Y) of disjoint 2-subsets with an odd
number of edges between them.  For a fixed X = {a, b} write r(w) for the
number of neighbours of w inside X.  The cut count against Y = {c, d} is
r(c) + r(d), so (X, Y) is odd exactly when r(c) and r(d) differ in parity.
Counting odd pairs with first component X therefore reduces to
``(#odd r) * (#even r)`` over the vertices outside X; that identity is the
fast path here, and the naive four-vertex scan is kept as ``*_naive``.
"""
from __future__ import annotations

import enum
import itertools

import numpy as np

from .errors import (
    ClassificationFailure,
    InvalidVertex,
    IsLambdaEdge,
    NotATree,
    NotDisjoint,
)
from .graph import Graph, is_tree

# Ordered (X, Y) and (Y, X) are counted separately.  Set to False to count
# each unordered pair {X, Y} once.
ORDERED_ODD_PAIRS = True


def _pair(G, X):
    a, b = X
    if a == b:
        raise ValueError(f"2-subset needs distinct vertices, got {X}")
    for v in (a, b):
        if not (0 <= v < G.n):
            raise InvalidVertex(f"vertex {v} out of range for n={G.n}")
    return a, b


def count_cut_edges(G: Graph, X, Y) -> int:
    """|E(X, Y)| for disjoint 2-subsets X and Y."""
    X, Y = _pair(G, X), _pair(G, Y)
    if set(X) & set(Y):
        raise NotDisjoint(f"{X} and {Y} share a vertex")
    return sum(G.has_edge(x, y) for x in X for y in Y)


def is_odd_pair(G: Graph, X, Y) -> bool:
    return count_cut_edges(G, X, Y) % 2 == 1


def odd_pairs_with_first_naive(G: Graph, X) -> int:
    a, b = _pair(G, X)
    rest = [v for v in range(G.n) if v != a and v != b]
    return sum(is_odd_pair(G, (a, b), Y) for Y in itertools.combinations(rest, 2))


def count_odd_pairs_naive(G: Graph, ordered: bool = ORDERED_ODD_PAIRS) -> int:
    total = 0
    for X in itertools.combinations(range(G.n), 2):
        rest = [v for v in range(G.n) if v not in X]
        for Y in itertools.combinations(rest, 2):
            if (ordered or X < Y) and is_odd_pair(G, X, Y):
                total += 1
    return total


def _parity_split(A: np.ndarray, a: int, b: int):
    r = (A[a] + A[b]) & 1
    r[a] = r[b] = -1
    odd = int(np.count_nonzero(r == 1))
    even = A.shape[0] - 2 - odd
    return odd, even


def odd_pairs_with_first(G: Graph, X, _A=None) -> int:
    """Number of 2-subsets Y with (X, Y) an odd pair."""
    a, b = _pair(G, X)
    A = G.adjacency_matrix() if _A is None else _A
    odd, even = _parity_split(A, a, b)
    return odd * even


def first_component_counts(G: Graph) -> dict:
    """Map each 2-subset X (as a sorted tuple) to its odd-pair count."""
    A = G.adjacency_matrix()
    out = {}
    for a, b in itertools.combinations(range(G.n), 2):
        odd, even = _parity_split(A, a, b)
        out[(a, b)] = odd * even
    return out


def count_odd_pairs(G: Graph, ordered: bool = ORDERED_ODD_PAIRS) -> int:
    """N_op(G)."""
    total = sum(first_component_counts(G).values())
    if ordered:
        return total
    # every odd pair (X, Y) has its reverse (Y, X) also odd
    return total // 2


def lambda_graph(G: Graph) -> Graph:
    """Lambda(G): uv is an edge iff {u, v} is an odd set of G."""
    return Graph(G.n, [X for X, k in first_component_counts(G).items() if k > 0])


def lambda_degree(G: Graph, v: int) -> int:
    if not (0 <= v < G.n):
        raise InvalidVertex(f"vertex {v} out of range for n={G.n}")
    return lambda_graph(G).degree(v)


def lambda_degrees(G: Graph) -> list:
    return lambda_graph(G).degrees()


# -- classification of Lambda-nonedges in trees -------------------------------

class NonedgeCase(enum.Enum):
    Case1_TwinLeaves = 1
    Case2_Type1Hubs = 2
    Case3_Type2Hubs = 3


def _is_hub_pair(T, hubs):
    """Every vertex off the hub set is a leaf attached to one of the hubs."""
    hubs = set(hubs)
    for w in range(T.n):
        if w in hubs:
            continue
        nb = T.neighbors(w)
        if len(nb) != 1 or nb[0] not in hubs:
            return False
    return True


def matching_cases(T: Graph, u: int, v: int) -> set:
    """Every structural case the pair {u, v} of a tree fits, tested independently.

    Case 1: u and v are leaves on a common vertex.
    Case 2: u and v are adjacent and every other vertex is a leaf on u or v,
    i.e. a double star with hubs u, v (the star, where one side carries no
    leaves, is included).
    Case 3: u and v are joined by a path u-x-y-v and every other vertex is a
    leaf on u or v (P_4, with no leaves at all, is included).
    """
    found = set()
    nu, nv = T.neighbors(u), T.neighbors(v)
    if len(nu) == 1 and len(nv) == 1 and nu == nv:
        found.add(NonedgeCase.Case1_TwinLeaves)
    if T.has_edge(u, v) and _is_hub_pair(T, (u, v)):
        found.add(NonedgeCase.Case2_Type1Hubs)
    for x in nu:
        for y in nv:
            if x != v and y != u and x != y and T.has_edge(x, y) \
                    and T.degree(x) == 2 and T.degree(y) == 2 \
                    and _is_hub_pair(T, (u, x, y, v)):
                found.add(NonedgeCase.Case3_Type2Hubs)
    return found


def classify_lambda_nonedge(T: Graph, u: int, v: int, _lambda=None) -> NonedgeCase:
    """Which structural case (see :func:`matching_cases`) a Lambda-nonedge is."""
    if not is_tree(T):
        raise NotATree("classification needs a tree")
    if T.n < 4:
        raise ValueError("classification needs n >= 4")
    _pair(T, (u, v))
    L = lambda_graph(T) if _lambda is None else _lambda
    if L.has_edge(u, v):
        raise IsLambdaEdge(f"{{{u}, {v}}} is an edge of Lambda(T)")
    cases = matching_cases(T, u, v)
    if len(cases) != 1:
        raise ClassificationFailure(
            f"Lambda-nonedge {{{u}, {v}}} matches {sorted(c.name for c in cases)} "
            f"in {T!r}")
    return cases.pop()
