"""
Odd pairs and the Lambda graph
==============================

Counts odd pairs on a few trees and looks at which vertex pairs fail to be
adjacent in Lambda(T), together with the structural case each one falls in.
"""
import itertools

from seidel_lab import classify_lambda_nonedge, count_odd_pairs, lambda_graph
from seidel_lab.graph import Graph, path_graph, star_graph, type1_tree
from seidel_lab.odd import count_odd_pairs_naive

spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
for name, T in [("P7", path_graph(7)), ("spider", spider), ("S6", star_graph(6)),
                ("double star (3,2)", type1_tree(3, 2))]:
    fast, slow = count_odd_pairs(T), count_odd_pairs_naive(T)
    L = lambda_graph(T)
    print(f"{name:18s} N_op={fast:4d} (naive {slow:4d})  |E(Lambda)|={L.size}")

# Every pair missing from Lambda belongs to exactly one structural case.
T = type1_tree(3, 2)
L = lambda_graph(T)
for u, v in itertools.combinations(range(T.n), 2):
    if not L.has_edge(u, v):
        print(f"  nonedge {u}-{v}: {classify_lambda_nonedge(T, u, v).name}")
