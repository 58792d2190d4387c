"""Simple undirected graphs, the standard families, and tree queries.

Vertices are the integers ``0..n-1``.  A :class:`Graph` is immutable; every
operation returns a new one.
"""
from __future__ import annotations

import itertools
import warnings
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidFamilyParams,
    InvalidVertex,
    NotATree,
    SelfLoop,
    TooSmall,
)


class DuplicateEdgeWarning(UserWarning):
    pass


def _norm(u, v):
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple graph on vertices 0..n-1.

    Holds the edge set (pairs with ``u < v``) and a neighbour tuple per
    vertex; both are fixed at construction.
    """

    __slots__ = ("n", "edges", "_nbrs")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            es.add(_norm(u, v))
        nbrs = [[] for _ in range(n)]
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(es))
        object.__setattr__(self, "_nbrs", tuple(tuple(sorted(a)) for a in nbrs))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return Graph, (self.n, sorted(self.edges))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    @property
    def size(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple:
        _check_vertex(self, v)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> list:
        return [len(a) for a in self._nbrs]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def adjacency_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            A[u, v] = A[v, u] = 1
        return A


def _check_vertex(G, v):
    if not (0 <= v < G.n):
        raise InvalidVertex(f"vertex {v} out of range for n={G.n}")


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph; repeated pairs in either orientation collapse to one edge."""
    return Graph(n, edges)


def complement(G: Graph) -> Graph:
    return Graph(G.n, [e for e in itertools.combinations(range(G.n), 2)
                       if e not in G.edges])


def relabel(G: Graph, perm) -> Graph:
    """Image of G under the vertex map ``v -> perm[v]``."""
    return Graph(G.n, [(perm[u], perm[v]) for u, v in G.edges])


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in G._nbrs[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.n


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.size == G.n - 1 and is_connected(G)


def bfs_distances(G: Graph, source: int) -> list:
    """Distances from ``source``; ``None`` marks unreachable vertices."""
    _check_vertex(G, source)
    dist = [None] * G.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for w in G._nbrs[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def distance(G: Graph, u: int, v: int):
    """Shortest-path length between u and v, or ``None`` when unreachable."""
    _check_vertex(G, v)
    return bfs_distances(G, u)[v]


def leaves(G: Graph) -> list:
    return [v for v in range(G.n) if len(G._nbrs[v]) == 1]


def leaf_counts(T: Graph) -> list:
    """Number of leaf neighbours of every vertex."""
    deg = T.degrees()
    return [sum(1 for w in T._nbrs[v] if deg[w] == 1) for v in range(T.n)]


def max_leaf_concentration(T: Graph) -> int:
    """D(T): the largest number of leaves hanging off a single vertex."""
    if not is_tree(T):
        raise NotATree("max_leaf_concentration needs a tree")
    if T.n < 2:
        raise TooSmall("max_leaf_concentration needs n >= 2")
    return max(leaf_counts(T))


# -- standard families --------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """S_n: centre 0 joined to 1..n-1."""
    return Graph(n, [(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def type1_tree(a: int, b: int) -> Graph:
    """Double star: adjacent hubs 0 and 1 carrying a and b leaves."""
    if not (a >= b >= 1):
        raise InvalidFamilyParams(f"Type1 needs a >= b >= 1, got ({a}, {b})")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph(a + b + 2, edges)


def type2_tree(a: int, b: int) -> Graph:
    """Hub path 0-1-2-3 with a extra leaves on 0 and b extra leaves on 3."""
    if not (a >= b >= 0) or (a, b) == (0, 0):
        raise InvalidFamilyParams(
            f"Type2 needs a >= b >= 0 and (a, b) != (0, 0), got ({a}, {b})")
    edges = [(0, 1), (1, 2), (2, 3)]
    edges += [(0, 4 + i) for i in range(a)]
    edges += [(3, 4 + a + i) for i in range(b)]
    return Graph(a + b + 4, edges)


FAMILIES = ("path", "star", "cycle", "complete", "type1", "type2")


@dataclass(frozen=True)
class TreeFamily:
    tag: str
    n: int | None = None
    a: int | None = None
    b: int | None = None


def make_family(f: TreeFamily) -> Graph:
    tag = f.tag.lower()
    if tag in ("type1", "type2"):
        if f.a is None or f.b is None:
            raise InvalidFamilyParams(f"{tag} needs parameters a and b")
        return type1_tree(f.a, f.b) if tag == "type1" else type2_tree(f.a, f.b)
    if tag not in FAMILIES:
        raise InvalidFamilyParams(f"unknown family {f.tag!r}")
    if f.n is None or f.n < 1:
        raise InvalidFamilyParams(f"{tag} needs n >= 1")
    if tag == "cycle" and f.n < 3:
        raise InvalidFamilyParams("cycle needs n >= 3")
    return {"path": path_graph, "star": star_graph, "cycle": cycle_graph,
            "complete": complete_graph}[tag](f.n)


def all_graphs(n: int):
    """Every labelled graph on n vertices, in bitmask order over the pair list."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


# -- edge-list text format ----------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by m lines ``"u v"`` (0-based).

    Duplicate edges trigger a :class:`DuplicateEdgeWarning` and are collapsed.
    """
    lines = [ln.split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or len(lines[0]) != 2:
        raise ValueError("edge list must start with a line 'n m'")
    n, m = int(lines[0][0]), int(lines[0][1])
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)}")
    edges = []
    seen = set()
    for toks in body:
        if len(toks) != 2:
            raise ValueError(f"malformed edge line: {' '.join(toks)!r}")
        u, v = int(toks[0]), int(toks[1])
        key = _norm(u, v)
        if key in seen:
            warnings.warn(f"duplicate edge {u} {v} collapsed", DuplicateEdgeWarning,
                          stacklevel=2)
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(G: Graph) -> str:
    out = [f"{G.n} {G.size}"]
    out += [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(out) + "\n"
