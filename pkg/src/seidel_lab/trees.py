"""Tree generation: Pruefer codes, uniform sampling, canonical forms, free trees."""
from __future__ import annotations

import heapq
import itertools

import numpy as np

from .errors import EnumerationTooLarge, InvalidPrufer, NotATree
from .graph import Graph, is_tree

RNG_ALGORITHM = "PCG64"
LABELED_MAX_N = 10
FREE_MAX_N = 12


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


# -- Pruefer bijection --------------------------------------------------------

def _check_code(code, n):
    code = [int(x) for x in code]
    if n is None:
        n = len(code) + 2
    if n < 2 or len(code) != n - 2:
        raise InvalidPrufer(f"code of length {len(code)} cannot describe a tree on {n} vertices")
    for x in code:
        if not (0 <= x < n):
            raise InvalidPrufer(f"entry {x} out of range 0..{n - 1}")
    return code, n


def prufer_decode(code, n: int | None = None) -> Graph:
    """Labelled tree with the given Pruefer sequence (n defaults to len + 2)."""
    code, n = _check_code(code, n)
    deg = [1] * n
    for x in code:
        deg[x] += 1
    heap = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in code:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return Graph(n, edges)


def prufer_encode(T: Graph) -> tuple:
    if not is_tree(T) or T.n < 2:
        raise NotATree("Pruefer encoding needs a tree with n >= 2")
    deg = T.degrees()
    removed = [False] * T.n
    heap = [v for v in range(T.n) if deg[v] == 1]
    heapq.heapify(heap)
    code = []
    for _ in range(T.n - 2):
        leaf = heapq.heappop(heap)
        removed[leaf] = True
        nb = next(w for w in T.neighbors(leaf) if not removed[w])
        code.append(nb)
        deg[nb] -= 1
        if deg[nb] == 1:
            heapq.heappush(heap, nb)
    return tuple(code)


def enumerate_labeled_trees(n: int):
    """All n**(n-2) labelled trees, Pruefer codes in lexicographic order."""
    if not (2 <= n <= LABELED_MAX_N):
        raise EnumerationTooLarge(f"labelled enumeration limited to 2 <= n <= {LABELED_MAX_N}")
    for code in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(code, n)


def sample_uniform_labeled_tree(n: int, rng_seed: int) -> Graph:
    """Uniform spanning tree of K_n, reproducible from the seed."""
    if n < 2:
        raise ValueError("need n >= 2")
    code = rng_from_seed(rng_seed).integers(0, n, size=n - 2)
    return prufer_decode(code, n)


# -- vectorised decoding ------------------------------------------------------

def _as_code_batch(codes, n):
    codes = np.atleast_2d(np.asarray(codes, dtype=np.int64))
    if codes.ndim != 2 or codes.shape[1] != n - 2:
        raise InvalidPrufer(f"expected codes of shape (B, {n - 2}), got {codes.shape}")
    if codes.size and (codes.min() < 0 or codes.max() >= n):
        raise InvalidPrufer(f"code entries must lie in 0..{n - 1}")
    return codes


def prufer_decode_batch(codes: np.ndarray, n: int) -> np.ndarray:
    """Decode a (B, n-2) array of codes into a (B, n-1, 2) array of edges."""
    codes = _as_code_batch(codes, n)
    B = codes.shape[0]
    rows = np.arange(B)
    deg = np.ones((B, n), dtype=np.int16)
    for i in range(n - 2):
        deg[rows, codes[:, i]] += 1
    edges = np.empty((B, n - 1, 2), dtype=np.int64)
    for i in range(n - 2):
        leaf = np.argmax(deg == 1, axis=1)
        parent = codes[:, i]
        edges[:, i, 0] = leaf
        edges[:, i, 1] = parent
        deg[rows, leaf] = 0
        deg[rows, parent] -= 1
    last = np.nonzero(deg == 1)[1].reshape(B, 2)
    edges[:, n - 2] = last
    return edges


def leaf_concentration_batch(codes: np.ndarray, n: int) -> np.ndarray:
    """D(T) for every tree in a (B, n-2) batch of Pruefer codes."""
    codes = _as_code_batch(codes, n)
    B = codes.shape[0]
    rows = np.arange(B)
    # a vertex is a leaf iff it never occurs in the code
    is_leaf = np.ones((B, n), dtype=np.int16)
    for i in range(n - 2):
        is_leaf[rows, codes[:, i]] = 0
    edges = prufer_decode_batch(codes, n)
    cnt = np.zeros((B, n), dtype=np.int16)
    for j in range(n - 1):
        a, b = edges[:, j, 0], edges[:, j, 1]
        cnt[rows, b] += is_leaf[rows, a]
        cnt[rows, a] += is_leaf[rows, b]
    return cnt.max(axis=1)


# -- canonical forms ----------------------------------------------------------

def centroids(T: Graph) -> list:
    """The one or two vertices minimising the largest branch size."""
    n = T.n
    parent = [-1] * n
    order = [0]
    seen = [False] * n
    seen[0] = True
    for u in order:
        for w in T.neighbors(u):
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    size = [1] * n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    worst = []
    for v in range(n):
        branches = [size[w] for w in T.neighbors(v) if parent[w] == v]
        branches.append(n - size[v])
        worst.append(max(branches))
    best = min(worst)
    return [v for v in range(n) if worst[v] == best]


def _rooted_code(T, root) -> bytes:
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in T.neighbors(u):
            if w != parent[u]:
                parent[w] = u
                order.append(w)
    codes = {}
    for u in reversed(order):
        kids = sorted(codes.pop(w) for w in T.neighbors(u) if w != parent[u])
        codes[u] = b"(" + b"".join(kids) + b")"
    return codes[root]


def canonical_form(T: Graph) -> bytes:
    """Centroid-rooted AHU string; equal iff the trees are isomorphic."""
    if not is_tree(T):
        raise NotATree("canonical_form needs a tree")
    return min(_rooted_code(T, c) for c in centroids(T))


# -- free trees ---------------------------------------------------------------

def rooted_level_sequences(n: int):
    """Canonical level sequences of all rooted trees on n vertices.

    Successor rule of Beyer and Hedetniemi, starting from the path and
    ending at the star.
    """
    if n < 1:
        return
    L = list(range(n))
    while True:
        yield tuple(L)
        p = max((i for i in range(n) if L[i] > 1), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if L[i] == L[p] - 1)
        for i in range(p, n):
            L[i] = L[i - (p - q)]


def tree_from_levels(levels) -> Graph:
    last_at = {}
    edges = []
    for i, lv in enumerate(levels):
        if lv > 0:
            edges.append((last_at[lv - 1], i))
        last_at[lv] = i
    return Graph(len(levels), edges)


def enumerate_free_trees(n: int):
    """One representative per isomorphism class of trees on n vertices."""
    if not (1 <= n <= FREE_MAX_N):
        raise EnumerationTooLarge(f"free-tree enumeration limited to 1 <= n <= {FREE_MAX_N}")
    seen = set()
    for levels in rooted_level_sequences(n):
        T = tree_from_levels(levels)
        key = canonical_form(T)
        if key not in seen:
            seen.add(key)
            yield T


def free_trees_by_dedupe(n: int):
    """Free trees obtained by deduplicating all labelled trees (slow reference)."""
    if n == 1:
        yield Graph(1)
        return
    seen = set()
    for T in enumerate_labeled_trees(n):
        key = canonical_form(T)
        if key not in seen:
            seen.add(key)
            yield T
