"""Instance sources: Prüfer codes, random and exhaustive trees and unicyclic
graphs, and exhaustive labeled graphs for small vertex counts.

Random unicyclic graphs are *not* uniform over labeled unicyclic graphs:
the cycle is fixed first and a uniform random forest is hung off it, then
the labels are shuffled. That is enough for agreement testing.
"""

from __future__ import annotations

import heapq
import random
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .graph import Graph, GraphError, is_connected
from .structure import TREE, detect_shape

MAX_GRAPH_N = 7
MAX_TREE_N = 9


def _decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    if n < 2:
        raise GraphError("Prüfer codes describe trees on at least 2 vertices")
    if len(seq) != n - 2:
        raise GraphError(f"Prüfer sequence for n={n} must have length {n - 2}, got {len(seq)}")
    if any(not 0 <= x < n for x in seq):
        raise GraphError(f"Prüfer entries must lie in [0, {n})")
    return Graph(n, _decode(seq, n))


def prufer_encode(tree: Graph) -> list[int]:
    if tree.n < 2 or detect_shape(tree).kind != TREE:
        raise GraphError("prufer_encode needs a tree on at least 2 vertices")
    degree = [len(a) for a in tree.adj]
    removed = [False] * tree.n
    leaves = [v for v in range(tree.n) if degree[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(tree.n - 2):
        leaf = heapq.heappop(leaves)
        removed[leaf] = True
        nbr = next(w for w in tree.adj[leaf] if not removed[w])
        seq.append(nbr)
        degree[nbr] -= 1
        if degree[nbr] == 1:
            heapq.heappush(leaves, nbr)
    return seq


def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    return _decode([rng.randrange(n) for _ in range(n - 2)], n)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree (random Prüfer code), deterministic per seed."""
    if n < 2:
        raise GraphError(f"random_tree needs n >= 2, got {n}")
    return Graph(n, _random_tree_edges(n, random.Random(seed)))


def random_unicyclic(n: int, cycle_len: int, seed: int) -> Graph:
    if not 3 <= cycle_len <= n:
        raise GraphError(f"need 3 <= cycle_len <= n, got cycle_len={cycle_len}, n={n}")
    rng = random.Random(seed)
    # a random tree on the cycle (contracted to vertex 0) plus the other
    # vertices; each edge at the contracted vertex lands on a random cycle vertex
    forest = _random_tree_edges(n - cycle_len + 1, rng)

    def place(x: int) -> int:
        return rng.randrange(cycle_len) if x == 0 else cycle_len + x - 1

    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    edges += [(place(u), place(v)) for u, v in forest]
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


def graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled_graphs(
    n: int, connected_only: bool = False, lo: int = 0, hi: Optional[int] = None
) -> Iterator[Graph]:
    """Every labeled simple graph on ``n <= 7`` vertices, by edge bitmask.

    ``lo``/``hi`` restrict to a bitmask range so callers can split the work.
    """
    if not 0 <= n <= MAX_GRAPH_N:
        raise GraphError(f"exhaustive graph enumeration needs 0 <= n <= {MAX_GRAPH_N}")
    slots = list(combinations(range(n), 2))
    hi = graph_count(n) if hi is None else hi
    for mask in range(lo, hi):
        g = Graph(n, [slots[i] for i in range(len(slots)) if mask >> i & 1])
        if not connected_only or is_connected(g):
            yield g


def tree_count(n: int) -> int:
    return 1 if n <= 2 else n ** (n - 2)


def _tree_edge_lists(n: int, lo: int = 0, hi: Optional[int] = None) -> Iterator[list[tuple[int, int]]]:
    hi = tree_count(n) if hi is None else hi
    if n <= 2:
        if lo < hi:
            yield [] if n == 1 else [(0, 1)]
        return
    for index in range(lo, hi):
        seq = []
        for _ in range(n - 2):
            index, digit = divmod(index, n)
            seq.append(digit)
        yield _decode(seq[::-1], n)


def enumerate_labeled_trees(n: int, lo: int = 0, hi: Optional[int] = None) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on ``1 <= n <= 9`` vertices, in Prüfer-code
    order; ``lo``/``hi`` select a range of code indices."""
    if not 1 <= n <= MAX_TREE_N:
        raise GraphError(f"tree enumeration needs 1 <= n <= {MAX_TREE_N}, got {n}")
    for edges in _tree_edge_lists(n, lo, hi):
        yield Graph(n, edges)


def enumerate_unicyclic(n: int, lo: int = 0, hi: Optional[int] = None) -> Iterator[Graph]:
    """Every labeled unicyclic graph on ``n <= 9`` vertices exactly once.

    Each is a labeled tree plus one non-edge. A graph arises from as many
    (tree, edge) pairs as its cycle has edges; only the pair whose added edge
    is the largest edge of the cycle is emitted. ``lo``/``hi`` select a
    range of underlying tree indices.
    """
    if n > MAX_TREE_N:
        raise GraphError(f"unicyclic enumeration is capped at n={MAX_TREE_N}")
    if n < 3:
        return
    for edges in _tree_edge_lists(n, lo, hi):
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        parent = [-1] * n
        depth = [0] * n
        order = [0]
        seen = [False] * n
        seen[0] = True
        for x in order:
            for y in nbrs[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    order.append(y)
        present = {(min(e), max(e)) for e in edges}
        for u, v in combinations(range(n), 2):
            if (u, v) in present or not _is_largest_on_cycle(u, v, parent, depth):
                continue
            yield Graph(n, edges + [(u, v)])


def _is_largest_on_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> bool:
    key = (u, v)
    a, b = u, v
    while a != b:
        if depth[a] < depth[b]:
            a, b = b, a
        p = parent[a]
        if (min(a, p), max(a, p)) > key:
            return False
        a = p
    return True
