"""Graph powers, k-distance graphs and distance-3 neighbourhoods."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import UNREACHABLE, Graph, GraphError, _bfs_raw, _check_vertex


@dataclass(frozen=True)
class KDistanceResult:
    base: Graph
    k: int
    result: Graph


def _check_k(k: int) -> None:
    if k < 1:
        raise GraphError(f"k must be a positive integer, got {k}")


def _pairs_within(g: Graph, lo: int, hi: int) -> list[tuple[int, int]]:
    pairs = []
    for s in range(g.n):
        dist = _bfs_raw(g.adj, s)
        pairs += [(s, v) for v in range(s + 1, g.n)
                  if dist[v] is not UNREACHABLE and lo <= dist[v] <= hi]
    return pairs


def distance_graph(g: Graph, k: int) -> Graph:
    """D_k(g): same vertices, an edge for every pair at distance exactly ``k``."""
    _check_k(k)
    return Graph(g.n, _pairs_within(g, k, k))


def power_graph(g: Graph, k: int) -> Graph:
    """g^k: an edge for every pair at distance between 1 and ``k``."""
    _check_k(k)
    return Graph(g.n, _pairs_within(g, 1, k))


def k_distance(g: Graph, k: int) -> KDistanceResult:
    return KDistanceResult(g, k, distance_graph(g, k))


def sphere_mask(masks, s: int, radius: int) -> int:
    """Bitmask of vertices at distance exactly ``radius`` from ``s``."""
    seen = frontier = 1 << s
    for _ in range(radius):
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        if not frontier:
            return 0
        seen |= frontier
    return frontier


def n3_set(g: Graph, a: int) -> set[int]:
    """Vertices at distance exactly 3 from ``a``."""
    _check_vertex(g, a)
    mask = sphere_mask(g.masks, a, 3)
    return {v for v in range(g.n) if mask >> v & 1}


def d3_components(g: Graph) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Components of D_3(g) plus a spanning forest of D_3(g).

    D_3 is explored lazily: each vertex's distance-3 sphere is computed only
    when the traversal reaches it.
    """
    masks = g.masks
    unseen = (1 << g.n) - 1
    blocks = []
    forest = []
    while unseen:
        low = unseen & -unseen
        root = low.bit_length() - 1
        unseen ^= low
        block = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            fresh = sphere_mask(masks, x, 3) & unseen
            unseen &= ~fresh
            while fresh:
                bit = fresh & -fresh
                y = bit.bit_length() - 1
                fresh ^= bit
                forest.append((x, y) if x < y else (y, x))
                block.append(y)
                stack.append(y)
        blocks.append(sorted(block))
    return blocks, forest


def d3_connected(g: Graph) -> bool:
    """Connectivity of D_3(g); ``False`` for the empty graph."""
    if g.n == 0:
        return False
    masks = g.masks
    full = (1 << g.n) - 1
    reach = 1
    stack = [0]
    while stack:
        x = stack.pop()
        fresh = sphere_mask(masks, x, 3) & ~reach
        reach |= fresh
        while fresh:
            bit = fresh & -fresh
            stack.append(bit.bit_length() - 1)
            fresh ^= bit
    return reach == full
