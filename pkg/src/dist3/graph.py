"""Immutable simple graphs on dense vertex ids with BFS metric queries."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex arguments."""


class _Unreachable(enum.Enum):
    UNREACHABLE = "unreachable"

    def __repr__(self) -> str:
        return "UNREACHABLE"


#: Distance between vertices in different components.
UNREACHABLE = _Unreachable.UNREACHABLE


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is stored canonically: each pair as ``(u, v)`` with ``u < v``,
    the whole tuple sorted. Two graphs compare equal iff they have the same
    vertex count and edge set.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    masks: tuple[int, ...] = field(compare=False, repr=False)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has endpoint outside [0, {n})")
            canon.add((u, v) if u < v else (v, u))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "adj", tuple(tuple(sorted(x)) for x in nbrs))
        object.__setattr__(self, "masks", tuple(masks))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_vertex(self, v)
        return self.adj[v]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep`` renumbered densely.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        old = sorted(set(keep))
        new_id = {v: i for i, v in enumerate(old)}
        sub = [(new_id[u], new_id[v]) for u, v in self.edges if u in new_id and v in new_id]
        return Graph(len(old), sub), old


@dataclass(frozen=True, slots=True)
class DistanceVector:
    source: int
    dist: tuple

    def __getitem__(self, v: int):
        return self.dist[v]

    def __len__(self) -> int:
        return len(self.dist)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for graph on {g.n} vertices")


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, dropping duplicate edges; rejects loops and bad endpoints."""
    return Graph(n, [(int(u), int(v)) for u, v in pairs])


def _bfs_raw(adj: Sequence[Sequence[int]], s: int) -> list:
    dist: list = [UNREACHABLE] * len(adj)
    dist[s] = 0
    queue = deque([s])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] is UNREACHABLE:
                dist[y] = dx
                queue.append(y)
    return dist


def bfs(g: Graph, s: int) -> DistanceVector:
    _check_vertex(g, s)
    return DistanceVector(s, tuple(_bfs_raw(g.adj, s)))


def all_pairs_distances(g: Graph) -> list[list]:
    """n x n table of shortest-path distances (``UNREACHABLE`` across components)."""
    return [_bfs_raw(g.adj, s) for s in range(g.n)]


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    blocks = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    block.append(y)
                    stack.append(y)
        blocks.append(sorted(block))
    return blocks


def is_connected(g: Graph) -> bool:
    # n == 0 is deliberately not connected
    if g.n == 0:
        return False
    reach = 1
    frontier = 1
    masks = g.masks
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~reach
        reach |= frontier
    return reach == (1 << g.n) - 1


def diameter(g: Graph) -> Optional[int]:
    """Largest pairwise distance, or ``None`` when disconnected or ``n <= 1``."""
    if g.n <= 1 or not is_connected(g):
        return None
    return max(max(row) for row in all_pairs_distances(g))


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return len(g.adj[v])
