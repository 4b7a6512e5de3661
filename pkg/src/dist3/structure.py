"""Structural recognition for trees and unicyclic graphs.

Covers shape detection (with cycle extraction by leaf peeling), inner nodes,
generalized double stars, the named template graphs and the search for
3-induced copies of those templates inside a host graph.

A subgraph ``S`` of ``G`` is *3-induced* when every pair of its vertices at
host distance at most 3 has the same distance inside ``S``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .graph import Graph, GraphError, UNREACHABLE, _bfs_raw, is_connected

TREE = "tree"
UNICYCLIC = "unicyclic"
OTHER = "other"


@dataclass(frozen=True)
class Shape:
    kind: str
    cycle: Optional[tuple[int, ...]] = None

    @property
    def cycle_len(self) -> Optional[int]:
        return None if self.cycle is None else len(self.cycle)


def detect_shape(g: Graph) -> Shape:
    if not is_connected(g):
        return Shape(OTHER)
    if g.m == g.n - 1:
        return Shape(TREE)
    if g.m != g.n:
        return Shape(OTHER)
    return Shape(UNICYCLIC, _peel_to_cycle(g))


def _peel_to_cycle(g: Graph) -> tuple[int, ...]:
    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    start = min(v for v in range(g.n) if alive[v])
    a, b = (w for w in g.adj[start] if alive[w])
    # walk towards the smaller neighbour so the listing is canonical
    cycle = [start]
    prev, cur = start, min(a, b)
    while cur != start:
        cycle.append(cur)
        nxt = next(w for w in g.adj[cur] if alive[w] and w != prev)
        prev, cur = cur, nxt
    return tuple(cycle)


def inner_nodes(g: Graph) -> frozenset[int]:
    """Vertices of degree >= 3 with at least two neighbours of degree >= 2."""
    adj = g.adj
    return frozenset(
        u
        for u in range(g.n)
        if len(adj[u]) >= 3 and sum(1 for w in adj[u] if len(adj[w]) >= 2) >= 2
    )


def is_generalized_double_star(g: Graph) -> Optional[tuple[int, int, int]]:
    """Return ``(l, m, n)`` with ``m <= n`` if ``g`` is GDS(l, m, n), else ``None``.

    GDS(l, m, n) is two disjoint stars K_{1,m} and K_{1,n} (m, n >= 1) whose
    centres are joined by a path of length l >= 1.
    """
    if g.n < 4 or detect_shape(g).kind != TREE:
        return None
    spine = [v for v in range(g.n) if len(g.adj[v]) >= 2]
    spine_set = set(spine)
    ends = [v for v in spine if sum(1 for w in g.adj[v] if w in spine_set) <= 1]
    # non-leaf vertices of a tree induce a subtree; it must be a path
    if len(spine) < 2 or len(ends) != 2:
        return None
    for v in spine:
        if v not in ends and len(g.adj[v]) != 2:
            return None
    m, n = sorted(sum(1 for w in g.adj[c] if w not in spine_set) for c in ends)
    return len(spine) - 1, m, n


# --- templates --------------------------------------------------------------


@dataclass(frozen=True)
class Template:
    id: str
    graph: Graph
    anchors: dict
    cycle: Optional[tuple[int, ...]] = None


@lru_cache(maxsize=256)
def _h_template(t: int) -> Template:
    u = list(range(t + 1))
    a1, a2, a3, b1, b2, b3 = range(t + 1, t + 7)
    edges = list(zip(u, u[1:]))
    edges += [(a1, a2), (a2, 0), (a3, 0), (b1, b2), (b2, t), (b3, t)]
    anchors = {f"u{i}": i for i in u}
    anchors.update(a1=a1, a2=a2, a3=a3, b1=b1, b2=b2, b3=b3)
    return Template(f"H({t})", Graph(t + 7, edges), anchors)


_SQUARE = [(0, 1), (1, 2), (2, 3), (3, 0)]
_TRIANGLE = [(0, 1), (1, 2), (2, 0)]


@lru_cache(maxsize=None)
def _square_template(name: str) -> Template:
    if name == "G1":
        extra = [(0, 4), (1, 5), (2, 6), (3, 7)]
    elif name == "G2":
        extra = [(0, 4), (1, 5), (2, 6), (6, 7)]
    else:
        extra = [(0, 4), (4, 5), (1, 6), (6, 7)]
    anchors = {f"x{i + 1}": i for i in range(4)}
    return Template(name, Graph(8, _SQUARE + extra), anchors, (0, 1, 2, 3))


@lru_cache(maxsize=None)
def _triangle_a() -> Template:
    # x1 carries a pendant 2-path, x2 a pendant 2-path and a leaf, x3 is bare
    edges = _TRIANGLE + [(0, 3), (3, 4), (1, 5), (5, 6), (1, 7)]
    anchors = {"x1": 0, "x2": 1, "x3": 2, "a": 5, "b": 6}
    return Template("T16A", Graph(8, edges), anchors, (0, 1, 2))


@lru_cache(maxsize=256)
def _triangle_b(t: int) -> Template:
    us = list(range(3, t + 5))
    c, a, b = t + 5, t + 6, t + 7
    edges = _TRIANGLE + [(0, us[0])] + list(zip(us, us[1:])) + [(us[t - 1], c), (1, a), (a, b)]
    anchors = {"x1": 0, "x2": 1, "x3": 2, "a": a, "b": b, "c": c}
    anchors.update({f"u{i + 1}": v for i, v in enumerate(us)})
    return Template(f"T16B({t})", Graph(t + 8, edges), anchors, (0, 1, 2))


_ID_RE = re.compile(r"^(H|T16B)\((\d+)\)$")


def build_template(template_id: str, t: Optional[int] = None) -> Template:
    """Build a named template; ``"H"``/``"T16B"`` take ``t`` (or ``"H(4)"`` form)."""
    match = _ID_RE.match(template_id)
    if match:
        template_id, t = match.group(1), int(match.group(2))
    if template_id in ("H", "T16B"):
        if t is None or t < 1:
            raise GraphError(f"template {template_id} needs t >= 1, got {t}")
        return _h_template(t) if template_id == "H" else _triangle_b(t)
    if template_id in ("G1", "G2", "G3"):
        return _square_template(template_id)
    if template_id == "T16A":
        return _triangle_a()
    raise GraphError(f"unknown template id {template_id!r}")


# --- 3-induced subgraphs ----------------------------------------------------


class DistanceRows:
    """Lazily computed BFS rows of a host graph."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self._rows: dict[int, list] = {}

    def __getitem__(self, s: int) -> list:
        row = self._rows.get(s)
        if row is None:
            row = self._rows[s] = _bfs_raw(self.g.adj, s)
        return row


def _capped(d) -> int:
    return 4 if d is UNREACHABLE or d > 3 else d


def is_3_induced(
    g: Graph,
    sub_vertices: Iterable[int],
    sub_edges: Iterable[tuple[int, int]],
    rows: Optional[DistanceRows] = None,
) -> bool:
    verts = sorted(set(sub_vertices))
    index = {v: i for i, v in enumerate(verts)}
    local = []
    for u, v in sub_edges:
        if u not in index or v not in index:
            raise GraphError(f"subgraph edge ({u}, {v}) leaves the vertex set")
        if not g.has_edge(u, v):
            raise GraphError(f"subgraph edge ({u}, {v}) is not an edge of the host")
        local.append((index[u], index[v]))
    sub = Graph(len(verts), local)
    rows = rows or DistanceRows(g)
    for i, x in enumerate(verts):
        host = rows[x]
        inner = _bfs_raw(sub.adj, i)
        for j in range(i + 1, len(verts)):
            dg = host[verts[j]]
            if dg is not UNREACHABLE and dg <= 3 and inner[j] != dg:
                return False
    return True


@dataclass(frozen=True)
class Embedding:
    template_id: str
    vertex_map: tuple[int, ...]
    edge_preserving: bool
    three_induced: bool

    def image_edges(self, template: Template) -> list[tuple[int, int]]:
        phi = self.vertex_map
        return [(phi[u], phi[v]) for u, v in template.graph.edges]


def make_embedding(g: Graph, template: Template, phi: Sequence[int], rows=None) -> Embedding:
    edges = [(phi[u], phi[v]) for u, v in template.graph.edges]
    preserving = len(set(phi)) == len(phi) and all(g.has_edge(u, v) for u, v in edges)
    induced = preserving and is_3_induced(g, phi, edges, rows)
    return Embedding(template.id, tuple(phi), preserving, induced)


@lru_cache(maxsize=512)
def _template_distances(tg: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(_bfs_raw(tg.adj, s)) for s in range(tg.n))


class _Extender:
    """Backtracking extension of a partial template map with 3-induced pruning."""

    def __init__(self, g: Graph, template: Template, rows: DistanceRows) -> None:
        self.g = g
        self.tg = template.graph
        self.tdist = _template_distances(template.graph)
        self.rows = rows

    def consistent(self, phi: list, x: int, h: int, placed: Sequence[int]) -> bool:
        host = self.rows[h]
        tx = self.tdist[x]
        for y in placed:
            if _capped(tx[y]) != _capped(host[phi[y]]):
                return False
        return True

    def extend(self, phi: list, placed: list, order: Sequence[tuple[int, int]], forbidden: set) -> bool:
        """Assign ``order`` entries (vertex, parent) in turn; mutates ``phi``.

        Iterative so that long template paths do not hit the recursion limit.
        """
        used = {phi[y] for y in placed}
        choices: list[Iterator[int]] = []
        depth = 0
        while 0 <= depth < len(order):
            x, parent = order[depth]
            if len(choices) == depth:
                choices.append(iter(self.g.adj[phi[parent]]))
            elif phi[x] is not None:
                used.discard(phi[x])
                placed.pop()
                phi[x] = None
            need = len(self.tg.adj[x])
            for h in choices[depth]:
                if h in used or h in forbidden or len(self.g.adj[h]) < need:
                    continue
                if self.consistent(phi, x, h, placed):
                    phi[x] = h
                    used.add(h)
                    placed.append(x)
                    depth += 1
                    break
            else:
                choices.pop()
                depth -= 1
        return depth == len(order)


def _require_shape(g: Graph, shape: Optional[Shape]) -> Shape:
    shape = shape or detect_shape(g)
    if shape.kind == OTHER:
        raise GraphError("template search needs a tree or unicyclic host")
    return shape


def _simple_paths(g: Graph, root: int, targets: set) -> Iterator[tuple[int, ...]]:
    """Simple paths from ``root`` to any vertex in ``targets``, by DFS.

    Only used on trees and unicyclic graphs, where each vertex ends at most
    two simple paths from the root, so the walk stays linear.
    """
    path = [root]
    on_path = {root}
    stack = [iter(g.adj[root])]
    while stack:
        y = next(stack[-1], None)
        if y is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if y in on_path:
            continue
        path.append(y)
        on_path.add(y)
        if y in targets:
            yield tuple(path)
        stack.append(iter(g.adj[y]))


def find_h_embedding(
    g: Graph, shape: Optional[Shape] = None, rows: Optional[DistanceRows] = None
) -> Optional[Embedding]:
    """First 3-induced copy of H(t) with ``t % 3 != 0``, or ``None``.

    The endpoints of the connecting path of H(t) must land on inner nodes,
    so the search runs over pairs of inner nodes and the simple paths
    between them, then fills in the two pendant 2-paths and leaves.
    """
    _require_shape(g, shape)
    inner = sorted(inner_nodes(g))
    if len(inner) < 2:
        return None
    rows = rows or DistanceRows(g)
    for i, u in enumerate(inner):
        for path in _simple_paths(g, u, set(inner[i + 1:])):
            if (len(path) - 1) % 3 == 0:
                continue
            emb = _fit_h(g, path, rows)
            if emb is not None:
                return emb
    return None


def _fit_h(g: Graph, path: tuple[int, ...], rows: DistanceRows) -> Optional[Embedding]:
    t = len(path) - 1
    template = _h_template(t)
    ext = _Extender(g, template, rows)
    phi: list = [None] * template.graph.n
    placed: list[int] = []
    for i, h in enumerate(path):
        if not ext.consistent(phi, i, h, placed):
            return None
        phi[i] = h
        placed.append(i)
    a = template.anchors
    order = [
        (a["a2"], 0), (a["a1"], a["a2"]), (a["a3"], 0),
        (a["b2"], t), (a["b1"], a["b2"]), (a["b3"], t),
    ]
    if not ext.extend(phi, placed, order, set()):
        return None
    return make_embedding(g, template, phi, rows)


def _cycle_labelings(cycle: Sequence[int]) -> Iterator[list[int]]:
    k = len(cycle)
    for r in range(k):
        yield [cycle[(r + i) % k] for i in range(k)]
        yield [cycle[(r - i) % k] for i in range(k)]


def _growth_order(template: Template) -> list[tuple[int, int]]:
    seen = set(template.cycle)
    order = []
    frontier = list(template.cycle)
    while frontier:
        nxt = []
        for x in frontier:
            for y in template.graph.adj[x]:
                if y not in seen:
                    seen.add(y)
                    order.append((y, x))
                    nxt.append(y)
        frontier = nxt
    return order


def find_fixed_template_embedding(
    g: Graph,
    template_id: str,
    t: Optional[int] = None,
    shape: Optional[Shape] = None,
    rows: Optional[DistanceRows] = None,
) -> Optional[Embedding]:
    """3-induced copy of a cycle-bearing template, anchored on the host cycle.

    Every rotation and reflection of the host cycle is tried as the image of
    the template cycle; the pendant parts are then grown outward.
    """
    template = build_template(template_id, t)
    shape = shape or detect_shape(g)
    if shape.kind != UNICYCLIC or shape.cycle_len != len(template.cycle):
        raise GraphError(
            f"{template.id} needs a unicyclic host with cycle length {len(template.cycle)}"
        )
    if template.graph.n > g.n:
        return None
    rows = rows or DistanceRows(g)
    ext = _Extender(g, template, rows)
    order = _growth_order(template)
    on_cycle = set(shape.cycle)
    for labeling in _cycle_labelings(shape.cycle):
        phi: list = [None] * template.graph.n
        placed = []
        for x, h in zip(template.cycle, labeling):
            if len(g.adj[h]) < len(template.graph.adj[x]):
                break
            phi[x] = h
            placed.append(x)
        else:
            if ext.extend(phi, placed, order, on_cycle):
                emb = make_embedding(g, template, phi, rows)
                if emb.three_induced:
                    return emb
    return None
