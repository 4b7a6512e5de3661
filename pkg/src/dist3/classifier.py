"""Decide connectivity of D_3(G) for trees and unicyclic graphs from structure.

Every verdict carries a case tag naming the characterization that decided it
and, unless disabled, a certificate computed from the actual D_3 graph that
can be checked without trusting the classifier.

Case tags:

========================  ==================================================
``T2.7``                  tree: inner-node distance rule
``T2.8``                  cycle length >= 7 and coprime to 3: always connected
``T2.9``                  cycle length >= 6 divisible by 3: inner-node rule
``T2.13:<cond>``          5-cycle; ``<cond>`` is the disconnecting condition
                          (``3i``, ``3ii``, ``2i``, ``2ii``, ``1``, ``C5``) or
                          ``none`` when D_3 is connected
``T2.15:<match>``         4-cycle; ``H(t)``, ``G1``..``G3`` or ``none``
``T2.16:<match>``         3-cycle; ``H(t)``, ``T16A``, ``T16B(t)`` or ``none``
``ORACLE_FALLBACK``       neither tree nor unicyclic (or a single vertex)
========================  ==================================================
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .distance import d3_components
from .graph import Graph, GraphError, all_pairs_distances, is_connected
from .structure import (
    OTHER,
    TREE,
    DistanceRows,
    Embedding,
    Shape,
    detect_shape,
    find_fixed_template_embedding,
    find_h_embedding,
    inner_nodes,
)

ORACLE_FALLBACK = "ORACLE_FALLBACK"


class CertificateError(ValueError):
    """A requested certificate contradicts the actual D_3 graph."""


@dataclass(frozen=True)
class Certificate:
    """Either a spanning set of distance-3 pairs or a separating partition."""

    spanning_d3_edges: Optional[tuple[tuple[int, int], ...]] = None
    separating_partition: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def kind(self) -> str:
        return "spanning_d3_edges" if self.spanning_d3_edges is not None else "separating_partition"

    def to_json(self) -> dict:
        if self.spanning_d3_edges is not None:
            return {"kind": self.kind, "edges": [list(e) for e in self.spanning_d3_edges]}
        return {"kind": self.kind, "blocks": [list(b) for b in self.separating_partition]}


@dataclass(frozen=True)
class Verdict:
    connected: bool
    case_tag: str
    certificate: Optional[Certificate] = None
    witness: Optional[Embedding] = None


def make_certificate(g: Graph, connected: bool) -> Certificate:
    blocks, forest = d3_components(g)
    if (len(blocks) == 1) != connected:
        state = "connected" if len(blocks) == 1 else "disconnected"
        raise CertificateError(f"claimed connected={connected} but D_3 is {state}")
    if connected:
        return Certificate(spanning_d3_edges=tuple(sorted(forest)))
    return Certificate(separating_partition=tuple(tuple(b) for b in blocks))


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    """Check a certificate against freshly computed distances in ``g``."""
    dist = all_pairs_distances(g)
    if cert.spanning_d3_edges is not None:
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in cert.spanning_d3_edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or dist[u][v] != 3:
                return False
            parent[find(u)] = find(v)
        return g.n > 0 and len({find(v) for v in range(g.n)}) == 1
    blocks = cert.separating_partition or ()
    if len(blocks) < 2:
        return False
    owner = {}
    for i, block in enumerate(blocks):
        for v in block:
            if v in owner or not 0 <= v < g.n:
                return False
            owner[v] = i
    if len(owner) != g.n:
        return False
    return all(
        owner[u] == owner[v]
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if dist[u][v] == 3
    )


# --- dispatch ---------------------------------------------------------------


def classify(
    g: Graph, certify: bool = True, literal: bool = False, shape: Optional[Shape] = None
) -> Verdict:
    """Structural verdict on D_3(g) for a connected graph.

    ``literal=True`` applies the 5-cycle conditions word for word instead of
    the repaired reading; it exists to reproduce the gaps in that wording.
    """
    shape = shape or detect_shape(g)
    if g.n == 0 or (shape.kind == OTHER and not is_connected(g)):
        raise GraphError("classify needs a connected graph with at least one vertex")
    if g.n == 1 or shape.kind == OTHER:
        blocks, _ = d3_components(g)
        verdict = Verdict(len(blocks) == 1, ORACLE_FALLBACK)
    elif shape.kind == TREE:
        verdict = classify_tree(g, shape)
    else:
        verdict = classify_unicyclic(g, shape, literal=literal)
    if certify:
        cert = make_certificate(g, verdict.connected)
        verdict = Verdict(verdict.connected, verdict.case_tag, cert, verdict.witness)
    return verdict


def _has_far_inner_pair(g: Graph, rows: DistanceRows, inner: Sequence[int]) -> bool:
    for i, u in enumerate(inner):
        row = rows[u]
        if any(row[v] % 3 for v in inner[i + 1:]):
            return True
    return False


def classify_tree(g: Graph, shape: Optional[Shape] = None) -> Verdict:
    shape = shape or detect_shape(g)
    if shape.kind != TREE:
        raise GraphError("classify_tree needs a tree")
    inner = sorted(inner_nodes(g))
    return Verdict(_has_far_inner_pair(g, DistanceRows(g), inner), "T2.7")


def classify_unicyclic(g: Graph, shape: Optional[Shape] = None, literal: bool = False) -> Verdict:
    shape = shape or detect_shape(g)
    if shape.cycle is None:
        raise GraphError("classify_unicyclic needs a unicyclic graph")
    c = len(shape.cycle)
    if c >= 7 and c % 3:
        return Verdict(True, "T2.8")
    if c % 3 == 0 and c >= 6:
        return classify_c6plus_mult3(g, shape.cycle, shape)
    if c == 5:
        return classify_c5(g, shape.cycle, literal=literal, shape=shape)
    if c == 4:
        return classify_c4(g, shape.cycle, shape)
    return classify_c3(g, shape.cycle, shape)


def _require_cycle(
    g: Graph, cycle: Sequence[int], ok: bool, what: str, shape: Optional[Shape] = None
) -> Shape:
    shape = shape or detect_shape(g)
    if shape.cycle is None or set(shape.cycle) != set(cycle) or not ok:
        raise GraphError(f"expected a unicyclic graph whose cycle {what}")
    return shape


def classify_c6plus_mult3(g: Graph, cycle: Sequence[int], shape: Optional[Shape] = None) -> Verdict:
    ok = len(cycle) >= 6 and len(cycle) % 3 == 0
    _require_cycle(g, cycle, ok, "is >= 6 and divisible by 3", shape)
    inner = sorted(inner_nodes(g))
    return Verdict(_has_far_inner_pair(g, DistanceRows(g), inner), "T2.9")


# --- 5-cycle ----------------------------------------------------------------


def _labelings(cycle: Sequence[int]):
    k = len(cycle)
    for r in range(k):
        yield [cycle[(r + i) % k] for i in range(k)]
        yield [cycle[(r - i) % k] for i in range(k)]


def _branch(g: Graph, root: int, blocked: set) -> set:
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y not in blocked and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _tree_local_inner(g: Graph, part: set) -> list[int]:
    deg = {v: sum(1 for w in g.adj[v] if w in part) for v in part}
    return sorted(
        u for u in part
        if deg[u] >= 3 and sum(1 for w in g.adj[u] if w in part and deg[w] >= 2) >= 2
    )


def c5_condition(g: Graph, cycle: Sequence[int], literal: bool = False) -> Optional[str]:
    """Name of the first disconnecting 5-cycle condition that holds, else ``None``.

    Conditions are tried over all ten labelings ``x1..x5`` of the cycle in
    the order ``3i, 3ii, 2i, 2ii, 1, C5``; the leading digit is the number
    of cycle vertices of degree >= 3. Two departures from the word-for-word
    reading, both switched off by ``literal=True``:

    * in ``3i``/``2i`` the requirement ``deg(x1) == 3`` is also met when
      every off-cycle neighbour of ``x1`` is a leaf;
    * in ``1`` inner nodes are computed inside ``T = G - {x4, x5}``.
    """
    if g.n == 5:
        return "C5"
    adj = g.adj
    deg = [len(a) for a in adj]
    on_cycle = set(cycle)
    inner = inner_nodes(g)
    rows = DistanceRows(g)
    high = sum(1 for v in cycle if deg[v] >= 3)

    def hub_ok(x1: int) -> bool:
        if deg[x1] == 3:
            return True
        return not literal and all(deg[y] == 1 for y in adj[x1] if y not in on_cycle)

    def rest_are_leaves(x) -> bool:
        return all(deg[y] == 1 for c in x[1:] for y in adj[c] if y not in on_cycle)

    def branch_residue(x, residue: int, skip_hub: bool) -> bool:
        # G - {x2..x5} = T + sK1 with every inner node of T at the given residue
        if not rest_are_leaves(x):
            return False
        x1 = x[0]
        part = _branch(g, x1, set(x[1:]))
        dist = rows[x1]
        return all(dist[u] % 3 == residue for u in inner & part if not (skip_hub and u == x1))

    for x in _labelings(cycle):
        x1, x2, x3, x4, x5 = x
        if high == 3:
            if hub_ok(x1) and deg[x2] == deg[x5] == 2 and branch_residue(x, 1, True):
                return "3i"
            if deg[x3] == deg[x4] == 2 and branch_residue(x, 0, False):
                return "3ii"
        elif high == 2:
            if hub_ok(x1) and deg[x2] == deg[x3] == deg[x5] == 2 and branch_residue(x, 1, True):
                return "2i"
            if deg[x2] == deg[x3] == deg[x4] == 2 and branch_residue(x, 0, False):
                return "2ii"
        elif high == 1 and deg[x2] == deg[x3] == deg[x4] == deg[x5] == 2:
            part = _branch(g, x1, {x4, x5})
            if literal:
                nodes = sorted(inner & part)
            else:
                nodes = _tree_local_inner(g, part)
            if not _has_far_inner_pair(g, rows, nodes):
                return "1"
    return None


def classify_c5(
    g: Graph, cycle: Sequence[int], literal: bool = False, shape: Optional[Shape] = None
) -> Verdict:
    _require_cycle(g, cycle, len(cycle) == 5, "has length 5", shape)
    cond = c5_condition(g, cycle, literal=literal)
    return Verdict(cond is None, f"T2.13:{cond or 'none'}")


# --- 4- and 3-cycles --------------------------------------------------------


def classify_c4(g: Graph, cycle: Sequence[int], shape: Optional[Shape] = None) -> Verdict:
    shape = _require_cycle(g, cycle, len(cycle) == 4, "has length 4", shape)
    rows = DistanceRows(g)
    emb = find_h_embedding(g, shape, rows)
    if emb is None:
        for name in ("G1", "G2", "G3"):
            emb = find_fixed_template_embedding(g, name, shape=shape, rows=rows)
            if emb is not None:
                break
    return Verdict(emb is not None, f"T2.15:{emb.template_id if emb else 'none'}", witness=emb)


def classify_c3(g: Graph, cycle: Sequence[int], shape: Optional[Shape] = None) -> Verdict:
    shape = _require_cycle(g, cycle, len(cycle) == 3, "has length 3", shape)
    rows = DistanceRows(g)
    emb = find_h_embedding(g, shape, rows)
    if emb is None:
        emb = find_fixed_template_embedding(g, "T16A", shape=shape, rows=rows)
    # T16B(t) hangs a path of length t + 2 off the cycle
    reach = _depth_below_cycle(g, shape.cycle)
    t = 1
    while emb is None and t + 2 <= reach:
        if t % 3 != 1:
            emb = find_fixed_template_embedding(g, "T16B", t, shape=shape, rows=rows)
        t += 1
    return Verdict(emb is not None, f"T2.16:{emb.template_id if emb else 'none'}", witness=emb)


def _depth_below_cycle(g: Graph, cycle: Sequence[int]) -> int:
    depth = {v: 0 for v in cycle}
    frontier = list(cycle)
    while frontier:
        nxt = []
        for x in frontier:
            for y in g.adj[x]:
                if y not in depth:
                    depth[y] = depth[x] + 1
                    nxt.append(y)
        frontier = nxt
    return max(depth.values())
