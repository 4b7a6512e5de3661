"""Exhaustive check of the small-order claim: among all graphs on at most 7
vertices, only the 7-cycle has a connected 3-distance graph.

Graphs are visited in Gray-code order over the edge bitmask so each step
toggles a single edge of the adjacency masks.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations

from .distance import sphere_mask
from .generators import MAX_GRAPH_N
from .graph import GraphError


@dataclass
class CorollaryRow:
    n: int
    graphs: int = 0
    connected: int = 0
    witnesses: int = 0
    two_regular_witnesses: int = 0

    def merge(self, other: "CorollaryRow") -> None:
        self.graphs += other.graphs
        self.connected += other.connected
        self.witnesses += other.witnesses
        self.two_regular_witnesses += other.two_regular_witnesses

    @property
    def ok(self) -> bool:
        if self.n <= 1:
            # K1: D_3(K1) is the one-vertex graph, connected but trivial
            return True
        if self.n <= 6:
            return self.witnesses == 0
        return self.witnesses > 0 and self.witnesses == self.two_regular_witnesses

    def to_json(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out


def _connected(masks: list[int], full: int) -> bool:
    reach = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~reach
        reach |= frontier
    return reach == full


def _d3_connected(masks: list[int], n: int, full: int) -> bool:
    reach = 1
    stack = [0]
    while stack:
        x = stack.pop()
        fresh = sphere_mask(masks, x, 3) & ~reach
        if not fresh and reach == 1:
            return False
        reach |= fresh
        while fresh:
            bit = fresh & -fresh
            stack.append(bit.bit_length() - 1)
            fresh ^= bit
    return reach == full


def scan_range(n: int, start: int, stop: int) -> CorollaryRow:
    """Tally Gray-code indices ``start..stop-1`` of the graphs on ``n`` vertices."""
    row = CorollaryRow(n)
    slots = list(combinations(range(n), 2))
    full = (1 << n) - 1
    masks = [0] * n
    gray = start ^ (start >> 1)
    for i, (u, v) in enumerate(slots):
        if gray >> i & 1:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    for index in range(start, stop):
        if index != start:
            i = (index & -index).bit_length() - 1
            u, v = slots[i]
            masks[u] ^= 1 << v
            masks[v] ^= 1 << u
        row.graphs += 1
        if not _connected(masks, full):
            continue
        row.connected += 1
        if n > 1 and _d3_connected(masks, n, full):
            row.witnesses += 1
            if all(bin(m).count("1") == 2 for m in masks):
                row.two_regular_witnesses += 1
    return row


def _scan_args(args: tuple[int, int, int]) -> CorollaryRow:
    return scan_range(*args)


def verify_corollary(max_n: int = 7, jobs: int = 1, chunks: int = 64) -> list[CorollaryRow]:
    """One tally row per ``n`` in ``1..max_n``.

    A *witness* is a connected graph on at least 2 vertices whose D_3 is
    connected. Rows for ``n <= 6`` pass when there are none; the ``n = 7``
    row passes when witnesses exist and all are 2-regular (connected and
    2-regular on 7 vertices means the 7-cycle).
    """
    if not 1 <= max_n <= MAX_GRAPH_N:
        raise GraphError(f"corollary check needs 1 <= max_n <= {MAX_GRAPH_N}")
    tasks = []
    for n in range(1, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        step = max(1, -(-total // chunks))
        tasks += [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_args, tasks))
    else:
        parts = [_scan_args(t) for t in tasks]
    rows = {n: CorollaryRow(n) for n in range(1, max_n + 1)}
    for part in parts:
        rows[part.n].merge(part)
    return [rows[n] for n in sorted(rows)]
