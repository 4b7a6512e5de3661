"""Catalog of small graphs known to have a connected 3-distance graph.

Adjacencies are written out explicitly so they can be compared against the
drawings they were transcribed from. Cycle vertices come first and are
numbered in cycle order; pendant vertices follow.

=================  =========================================================
id                 graph
=================  =========================================================
``H(t)``           path template, t in {1, 2, 4, 5}
``P5_1``..``P5_7`` 5-cycle extension figures (seven drawings)
``P6_1``, ``P6_2`` 6-cycle with two high-degree cycle vertices at distance 2, 1
``G1``..``G3``     4-cycle templates
``T16A``           3-cycle template, leaf and 2-path at one vertex
``T16B(t)``        3-cycle template with a long tail, t in {3, 5}
``C5_skip(k,r)``   5-cycle, hubs at x1 and x3, inner node at distance 3k+r
``C5_adj(k,r)``    5-cycle, hubs at x1 and x2, inner node at distance 3k+r
``C4_adj(k,r)``    4-cycle, hubs at x1 and x2, inner node at distance 3k+r
=================  =========================================================
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .distance import d3_connected
from .graph import Graph
from .structure import build_template


class FixtureError(AssertionError):
    """A catalog entry disagrees with the brute-force D_3 check."""


@dataclass(frozen=True)
class Fixture:
    id: str
    graph: Graph
    expected_d3_connected: bool
    source: str


def _cycle(k: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % k) for i in range(k)]


def _pentagon(extra: list[tuple[int, int]]) -> Graph:
    n = 1 + max(max(e) for e in extra)
    return Graph(n, _cycle(5) + extra)


# Pentagon p0..p4 in drawing order; each entry lists the pendant edges.
_PENTAGON_FIGURES = {
    "P5_1": [(0, 5), (5, 6), (2, 7), (7, 8)],
    "P5_2": [(0, 5), (1, 6), (2, 7), (4, 8)],
    "P5_3": [(0, 5), (5, 6), (1, 7), (7, 8)],
    "P5_4": [(0, 5), (5, 6), (1, 7), (2, 8)],
    "P5_5": [(0, 5), (5, 6), (1, 7), (3, 8)],
    "P5_6": [(2, 5), (0, 6), (2, 7), (7, 8)],
    "P5_7": [(2, 5), (0, 6), (2, 7), (7, 8), (4, 9)],
}

_HEXAGON_FIGURES = {
    "P6_1": [(1, 6), (5, 7)],
    "P6_2": [(3, 6), (4, 7)],
}


def _hub_config(cycle_len: int, second_hub: int, dist: int) -> Graph:
    """Cycle x1.. with a leaf ``y`` at ``x[second_hub]`` and a path hanging
    from x1 whose vertex at distance ``dist`` carries an extra leaf ``v``
    and continues two more steps (making it an inner node)."""
    path = list(range(cycle_len, cycle_len + dist + 2))
    y, v = cycle_len + dist + 2, cycle_len + dist + 3
    edges = _cycle(cycle_len) + [(0, path[0])] + list(zip(path, path[1:]))
    edges += [(second_hub, y), (path[dist - 1], v)]
    return Graph(cycle_len + dist + 4, edges)


def _catalog() -> list[Fixture]:
    out = []
    for t in (1, 2, 4, 5):
        out.append(Fixture(f"H({t})", build_template("H", t).graph, True, "path template"))
    for key, extra in _PENTAGON_FIGURES.items():
        out.append(Fixture(key, _pentagon(extra), True, "5-cycle extension figure"))
    for key, extra in _HEXAGON_FIGURES.items():
        out.append(Fixture(key, Graph(8, _cycle(6) + extra), True, "6-cycle figure"))
    for name in ("G1", "G2", "G3", "T16A"):
        out.append(Fixture(name, build_template(name).graph, True, "cycle template"))
    for t in (3, 5):
        out.append(Fixture(f"T16B({t})", build_template("T16B", t).graph, True, "cycle template"))
    for k in (1, 2):
        for r in (0, 2):
            out.append(Fixture(f"C5_skip({k},{r})", _hub_config(5, 2, 3 * k + r), True,
                               "5-cycle, hubs two apart"))
        for r in (1, 2):
            out.append(Fixture(f"C5_adj({k},{r})", _hub_config(5, 1, 3 * k + r), True,
                               "5-cycle, adjacent hubs"))
            out.append(Fixture(f"C4_adj({k},{r})", _hub_config(4, 1, 3 * k + r), True,
                               "4-cycle, adjacent hubs"))
    return out


@lru_cache(maxsize=None)
def _checked() -> tuple[Fixture, ...]:
    items = _catalog()
    for fx in items:
        if d3_connected(fx.graph) != fx.expected_d3_connected:
            raise FixtureError(f"fixture {fx.id}: expected connected={fx.expected_d3_connected}")
    return tuple(items)


def fixtures() -> list[Fixture]:
    """All catalog entries, each verified against the brute-force D_3 check."""
    return list(_checked())


def fixture(fixture_id: str) -> Fixture:
    for fx in _checked():
        if fx.id == fixture_id:
            return fx
    raise KeyError(fixture_id)
