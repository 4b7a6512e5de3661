"""Constructed (H, G) pairs for the extension statements.

``G`` grows around a host ``H`` whose D_3 is connected. New vertices attach
to one or two existing vertices, so ``G`` may gain cycles of its own. An
instance is kept only when its hypotheses hold exactly:

* ``far``: ``H`` is 3-induced in ``G`` and every vertex outside ``H`` has
  some ``H``-vertex at distance >= 3;
* ``five``: ``H`` is 3-induced and has ``a, b`` with d_H = d_G = 5.
"""

import random

from dist3.distance import d3_connected
from dist3.fixtures import fixtures
from dist3.graph import Graph, all_pairs_distances
from dist3.structure import build_template, is_3_induced


def _hosts():
    pool = [fx.graph for fx in fixtures()]
    pool += [build_template("H", t).graph for t in range(1, 12) if t % 3]
    pool += [Graph(n, [(i, (i + 1) % n) for i in range(n)]) for n in (7, 8, 10, 11)]
    return [h for h in pool if d3_connected(h)]


HOSTS = _hosts()


def _grow(h: Graph, rng: random.Random) -> Graph:
    edges = list(h.edges)
    n = h.n
    for _ in range(rng.randint(1, 8)):
        k = 1 if rng.random() < 0.75 else 2
        for u in rng.sample(range(n), min(k, n)):
            edges.append((u, n))
        n += 1
    return Graph(n, edges)


def _far(g: Graph, h: Graph, dist) -> bool:
    return all(
        any(dist[x][y] >= 3 for y in range(h.n))
        for x in range(h.n, g.n)
    )


def _five(g: Graph, h: Graph, dist) -> bool:
    dh = all_pairs_distances(h)
    return any(
        dh[a][b] == 5 and dist[a][b] == 5
        for a in range(h.n) for b in range(a + 1, h.n)
    )


def instances(count: int, kind: str, seed: int) -> tuple[list[tuple[Graph, Graph]], int]:
    """``count`` (H, G) pairs meeting the ``kind`` hypotheses, and the number
    of rejected draws."""
    rng = random.Random(f"extension:{kind}:{seed}")
    pairs = []
    rejected = 0
    while len(pairs) < count:
        h = rng.choice(HOSTS)
        g = _grow(h, rng)
        dist = all_pairs_distances(g)
        ok = is_3_induced(g, range(h.n), h.edges)
        ok = ok and (_far(g, h, dist) if kind == "far" else _five(g, h, dist))
        if not ok:
            rejected += 1
            continue
        pairs.append((h, g))
    return pairs, rejected
