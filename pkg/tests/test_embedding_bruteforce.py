"""Template search vs. an unanchored brute-force subgraph matcher."""

from hypothesis import given, settings, strategies as st

from dist3.generators import random_tree, random_unicyclic
from dist3.graph import Graph
from dist3.structure import build_template, find_fixed_template_embedding, find_h_embedding, is_3_induced


def _copies(host: Graph, pattern: Graph):
    """Every injective edge-preserving map pattern -> host, by backtracking."""
    order, seen = [], set()
    for root in range(pattern.n):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        for x in queue:
            order.append(x)
            for y in pattern.adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    phi = [None] * pattern.n

    def go(i):
        if i == len(order):
            yield list(phi)
            return
        x = order[i]
        used = {v for v in phi if v is not None}
        for h in range(host.n):
            if h in used or len(host.adj[h]) < len(pattern.adj[x]):
                continue
            if all(phi[y] is None or host.has_edge(h, phi[y]) for y in pattern.adj[x]):
                phi[x] = h
                yield from go(i + 1)
                phi[x] = None

    yield from go(0)


def _has_3_induced_copy(host: Graph, pattern: Graph) -> bool:
    for phi in _copies(host, pattern):
        if is_3_induced(host, phi, [(phi[u], phi[v]) for u, v in pattern.edges]):
            return True
    return False


def _brute_h(host: Graph) -> bool:
    return any(
        _has_3_induced_copy(host, build_template("H", t).graph)
        for t in range(1, host.n - 6)
        if t % 3
    )


hosts = st.one_of(
    st.builds(random_tree, st.integers(8, 12), st.integers(0, 10**9)),
    st.builds(lambda n, c, s: random_unicyclic(n, min(c, n), s),
              st.integers(8, 12), st.integers(3, 6), st.integers(0, 10**9)),
)


@settings(max_examples=120, deadline=None)
@given(hosts)
def test_h_search_matches_brute_force(g):
    emb = find_h_embedding(g)
    assert (emb is not None) == _brute_h(g)
    if emb is not None:
        assert emb.edge_preserving and emb.three_induced


@settings(max_examples=300, deadline=None)
@given(st.integers(8, 11), st.sampled_from([3, 4]), st.integers(0, 10**9))
def test_fixed_search_matches_brute_force(n, c, seed):
    g = random_unicyclic(n, c, seed)
    ids = ["G1", "G2", "G3"] if c == 4 else ["T16A", "T16B(2)", "T16B(3)"]
    for tid in ids:
        tp = build_template(tid)
        emb = find_fixed_template_embedding(g, tid)
        assert (emb is not None) == _has_3_induced_copy(g, tp.graph), tid
