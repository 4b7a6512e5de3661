"""Brute-force ground truth for D_3 connectivity and classifier cross-checks."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable, Optional

from .classifier import Verdict, classify
from .distance import distance_graph
from .graph import Graph, GraphError, components, is_connected
from .structure import OTHER, detect_shape

SCHEMA_VERSION = 1

Classifier = Callable[[Graph], Verdict]


def oracle_d3_connected(g: Graph) -> tuple[bool, list[list[int]]]:
    """Build D_3(g) from per-vertex BFS and report (connected, components)."""
    d3 = distance_graph(g, 3)
    return is_connected(d3), components(d3)


def _structural(g: Graph, shape=None) -> Verdict:
    return classify(g, certify=False, shape=shape)


@dataclass(frozen=True)
class AgreementRecord:
    instance_id: str
    n: int
    shape: str
    cycle_len: Optional[int]
    classifier_connected: bool
    case_tag: str
    oracle_connected: bool
    agree: bool

    def to_json(self) -> dict:
        out = asdict(self)
        out["schema_version"] = SCHEMA_VERSION
        return out


def cross_check(
    g: Graph, instance_id: str = "", classify_fn: Optional[Classifier] = None
) -> AgreementRecord:
    shape = detect_shape(g)
    verdict = classify_fn(g) if classify_fn else _structural(g, shape)
    truth, _ = oracle_d3_connected(g)
    return AgreementRecord(
        instance_id=instance_id,
        n=g.n,
        shape=shape.kind,
        cycle_len=shape.cycle_len,
        classifier_connected=verdict.connected,
        case_tag=verdict.case_tag,
        oracle_connected=truth,
        agree=verdict.connected == truth,
    )


def _disagrees(g: Graph, classify_fn: Classifier) -> bool:
    return classify_fn(g).connected != oracle_d3_connected(g)[0]


def _delete_vertex(g: Graph, v: int) -> Graph:
    def rn(x: int) -> int:
        return x - 1 if x > v else x

    return Graph(g.n - 1, [(rn(a), rn(b)) for a, b in g.edges if v not in (a, b)])


def _smaller_candidates(g: Graph):
    """Shape-preserving one-step reductions: drop a leaf, or smooth out an
    off-cycle vertex of degree 2."""
    shape = detect_shape(g)
    on_cycle = set(shape.cycle or ())
    if g.n > 2:
        for v in range(g.n):
            if len(g.adj[v]) == 1:
                yield _delete_vertex(g, v)
    for v in range(g.n):
        if len(g.adj[v]) == 2 and v not in on_cycle:
            a, b = g.adj[v]
            joined = Graph(g.n, list(g.edges) + [(a, b)])
            yield _delete_vertex(joined, v)


def minimize_counterexample(g: Graph, classify_fn: Optional[Classifier] = None) -> Graph:
    """Greedily shrink a disagreeing instance while it keeps disagreeing.

    Tree stays tree and unicyclic stays unicyclic with the same cycle length,
    so the result still exercises the same characterization.
    """
    classify_fn = classify_fn or _structural
    if not _disagrees(g, classify_fn):
        raise GraphError("instance agrees with the oracle; nothing to minimize")
    want = detect_shape(g)
    if want.kind == OTHER:
        raise GraphError("minimization is defined for trees and unicyclic graphs")
    current = g
    while True:
        for cand in _smaller_candidates(current):
            shape = detect_shape(cand)
            if shape.kind != want.kind or shape.cycle_len != want.cycle_len:
                continue
            if _disagrees(cand, classify_fn):
                current = cand
                break
        else:
            return current
