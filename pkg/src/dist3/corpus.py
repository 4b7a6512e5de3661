"""Classifier-vs-oracle agreement runs over generated or enumerated corpora.

Work is cut into tasks over disjoint instance ranges. Each task returns its
records already serialized; tasks are consumed in submission order, so the
output is byte-identical for any worker count.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .fixtures import fixtures
from .generators import (
    MAX_GRAPH_N,
    MAX_TREE_N,
    enumerate_labeled_graphs,
    enumerate_labeled_trees,
    enumerate_unicyclic,
    graph_count,
    random_tree,
    random_unicyclic,
    tree_count,
)
from .graph import Graph, GraphError, is_connected
from .oracle import SCHEMA_VERSION, cross_check, minimize_counterexample
from .structure import OTHER

GENERATORS = ("tree", "unicyclic", "all-graphs", "fixtures")
STRATA = range(3, 16)
CHUNK = 4096


@dataclass(frozen=True)
class CorpusSpec:
    gen: str
    n: int
    count: int = 0
    seed: int = 0
    cycle_len: Optional[int] = None
    exhaustive: bool = False

    def validate(self) -> None:
        if self.gen not in GENERATORS:
            raise GraphError(f"unknown generator {self.gen!r}")
        if self.gen == "fixtures":
            return
        cap = {"tree": MAX_TREE_N, "unicyclic": MAX_TREE_N, "all-graphs": MAX_GRAPH_N}[self.gen]
        low = 3 if self.gen == "unicyclic" else 1
        if self.exhaustive and not low <= self.n <= cap:
            raise GraphError(f"exhaustive {self.gen} needs {low} <= n <= {cap}")
        if not self.exhaustive:
            if self.count < 0:
                raise GraphError("count must be non-negative")
            if self.n < max(low, 2 if self.gen == "tree" else 1):
                raise GraphError(f"n={self.n} too small for {self.gen}")
            if self.cycle_len is not None and not 3 <= self.cycle_len <= self.n:
                raise GraphError("need 3 <= cycle_len <= n")


def random_instance(spec: CorpusSpec, i: int) -> Graph:
    """Instance ``i`` of a random corpus; depends only on (gen, seed, i, n)."""
    rng = random.Random(f"{spec.gen}:{spec.seed}:{i}")
    if spec.gen == "tree":
        return random_tree(rng.randint(2, spec.n), rng.getrandbits(64))
    if spec.gen == "unicyclic":
        c = spec.cycle_len or STRATA[i % len(STRATA)]
        if c > spec.n:
            c = 3 + i % (spec.n - 2)
        # half the draws stay close to the cycle, where the case analysis lives
        top = spec.n if rng.random() < 0.5 else min(spec.n, c + 10)
        return random_unicyclic(rng.randint(c, top), c, rng.getrandbits(64))
    n = rng.randint(1, spec.n)
    base = random_tree(n, rng.getrandbits(64)).edges if n > 1 else ()
    extra = [tuple(rng.sample(range(n), 2)) for _ in range(rng.randint(0, n))] if n > 1 else []
    return Graph(n, list(base) + extra)


def _tasks(spec: CorpusSpec) -> list[tuple]:
    if spec.gen == "fixtures":
        return [("fixtures",)]
    if not spec.exhaustive:
        return [("random", lo, min(lo + CHUNK, spec.count)) for lo in range(0, spec.count, CHUNK)]
    out = []
    if spec.gen == "all-graphs":
        for order in range(1, spec.n + 1):
            total = graph_count(order)
            out += [("graphs", order, lo, min(lo + CHUNK * 4, total))
                    for lo in range(0, total, CHUNK * 4)]
        return out
    first = 3 if spec.gen == "unicyclic" else 1
    step = CHUNK if spec.gen == "tree" else CHUNK // 16
    for order in range(first, spec.n + 1):
        total = tree_count(order)
        out += [(spec.gen, order, lo, min(lo + step, total)) for lo in range(0, total, step)]
    return out


def _instances(spec: CorpusSpec, task: tuple) -> Iterator[tuple[str, Graph, Optional[bool]]]:
    kind = task[0]
    if kind == "fixtures":
        for fx in fixtures():
            yield fx.id, fx.graph, fx.expected_d3_connected
    elif kind == "random":
        for i in range(task[1], task[2]):
            yield f"{spec.gen}:{spec.seed}:{i}", random_instance(spec, i), None
    elif kind == "graphs":
        _, order, lo, hi = task
        for i, g in enumerate(enumerate_labeled_graphs(order, False, lo, hi), lo):
            if is_connected(g):
                yield f"all-graphs:n={order}:{i}", g, None
    elif kind == "tree":
        _, order, lo, hi = task
        for i, g in enumerate(enumerate_labeled_trees(order, lo, hi), lo):
            yield f"tree:n={order}:{i}", g, None
    else:
        _, order, lo, hi = task
        for g in enumerate_unicyclic(order, lo, hi):
            yield f"unicyclic:n={order}:" + ",".join(f"{u}-{v}" for u, v in g.edges), g, None


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def run_task(spec: CorpusSpec, task: tuple, keep_agreeing: bool = True) -> tuple[list[str], Counter, Counter, int]:
    """Cross-check one task; returns (record lines, case-tag tally,
    cycle-length tally, disagreements)."""
    lines: list[str] = []
    tags: Counter = Counter()
    cycles: Counter = Counter()
    bad = 0
    for iid, g, expected in _instances(spec, task):
        rec = cross_check(g, iid)
        out = rec.to_json()
        agree = rec.agree
        if expected is not None:
            out["expected_d3_connected"] = expected
            agree = agree and expected == rec.oracle_connected
            out["agree"] = agree
        tags[rec.case_tag] += 1
        if rec.cycle_len is not None:
            cycles[str(rec.cycle_len)] += 1
        if not agree:
            bad += 1
            if rec.shape != OTHER and not rec.agree:
                small = minimize_counterexample(g)
                out["counterexample"] = {"n": small.n, "edges": [list(e) for e in small.edges]}
        if keep_agreeing or not agree:
            lines.append(_dump(out))
    return lines, tags, cycles, bad


def _run_args(args: tuple) -> tuple[list[str], Counter, Counter, int]:
    return run_task(*args)


def run_corpus(spec: CorpusSpec, jobs: int = 1, keep_agreeing: bool = True) -> Iterator[str]:
    """Yield record lines in instance order, then one summary line."""
    spec.validate()
    work = [(spec, t, keep_agreeing) for t in _tasks(spec)]
    tags: Counter = Counter()
    cycles: Counter = Counter()
    total = bad = 0
    if jobs > 1:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_run_args, work)
    else:
        pool = None
        results = map(_run_args, work)
    try:
        for lines, part, cyc, nbad in results:
            yield from lines
            tags.update(part)
            cycles.update(cyc)
            total += sum(part.values())
            bad += nbad
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    yield _dump({
        "kind": "summary",
        "generator": spec.gen,
        "exhaustive": spec.exhaustive,
        "seed": spec.seed,
        "total": total,
        "disagreements": bad,
        "by_case_tag": dict(sorted(tags.items())),
        "by_cycle_len": dict(sorted(cycles.items(), key=lambda kv: int(kv[0]))),
        "schema_version": SCHEMA_VERSION,
    })
