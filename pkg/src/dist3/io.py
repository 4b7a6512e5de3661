"""Graph serialization: edge-list text, DOT, JSON.

Edge-list format::

    # optional comments anywhere
    n m
    u v
    ...

Vertices are 0-based. Writing always emits the canonical edge order, so
read-then-write of a canonical file reproduces it byte for byte.
"""

from __future__ import annotations

import json

from .graph import Graph, GraphError

SCHEMA_VERSION = 1
FORMATS = ("edgelist", "dot", "json")


class ParseError(GraphError):
    """Malformed graph text."""


def _int(tok: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}") from None
    if value < 0:
        raise ParseError(f"line {lineno}: negative value {value}")
    return value


def parse_edgelist(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty input: missing 'n m' header")
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError(f"line {lineno}: header must be 'n m'")
    n, m = (_int(t, lineno) for t in head)
    if len(rows) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, toks in rows[1:]:
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: edge must be 'u v'")
        edges.append((_int(toks[0], lineno), _int(toks[1], lineno)))
    try:
        g = Graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    if g.m != m:
        raise ParseError(f"duplicate edges: {m} listed, {g.m} distinct")
    return g


def parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
        n, edges = data["n"], [tuple(e) for e in data["edges"]]
        return Graph(n, edges)
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON graph: {exc}") from None


def parse_graph(text: str) -> Graph:
    """Edge list, or JSON when the first non-blank character is ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_edgelist(text)


def write_edgelist(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n"] + [f"{u} {v}\n" for u, v in g.edges])


def write_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    return "\n".join(lines) + "\n}\n"


def graph_json(g: Graph) -> dict:
    return {"schema_version": SCHEMA_VERSION, "n": g.n, "m": g.m,
            "edges": [list(e) for e in g.edges]}


def write_json(g: Graph) -> str:
    return json.dumps(graph_json(g), sort_keys=True) + "\n"


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return write_edgelist(g)
    if fmt == "dot":
        return write_dot(g)
    if fmt == "json":
        return write_json(g)
    raise GraphError(f"unknown format {fmt!r}; choose from {FORMATS}")
