"""``dist3`` command line.

Subcommands::

    dist3 dk               --input G.txt --k 3 --format dot
    dist3 classify         --gen fixtures --id G2
    dist3 verify-corollary --jobs 4
    dist3 corpus           --gen unicyclic --n 60 --count 100000 --seed 7

Exit codes: 0 ok, 1 usage error, 2 parse error, 3 disagreement found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from .classifier import classify, verify_certificate
from .corollary import verify_corollary
from .corpus import GENERATORS, CorpusSpec, random_instance, run_corpus
from .distance import d3_connected, distance_graph
from .fixtures import fixture
from .generators import MAX_GRAPH_N, random_tree, random_unicyclic
from .graph import Graph, GraphError
from .io import FORMATS, SCHEMA_VERSION, ParseError, parse_graph, write_graph
from .structure import detect_shape

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[str] = None
    gen: Optional[str] = None
    fixture_id: Optional[str] = None
    k: int = 3
    seed: int = 0
    count: int = 0
    n: Optional[int] = None
    cycle_len: Optional[int] = None
    format: str = "edgelist"
    jobs: int = 1
    exhaustive: bool = False
    disagreements_only: bool = False


def _default_jobs() -> int:
    raw = os.environ.get("DIST3_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"DIST3_JOBS must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: $DIST3_JOBS or 1)")

    source = _Parser(add_help=False)
    src = source.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="graph file ('-' for stdin)")
    src.add_argument("--gen", choices=GENERATORS)
    source.add_argument("--id", dest="fixture_id", help="fixture id for --gen fixtures")
    source.add_argument("--n", type=int)
    source.add_argument("--cycle-len", type=int)
    source.add_argument("--seed", type=int, default=0)

    p = _Parser(prog="dist3", description="k-distance graphs and D_3 connectivity")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    dk = sub.add_parser("dk", parents=[source], help="emit D_k(G)")
    dk.add_argument("--k", type=int, default=3)
    dk.add_argument("--format", choices=FORMATS, default="edgelist")

    sub.add_parser("classify", parents=[source], help="structural verdict as JSON")

    cor = sub.add_parser("verify-corollary", parents=[common],
                         help="exhaustive check over all graphs on <= 7 vertices")
    cor.add_argument("--n", type=int, default=MAX_GRAPH_N, help="largest order (default 7)")

    corpus = sub.add_parser("corpus", parents=[source, common], help="classifier vs oracle")
    corpus.add_argument("--count", type=int, default=1000)
    corpus.add_argument("--exhaustive", action="store_true",
                        help="every labeled instance of order <= --n")
    corpus.add_argument("--disagreements-only", action="store_true",
                        help="suppress agreeing records")
    return p


def parse_config(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(list(argv))
    cfg = RunConfig(
        command=ns.command,
        input=getattr(ns, "input", None),
        gen=getattr(ns, "gen", None),
        fixture_id=getattr(ns, "fixture_id", None),
        k=getattr(ns, "k", 3),
        seed=getattr(ns, "seed", 0),
        count=getattr(ns, "count", 0),
        n=getattr(ns, "n", None),
        cycle_len=getattr(ns, "cycle_len", None),
        format=getattr(ns, "format", "edgelist"),
        jobs=ns.jobs if getattr(ns, "jobs", None) is not None else _default_jobs(),
        exhaustive=getattr(ns, "exhaustive", False),
        disagreements_only=getattr(ns, "disagreements_only", False),
    )
    if cfg.k < 1:
        raise UsageError("--k must be >= 1")
    if cfg.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if cfg.command in ("dk", "classify", "corpus") and (cfg.input is None) == (cfg.gen is None):
        raise UsageError("give exactly one of --input or --gen")
    if cfg.command == "corpus" and cfg.input is not None:
        raise UsageError("corpus needs --gen")
    return cfg


def load_graph(cfg: RunConfig, stdin: TextIO) -> Graph:
    """The single graph named by ``--input`` or a ``--gen`` spec."""
    if cfg.input is not None:
        try:
            if cfg.input == "-":
                text = stdin.read()
            else:
                with open(cfg.input, encoding="utf-8") as fh:
                    text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.input}: {exc}") from None
        return parse_graph(text)
    if cfg.gen == "fixtures":
        if not cfg.fixture_id:
            raise UsageError("--gen fixtures needs --id")
        try:
            return fixture(cfg.fixture_id).graph
        except KeyError:
            raise UsageError(f"unknown fixture {cfg.fixture_id!r}") from None
    if cfg.n is None:
        raise UsageError(f"--gen {cfg.gen} needs --n")
    try:
        if cfg.gen == "tree":
            return random_tree(cfg.n, cfg.seed)
        if cfg.gen == "unicyclic":
            return random_unicyclic(cfg.n, cfg.cycle_len or min(cfg.n, 3 + cfg.seed % 13), cfg.seed)
        return random_instance(CorpusSpec(cfg.gen, cfg.n, 1, cfg.seed), 0)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def cmd_dk(cfg: RunConfig, stdin: TextIO, out: TextIO) -> int:
    g = load_graph(cfg, stdin)
    out.write(write_graph(distance_graph(g, cfg.k), cfg.format))
    return EXIT_OK


def cmd_classify(cfg: RunConfig, stdin: TextIO, out: TextIO) -> int:
    g = load_graph(cfg, stdin)
    verdict = classify(g)
    shape = detect_shape(g)
    truth = d3_connected(g)
    agree = truth == verdict.connected and verify_certificate(g, verdict.certificate)
    record = {
        "n": g.n,
        "m": g.m,
        "shape": shape.kind,
        "cycle_len": shape.cycle_len,
        "connected": verdict.connected,
        "case_tag": verdict.case_tag,
        "certificate": verdict.certificate.to_json(),
        "oracle_checked": True,
        "oracle_connected": truth,
        "schema_version": SCHEMA_VERSION,
    }
    out.write(json.dumps(record, sort_keys=True) + "\n")
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_verify_corollary(cfg: RunConfig, out: TextIO) -> int:
    n = cfg.n if cfg.n is not None else MAX_GRAPH_N
    if not 1 <= n <= MAX_GRAPH_N:
        raise UsageError(f"--n must lie in 1..{MAX_GRAPH_N}")
    rows = verify_corollary(n, jobs=cfg.jobs)
    for row in rows:
        out.write(json.dumps({**row.to_json(), "schema_version": SCHEMA_VERSION},
                             sort_keys=True) + "\n")
    ok = all(r.ok for r in rows)
    out.write(json.dumps({"kind": "summary", "max_n": n, "ok": ok,
                          "schema_version": SCHEMA_VERSION}, sort_keys=True) + "\n")
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_corpus(cfg: RunConfig, out: TextIO) -> int:
    if cfg.gen != "fixtures" and cfg.n is None:
        raise UsageError(f"--gen {cfg.gen} needs --n")
    spec = CorpusSpec(cfg.gen, cfg.n or 0, cfg.count, cfg.seed, cfg.cycle_len, cfg.exhaustive)
    try:
        spec.validate()
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    last = ""
    for line in run_corpus(spec, jobs=cfg.jobs, keep_agreeing=not cfg.disagreements_only):
        out.write(line + "\n")
        last = line
    return EXIT_OK if json.loads(last)["disagreements"] == 0 else EXIT_DISAGREE


def main(argv: Optional[Sequence[str]] = None, stdin: TextIO = None, out: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    out = out or sys.stdout
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        if cfg.command == "dk":
            return cmd_dk(cfg, stdin, out)
        if cfg.command == "classify":
            return cmd_classify(cfg, stdin, out)
        if cfg.command == "verify-corollary":
            return cmd_verify_corollary(cfg, out)
        return cmd_corpus(cfg, out)
    except UsageError as exc:
        print(f"dist3: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"dist3: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphError as exc:
        # well-formed text describing an invalid graph (e.g. disconnected)
        print(f"dist3: invalid input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
