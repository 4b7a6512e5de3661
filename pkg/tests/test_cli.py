import io
import json

import pytest

from dist3.cli import EXIT_DISAGREE, EXIT_OK, EXIT_PARSE, EXIT_USAGE, main, parse_config
from dist3.graph import Graph
from dist3.io import ParseError, parse_edgelist, parse_graph, write_dot, write_edgelist, write_graph, write_json
from dist3.structure import build_template

from conftest import cycle


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), out=out)
    return code, out.getvalue()


edgelist = write_edgelist


def test_edgelist_format():
    assert write_edgelist(Graph(3, [(2, 1), (0, 1)])) == "3 2\n0 1\n1 2\n"
    assert write_edgelist(Graph(4)) == "4 0\n"


def test_edgelist_parse_with_comments():
    text = "# a triangle\n3 3  # header\n\n0 1\n2 1\n# tail\n0 2\n"
    assert parse_edgelist(text) == cycle(3)


@pytest.mark.parametrize("text", [
    "", "3\n", "3 1\n", "3 1\n0 1\n1 2\n", "3 1\n0 x\n", "3 1\n0 1 2\n",
    "3 1\n0 3\n", "3 1\n1 1\n", "3 2\n0 1\n1 0\n", "-1 0\n", "{\"n\": 2}",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_round_trips():
    g = build_template("G3").graph
    text = write_edgelist(g)
    assert write_edgelist(parse_edgelist(text)) == text
    assert parse_graph(write_json(g)) == g
    assert json.loads(write_json(g))["schema_version"] == 1


def test_dot():
    assert write_dot(Graph(3, [(0, 1)])) == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n}\n"
    with pytest.raises(ValueError):
        write_graph(cycle(3), "png")


def test_dk_c7(tmp_path):
    p = tmp_path / "c7.txt"
    p.write_text(edgelist(cycle(7)))
    code, out = run(["dk", "--input", str(p)])
    lines = out.splitlines()
    assert code == EXIT_OK and lines[0] == "7 7" and len(lines[1:]) == 7
    pairs = {tuple(map(int, ln.split())) for ln in lines[1:]}
    assert pairs == {tuple(sorted((i, (i + 3) % 7))) for i in range(7)}


def test_dk_k1_echoes_canonical():
    code, out = run(["dk", "--input", "-", "--k", "1"], "4 3\n3 2\n1 0\n2 1\n")
    assert code == EXIT_OK and out == "4 3\n0 1\n1 2\n2 3\n"


def test_dk_c5_empty():
    code, out = run(["dk", "--input", "-"], edgelist(cycle(5)))
    assert (code, out) == (EXIT_OK, "5 0\n")


def test_dk_formats():
    code, out = run(["dk", "--input", "-", "--format", "dot"], edgelist(cycle(6)))
    assert code == EXIT_OK and "0 -- 3;" in out
    code, out = run(["dk", "--input", "-", "--format", "json"], edgelist(cycle(6)))
    assert json.loads(out)["edges"] == [[0, 3], [1, 4], [2, 5]]


def _classify(g):
    code, out = run(["classify", "--input", "-"], edgelist(g))
    return code, json.loads(out)


def test_classify_examples():
    code, rec = _classify(cycle(6))
    assert code == EXIT_OK and (rec["connected"], rec["case_tag"]) == (False, "T2.9")
    assert set(rec) >= {"n", "m", "shape", "cycle_len", "connected", "case_tag",
                        "certificate", "oracle_checked", "schema_version"}
    _, rec = _classify(build_template("H", 4).graph)
    assert (rec["connected"], rec["case_tag"], rec["cycle_len"]) == (True, "T2.7", None)
    _, rec = _classify(cycle(5))
    assert (rec["connected"], rec["case_tag"]) == (False, "T2.13:C5")
    assert rec["oracle_checked"] is True


def test_classify_generated_and_fixture():
    code, out = run(["classify", "--gen", "fixtures", "--id", "G2"])
    assert code == EXIT_OK and json.loads(out)["case_tag"] == "T2.15:G2"
    code, out = run(["classify", "--gen", "unicyclic", "--n", "12", "--cycle-len", "4", "--seed", "3"])
    rec = json.loads(out)
    assert code == EXIT_OK and rec["n"] == 12 and rec["cycle_len"] == 4
    code, out = run(["classify", "--gen", "tree", "--n", "9", "--seed", "3"])
    assert json.loads(out)["shape"] == "tree"


def test_classify_other_falls_back():
    k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    code, rec = _classify(k4)
    assert code == EXIT_OK and rec["case_tag"] == "ORACLE_FALLBACK" and rec["shape"] == "other"


@pytest.mark.parametrize("argv,stdin,code", [
    (["classify", "--input", "-"], "4 2\n0 1\n2 3\n", EXIT_PARSE),
    (["dk", "--input", "-"], "3 1\n0 5\n", EXIT_PARSE),
    (["dk", "--input", "-"], "oops\n", EXIT_PARSE),
    (["dk", "--input", "-", "--k", "0"], "2 1\n0 1\n", EXIT_USAGE),
    (["dk"], "", EXIT_USAGE),
    (["dk", "--input", "-", "--gen", "tree"], "", EXIT_USAGE),
    (["dk", "--input", "/no/such/file"], "", EXIT_USAGE),
    (["frobnicate"], "", EXIT_USAGE),
    (["classify", "--gen", "fixtures"], "", EXIT_USAGE),
    (["classify", "--gen", "fixtures", "--id", "nope"], "", EXIT_USAGE),
    (["classify", "--gen", "tree"], "", EXIT_USAGE),
    (["classify", "--gen", "unicyclic", "--n", "5", "--cycle-len", "9"], "", EXIT_USAGE),
    (["corpus", "--input", "x"], "", EXIT_USAGE),
    (["corpus", "--gen", "tree", "--n", "12", "--exhaustive"], "", EXIT_USAGE),
    (["verify-corollary", "--n", "9"], "", EXIT_USAGE),
])
def test_exit_codes(argv, stdin, code):
    assert run(argv, stdin)[0] == code


def test_jobs_from_environment(monkeypatch):
    monkeypatch.setenv("DIST3_JOBS", "3")
    assert parse_config(["corpus", "--gen", "fixtures"]).jobs == 3
    assert parse_config(["corpus", "--gen", "fixtures", "--jobs", "2"]).jobs == 2
    monkeypatch.setenv("DIST3_JOBS", "many")
    assert run(["corpus", "--gen", "fixtures"])[0] == EXIT_USAGE


def test_verify_corollary_small():
    code, out = run(["verify-corollary", "--n", "5"])
    rows = [json.loads(x) for x in out.splitlines()]
    assert code == EXIT_OK and rows[-1]["ok"] and rows[4]["n"] == 5 and rows[4]["witnesses"] == 0
    assert all(r["schema_version"] == 1 for r in rows)


def test_corpus_fixtures():
    code, out = run(["corpus", "--gen", "fixtures"])
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == EXIT_OK and lines[-1]["disagreements"] == 0
    assert all(r["agree"] and r["expected_d3_connected"] for r in lines[:-1])


def test_corpus_deterministic_and_records():
    argv = ["corpus", "--gen", "unicyclic", "--n", "20", "--count", "300", "--seed", "9"]
    code, a = run(argv + ["--jobs", "1"])
    _, b = run(argv + ["--jobs", "2"])
    assert code == EXIT_OK and a == b
    recs = [json.loads(x) for x in a.splitlines()]
    assert len(recs) == 301 and recs[-1]["total"] == 300
    assert {r["cycle_len"] for r in recs[:-1]} == set(range(3, 16))
    assert all(r["schema_version"] == 1 for r in recs)


def test_corpus_exhaustive_trees():
    code, out = run(["corpus", "--gen", "tree", "--n", "6", "--exhaustive", "--disagreements-only"])
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 1
    assert json.loads(lines[0])["total"] == 1 + 1 + 3 + 16 + 125 + 1296


def test_corpus_all_graphs_random():
    code, out = run(["corpus", "--gen", "all-graphs", "--n", "9", "--count", "200", "--seed", "2"])
    summary = json.loads(out.splitlines()[-1])
    assert code == EXIT_OK and summary["total"] == 200 and "ORACLE_FALLBACK" in summary["by_case_tag"]


def test_corpus_disagreement_exit(monkeypatch):
    from functools import partial

    from dist3 import corpus
    from dist3.classifier import classify
    from dist3.oracle import cross_check, minimize_counterexample

    # the word-for-word 5-cycle reading genuinely disagrees with the oracle
    literal = partial(classify, certify=False, literal=True)
    monkeypatch.setattr(corpus, "cross_check", lambda g, iid: cross_check(g, iid, literal))
    monkeypatch.setattr(corpus, "minimize_counterexample",
                        lambda g: minimize_counterexample(g, literal))
    code, out = run(["corpus", "--gen", "unicyclic", "--n", "9", "--cycle-len", "5",
                     "--count", "4000", "--seed", "0", "--disagreements-only"])
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == EXIT_DISAGREE and lines[-1]["disagreements"] == len(lines) - 1 > 0
    assert all("counterexample" in r and not r["agree"] for r in lines[:-1])
