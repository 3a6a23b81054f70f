import json

import pytest

from rpq_lab.cli.main import EXIT_CAP, EXIT_INPUT, EXIT_OK, main

from .strategies import LOOP_GRAPH, SH_EXT_GRAPH


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.splitlines()


def test_eval_prints_walks_and_count(capsys, graph_file):
    code, out = run(capsys, "eval", "--graph", graph_file(SH_EXT_GRAPH), "--query", "a a + b",
                    "--semantics", "shortest")
    assert code == EXIT_OK
    assert out == ["v1 -e3-> v3", "COUNT 1"]


def test_eval_accepts_short_names_and_endpoints(capsys, graph_file):
    code, out = run(capsys, "eval", "--graph", graph_file(SH_EXT_GRAPH), "--query", "a + b",
                    "--semantics", "Tr", "--source", "v2")
    assert code == EXIT_OK
    assert out == ["v2 -e2-> v3", "COUNT 1"]


def test_eval_stream_is_depth_first(capsys, graph_file):
    code, out = run(capsys, "eval", "--graph", graph_file(SH_EXT_GRAPH), "--query", "a a + b",
                    "--semantics", "trail", "--source", "v1", "--stream")
    assert code == EXIT_OK
    assert out == ["v1 -e1-> v2 -e2-> v3", "v1 -e3-> v3", "COUNT 2"]


def test_eval_cheapest_with_cost_file(capsys, graph_file):
    costs = graph_file("# label cost\na 1\nb 5\n", name="costs.txt")
    code, out = run(capsys, "eval", "--graph", graph_file(SH_EXT_GRAPH), "--query", "a a + b",
                    "--semantics", "cheapest", "--costs", costs)
    assert code == EXIT_OK
    assert out == ["v1 -e1-> v2 -e2-> v3", "COUNT 1"]


@pytest.mark.parametrize(
    "extra",
    [
        ["--semantics", "longest"],
        ["--semantics", "trail", "--costs", "missing.txt"],
        ["--semantics", "shortest", "--default-cost", "2"],
        ["--semantics", "cheapest", "--stream"],
        ["--semantics", "trail", "--source", "v9"],
    ],
)
def test_eval_input_errors(capsys, graph_file, extra):
    code, _ = run(capsys, "eval", "--graph", graph_file(SH_EXT_GRAPH), "--query", "a a + b", *extra)
    assert code == EXIT_INPUT


def test_bad_graph_and_query(capsys, graph_file):
    bad = graph_file("V v\nE e v w a\n")
    assert run(capsys, "eval", "--graph", bad, "--query", "a", "--semantics", "trail")[0] == EXIT_INPUT
    good = graph_file(LOOP_GRAPH)
    assert run(capsys, "eval", "--graph", good, "--query", "a +", "--semantics", "trail")[0] == EXIT_INPUT


def test_undecodable_files(capsys, tmp_path, graph_file):
    bad = tmp_path / "latin.txt"
    bad.write_bytes(b"V v1 \xff\xfe\n")
    assert run(capsys, "eval", "--graph", str(bad), "--query", "a", "--semantics", "trail")[0] == EXIT_INPUT
    assert run(capsys, "eval", "--graph", graph_file(SH_EXT_GRAPH), "--query", "a", "--semantics", "cheapest",
               "--costs", str(bad))[0] == EXIT_INPUT


def test_cap_exit_code(capsys, graph_file):
    path = graph_file(LOOP_GRAPH)
    assert run(capsys, "eval", "--graph", path, "--query", "a*", "--semantics", "trail", "--cap", "1")[0] == EXIT_CAP
    assert run(capsys, "eval", "--graph", path, "--query", "a*", "--semantics", "trail", "--cap", "1",
               "--stream")[0] == EXIT_CAP


def test_oracle_listing(capsys, graph_file):
    code, out = run(capsys, "oracle", "--graph", graph_file(LOOP_GRAPH), "--query", "a*", "--max-len", "2")
    assert code == EXIT_OK
    assert out == ["v", "v -e-> v", "v -e-> v -e-> v", "COUNT 3"]


def test_oracle_by_definition(capsys, graph_file):
    code, out = run(capsys, "oracle", "--graph", graph_file(SH_EXT_GRAPH), "--query", "a a + b",
                    "--semantics", "shortest")
    assert code == EXIT_OK
    assert out == ["v1 -e3-> v3", "COUNT 1"]


def test_oracle_needs_a_mode(capsys, graph_file):
    assert run(capsys, "oracle", "--graph", graph_file(LOOP_GRAPH), "--query", "a*")[0] == EXIT_INPUT


def test_check_single_entry(capsys, tmp_path):
    output = tmp_path / "reports" / "matrix.json"
    code, out = run(capsys, "check", "--trials", "2", "--property", "monotony", "--only", "shortest",
                    "--output", str(output))
    assert code == EXIT_OK
    assert "PROP monotony Sh counterexample 1" in out
    saved = json.loads(output.read_text(encoding="utf-8"))
    assert saved["rows"][0]["witness"] == "FIX-SH"
