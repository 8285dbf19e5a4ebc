from __future__ import annotations

import json

import pytest

from msquared.cli import main, parse_target


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def strip_time(d):
    d = dict(d)
    d.pop("timestamp", None)
    return d


def test_exact_and_interval_exit_codes(capsys):
    assert run(capsys, "cs", "complete:3")[0] == 0
    code, out, _ = run(capsys, "ms", "cycle:5")
    assert code == 2 and "interval" in out


def test_json_reproducible(capsys):
    a = json.loads(run(capsys, "ms", "petersen", "--json", "--seed", "4")[1])
    b = json.loads(run(capsys, "ms", "petersen", "--json", "--seed", "4")[1])
    assert strip_time(a) == strip_time(b)
    assert a["report"]["lo"] == 4


def test_targets():
    assert parse_target("squares:4").ideal.n == 4
    t = parse_target("join(path:3,complement(cycle:5))")
    assert t.graph.n == 8
    assert parse_target("union(complete:2,complete:3)").graph.num_edges == 4


def test_file_targets(tmp_path, capsys):
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3]]}))
    assert run(capsys, "cs", f"file:{g}")[0] == 0
    ideal = tmp_path / "i.json"
    ideal.write_text(json.dumps({"n": 2, "quadrics": [[[1, 1, 1]]]}))
    code, out, _ = run(capsys, "ms", f"file:{ideal}", "--json")
    assert json.loads(out)["report"]["n"] == 2


def test_errors(capsys):
    assert run(capsys, "ms", "bogus:3")[0] == 1
    assert run(capsys, "ms", "cycle:5", "--prime", "9")[0] == 1
    assert run(capsys, "ms", "cycle:5", "--prime", "2")[0] == 1
    assert run(capsys, "ms", "file:/nonexistent.json")[0] == 1


def test_search_jsonl(tmp_path, capsys):
    out = tmp_path / "hits.jsonl"
    code, text, _ = run(capsys, "search", "ms", "cycle:5", "--level", "3", "--budget", "20",
                        "--out", str(out))
    assert code == 0
    lines = [json.loads(x) for x in text.strip().splitlines()]
    summary = lines[-1]
    assert summary["type"] == "summary" and summary["hits"] == 20
    assert len(out.read_text().splitlines()) == 21
    null = json.loads(run(capsys, "search", "ms", "cycle:8", "--level", "4", "--budget", "40")[1]
                      .strip().splitlines()[-1])
    assert null["hits"] == 0 and null["trials"] == 40


def test_search_resume_matches_single_run(capsys):
    def hits(*extra):
        text = run(capsys, "search", "ms", "cycle:6", "--level", "3", *extra)[1]
        return [json.loads(x) for x in text.strip().splitlines()[:-1]]

    whole = hits("--budget", "40")
    parts = hits("--budget", "20") + hits("--budget", "20", "--offset", "20")
    assert [h["witness"] for h in whole] == [h["witness"] for h in parts]


def test_other_commands(capsys):
    v = json.loads(run(capsys, "veronese", "10")[1])
    assert v["exact"] == 7
    w = json.loads(run(capsys, "wlp", "squares:4", "--json")[1])
    assert w["value"] == 2 and w["all_wlp"]
    g = json.loads(run(capsys, "graph", "petersen")[1])
    assert g["alpha"] == 4 and g["diameter"] == 2
    c = json.loads(run(capsys, "construct", "triangular", "3")[1])
    assert c["n"] == 6 and len(c["forms"]) == 3


def test_verify_single_row(capsys):
    code, out, _ = run(capsys, "verify", "--rows", "1", "--quick")
    assert code == 0 and out.startswith("[PASS] row  1")
