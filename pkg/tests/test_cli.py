import json

import pytest

from weakschur import parse_partition
from weakschur.cli import main

from conftest import BASE_TEXT


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bound_prints_value(capsys):
    code, out, _ = run(capsys, "bound", "--s", "6")
    assert code == 0
    assert out == "554\n"


def test_bound_json(capsys):
    code, out, _ = run(capsys, "bound", "--s", "4", "--json")
    assert code == 0
    assert json.loads(out) == {"s": 4, "order": 62, "source": "construction"}


def test_bound_usage_error(capsys):
    code, _, err = run(capsys, "bound", "--s", "2")
    assert code == 2
    assert "error:" in err


def test_generate_then_verify(tmp_path, capsys):
    out_file = tmp_path / "p7.wsp"
    code, _, _ = run(capsys, "generate", "--s", "7", "--out", str(out_file), "--quiet")
    assert code == 0
    with open(out_file, encoding="ascii") as fh:
        assert parse_partition(fh).n == 1661
    code, _, _ = run(capsys, "verify", str(out_file))
    assert code == 0


@pytest.mark.parametrize("k", [4, 5, 6])
def test_generate_verify_loop(tmp_path, capsys, k):
    out_file = tmp_path / f"p{k}.wsp"
    assert run(capsys, "generate", "--s", str(k), "--out", str(out_file), "--quiet")[0] == 0
    assert run(capsys, "verify", str(out_file))[0] == 0


def test_generate_verify_loop_deep(tmp_path, capsys):
    # top of the supported end-to-end range: order 403502
    out_file = tmp_path / "p12.wsp"
    assert run(capsys, "generate", "--s", "12", "--out", str(out_file), "--quiet")[0] == 0
    assert run(capsys, "verify", str(out_file))[0] == 0


def test_generate_to_stdout(capsys):
    code, out, _ = run(capsys, "generate", "--s", "3", "--quiet")
    assert code == 0
    assert out == BASE_TEXT


def test_generate_rejects_target_below_seed(capsys):
    code, _, err = run(capsys, "generate", "--s", "2")
    assert code == 2
    assert "below the seed" in err


def test_generate_with_seed_file(tmp_path, capsys):
    seed = tmp_path / "seed.wsp"
    seed.write_text(BASE_TEXT, encoding="ascii")
    code, out, _ = run(capsys, "generate", "--s", "4", "--seed", str(seed), "--quiet")
    assert code == 0
    assert parse_partition(out).n == 62


def test_generate_rejects_unusable_seed(tmp_path, capsys):
    seed = tmp_path / "bad.wsp"
    seed.write_text("wsp 1\ns=2 n=3\n1: 1 2\n2: 3\n", encoding="ascii")
    code, _, err = run(capsys, "generate", "--s", "3", "--seed", str(seed))
    assert code == 1
    assert "cannot extend" in err


def test_generate_trace_json(capsys):
    code, out, _ = run(capsys, "generate", "--s", "5", "--trace", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 185
    assert doc["orders"] == [62, 185]
    assert doc["trace"][0]["injected"] == [23, 44]
    assert doc["trace"][1]["input_order"] == 62
    assert parse_partition(doc["partition"]).n == 185


def test_verify_reports_violations(tmp_path, capsys):
    bad = tmp_path / "bad.wsp"
    bad.write_text("wsp 1\ns=2 n=5\n1: 1 2 3\n2: 4 5\n", encoding="ascii")
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1
    assert "1 + 2 = 3" in out


def test_verify_garbage_exits_two(tmp_path, capsys):
    garbage = tmp_path / "garbage.txt"
    garbage.write_text("this is not a partition\n", encoding="ascii")
    code, _, err = run(capsys, "verify", str(garbage))
    assert code == 2
    assert "line 1" in err


def test_verify_missing_file(capsys):
    code, _, err = run(capsys, "verify", "/nonexistent/p.wsp")
    assert code == 2
    assert "error:" in err


def test_verify_json_schema(tmp_path, capsys):
    f = tmp_path / "base.wsp"
    f.write_text(BASE_TEXT, encoding="ascii")
    code, out, _ = run(capsys, "verify", str(f), "--json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"violations", "checked_conditions"}
    assert doc["violations"] == []
    assert "weak-sum-free" in doc["checked_conditions"]


def test_verify_condition_selection(tmp_path, capsys):
    # violates condition 2 only; checking condition 1 alone stays green
    f = tmp_path / "doubles.wsp"
    f.write_text("wsp 1\ns=2 n=10\n1: 5 10\n2: 1 2 3 4 6 7 8 9\n", encoding="ascii")
    assert run(capsys, "verify", str(f), "--conditions", "1")[0] == 1  # 1+2=3 in subset 2
    f2 = tmp_path / "doubles2.wsp"
    f2.write_text("wsp 1\ns=3 n=10\n1: 5 7 10\n2: 1 2 6 9\n3: 3 4 8\n", encoding="ascii")
    assert run(capsys, "verify", str(f2), "--conditions", "1")[0] == 0
    assert run(capsys, "verify", str(f2), "--conditions", "1,2")[0] == 1


def test_verify_first_only(tmp_path, capsys):
    f = tmp_path / "bad.wsp"
    f.write_text("wsp 1\ns=1 n=4\n1: 1 2 3 4\n", encoding="ascii")
    code, out, _ = run(capsys, "verify", str(f), "--first-only", "--json")
    assert code == 1
    assert len(json.loads(out)["violations"]) == 1


def test_table_contains_literature_rows(capsys):
    code, out, _ = run(capsys, "table", "--max-s", "7")
    assert code == 0
    assert "554" in out and "1661" in out
    assert "642" in out and "2146" in out
    assert "572" in out and "536" in out and "1680" in out


def test_table_markdown(capsys):
    code, out, _ = run(capsys, "table", "--max-s", "4", "--markdown")
    assert code == 0
    assert out.splitlines()[0].startswith("| s |")
    assert "| 4 | 62 |" in out


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--max-s", "6", "--json")
    assert code == 0
    doc = json.loads(out)
    row6 = doc["rows"][-1]
    assert row6["s"] == 6 and row6["order"] == 554
    assert {"order": 642, "kind": "weak"} in row6["literature"]


def test_search_ws_json(capsys):
    code, out, _ = run(capsys, "search", "ws", "--s", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["best_n"] == 8
    assert doc["mode"] == "exact"
    assert doc["source"] == "search"
    assert parse_partition(doc["witness"]).n == 8


def test_search_ws_writes_witness(tmp_path, capsys):
    out_file = tmp_path / "ws2.wsp"
    code, out, _ = run(capsys, "search", "ws", "--s", "2", "--out", str(out_file), "--quiet")
    assert code == 0
    assert "best_n=8" in out
    with open(out_file, encoding="ascii") as fh:
        assert parse_partition(fh).n == 8


def test_search_ws_budget_exit(capsys):
    code, out, _ = run(capsys, "search", "ws", "--s", "3", "--budget", "10", "--json")
    assert code == 3
    assert json.loads(out)["mode"] == "capped"


def test_search_seeds(tmp_path, capsys):
    out_dir = tmp_path / "seeds"
    code, out, _ = run(
        capsys, "search", "seeds", "--s", "3", "--n", "21",
        "--limit", "5", "--out-dir", str(out_dir), "--quiet",
    )
    assert code == 0
    assert "found 2 seed(s)" in out
    files = sorted(out_dir.glob("*.wsp"))
    assert len(files) == 2
    for f in files:
        with open(f, encoding="ascii") as fh:
            assert parse_partition(fh).n == 21


def test_search_seeds_none_found(capsys):
    code, out, _ = run(capsys, "search", "seeds", "--s", "3", "--n", "23", "--json")
    assert code == 1
    assert json.loads(out)["found"] == 0


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert "weakschur" in out and "wsp format 1" in out


def test_usage_error_unknown_command(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_threads_flag_validation(capsys):
    assert run(capsys, "bound", "--s", "3", "--threads", "0")[0] == 2
    assert run(capsys, "bound", "--s", "3", "--threads", "auto")[0] == 0
    assert run(capsys, "bound", "--s", "3", "--threads", "4")[0] == 0


def test_byte_identical_reruns(capsys):
    outputs = set()
    for _ in range(2):
        code, out, _ = run(capsys, "generate", "--s", "6", "--threads", "1", "--quiet")
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1
    outputs = set()
    for _ in range(2):
        code, out, _ = run(capsys, "search", "ws", "--s", "2", "--json", "--threads", "1")
        outputs.add(out)
    assert len(outputs) == 1
