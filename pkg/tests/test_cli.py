"""Command-line interface: records, formats, cache, config, exit codes."""

import json

import pytest

from sumfree.cli import main

RECORD_FIELDS = {"schema_version", "op", "params", "result", "elapsed_ms", "version", "timestamp"}


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_count_table_single_row(capsys):
    code, out, _ = run(["count", "--n", "20", "--m", "7", "--format", "table"], capsys)
    assert code == 0
    lines = [line for line in out.splitlines() if line.strip()]
    assert len(lines) == 2  # header plus one row
    assert "735" in lines[1]


def test_partitions_record(capsys):
    code, out, _ = run(["partitions", "--k", "8", "--ell", "3"], capsys)
    assert code == 0
    rec = json.loads(out)
    assert set(rec) == RECORD_FIELDS
    assert rec["result"]["p_star"] == 2
    assert rec["op"] == "partitions"


def test_partitions_unrestricted(capsys):
    code, out, _ = run(["partitions", "--k", "10"], capsys)
    assert json.loads(out)["result"]["p"] == 42


def test_result_payload_deterministic(capsys):
    _, out1, _ = run(["count", "--n", "14"], capsys)
    _, out2, _ = run(["count", "--n", "14"], capsys)
    r1, r2 = json.loads(out1), json.loads(out2)
    assert r1["result"] == r2["result"]
    assert r1["params"] == r2["params"]


def test_invalid_usage_exits_2(capsys):
    code, _, _ = run(["count"], capsys)  # missing --n
    assert code == 2
    code, _, _ = run(["not-a-command"], capsys)
    assert code == 2


def test_budget_exit_3(capsys):
    code, _, err = run(
        ["restricted", "--k", "200", "--ell", "10", "--sumset-cap", "25", "--budget", "10"], capsys
    )
    assert code == 3
    assert "budget" in err


def test_cache_replay_byte_identical(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    args = ["count", "--n", "16", "--m", "5", "--cache", cache]
    _, first, _ = run(args, capsys)
    _, second, _ = run(args, capsys)
    assert first == second  # including timestamp and elapsed of the original run
    _, other, _ = run(["count", "--n", "16", "--m", "6", "--cache", cache], capsys)
    assert json.loads(other)["result"] != json.loads(first)["result"]


def test_config_file_defaults_and_flag_override(tmp_path, capsys):
    cfg = tmp_path / "sumfree.cfg"
    cfg.write_text("# comment\nformat = table\nthreads = 1\n")
    code, out, _ = run(["count", "--n", "10", "--config", str(cfg)], capsys)
    assert code == 0
    assert not out.lstrip().startswith("{")  # table, not a record
    code, out, _ = run(["count", "--n", "10", "--config", str(cfg), "--format", "records"], capsys)
    assert out.lstrip().startswith("{")  # flag wins


def test_sample_embeds_seed(capsys):
    code, out, _ = run(["sample", "--n", "12", "--m", "3", "--count", "40", "--seed", "77"], capsys)
    assert code == 0
    rec = json.loads(out)
    assert rec["params"]["seed"] == 77
    assert sum(rec["result"]["histogram"].values()) == 40


def test_enumerate_and_strata_and_window(capsys):
    code, out, _ = run(["enumerate", "--n", "4", "--m", "2"], capsys)
    rec = json.loads(out)
    assert rec["result"]["sets"] == [[1, 3], [1, 4], [2, 3], [3, 4]]
    code, out, _ = run(["strata", "--n", "10", "--m", "5"], capsys)
    rows = json.loads(out)["result"]
    assert {"ell": 0, "k": "0", "count": 1, "odd_only": 0} in rows
    code, out, _ = run(["window", "--n", "10", "--a", "0", "--m", "3"], capsys)
    assert json.loads(out)["result"]["count"] == 16


def test_sumset_freiman_bset_janson(capsys):
    _, out, _ = run(["sumset", "--a", "1,2,3"], capsys)
    assert json.loads(out)["result"]["sumset"] == [2, 3, 4, 5, 6]
    _, out, _ = run(["freiman", "--s", "1,2,3,10"], capsys)
    assert json.loads(out)["result"]["applicable"] is False
    _, out, _ = run(["bset", "--s", "1,2,3", "--delta", "0"], capsys)
    assert json.loads(out)["result"]["members"] == [1, 2, 3]
    _, out, _ = run(
        ["janson", "--family", "1,2|2,3", "--ground", "6", "--draw", "3"], capsys
    )
    assert json.loads(out)["result"]["mu"] == pytest.approx(0.5)


def test_bounds_and_inequalities_and_constant(capsys):
    _, out, _ = run(["bounds", "--name", "parts", "--k", "8", "--ell", "3", "--count", "2"], capsys)
    rec = json.loads(out)
    assert rec["result"]["count_leq_rhs"] is True
    _, out, _ = run(
        ["inequalities", "--kind", "binom", "--a", "10", "--b", "4", "--c", "2"], capsys
    )
    assert all(row["passed"] for row in json.loads(out)["result"])
    _, out, _ = run(["inequalities", "--kind", "gamma", "--a", "1", "--gamma-b", "1.0"], capsys)
    assert json.loads(out)["result"]["passed"] is True
    _, out, _ = run(["constant", "--n", "4", "--m", "2", "--count", "4"], capsys)
    assert json.loads(out)["result"]["c_star"] == pytest.approx(1.0)


def test_trend_csv(capsys):
    code, out, _ = run(
        ["trend", "--n-list", "12,16", "--m-rule", "sqrt", "--count", "100", "--format", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3  # header plus two rows
    assert "ell_scaled" in lines[0]


def test_verify_small_suite(capsys):
    code, out, _ = run(["verify", "--suite", "small"], capsys)
    assert code == 0
    lines = [line for line in out.splitlines() if line.startswith("[")]
    assert len(lines) == 12
    assert all(line.startswith("[PASS]") for line in lines)
