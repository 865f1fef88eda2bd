import json

import pytest

from gf2xor.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- verify ------------------------------------------------------------------


def test_verify_eq2_passes(capsys):
    code, out, err = run(capsys, "verify", "eq2", "--n-max", "6")
    assert code == 0
    assert out.startswith("PASS eq2")


def test_verify_json_output(capsys):
    code, out, _ = run(capsys, "verify", "eq1", "--n-max", "5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["claim_id"] == "eq1"
    assert payload["violations"] == []


def test_verify_cap_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "eq1", "--n-max", "99")
    assert code == 2
    assert "error:" in err


def test_verify_all_small(capsys):
    code, out, _ = run(
        capsys, "verify", "all", "--n-max", "4", "--d-max", "3"
    )
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln]
    assert len(lines) == 7
    assert all(ln.startswith("PASS") for ln in lines)


def test_verify_unknown_claim_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


# -- search ------------------------------------------------------------------


def test_search_trinomial(capsys):
    code, out, _ = run(capsys, "search", "--poly", "x^4+x+1", "--n", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["t"] == 1
    assert payload["witness"]["cycle_type"] == [4]


def test_search_defaults_n_to_degree(capsys):
    code, out, _ = run(capsys, "search", "--poly", "x^3+x+1")
    assert code == 0
    assert json.loads(out)["n"] == 3


def test_search_reducible_diagnostic(capsys):
    code, _, err = run(capsys, "search", "--poly", "x^2+1", "--n", "2")
    assert code == 2
    assert "reducible" in err
    assert "x+1" in err


def test_search_exhausted_exits_one(capsys):
    code, out, _ = run(
        capsys, "search", "--poly", "x^8+x^4+x^3+x^2+1", "--n", "8", "--t-max", "2"
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["t"] is None
    assert payload["witness"] is None


def test_search_hex_polynomial(capsys):
    code, out, _ = run(capsys, "search", "--poly", "0x13", "--n", "4")
    assert code == 0
    assert json.loads(out)["poly"] == "x^4+x+1"


# -- table -------------------------------------------------------------------


def test_table_degree2_markdown(capsys):
    code, out, _ = run(capsys, "table", "--degree", "2")
    assert code == 0
    assert "| x^2+x+1 | 0x7 | 2 | 3 | 1 |" in out


def test_table_degree3_csv(capsys):
    code, out, _ = run(capsys, "table", "--degree", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "poly,hex,degree,weight,min_xor_count,witness"
    assert len(lines) == 3  # two irreducibles of degree 3


def test_table_json_counts_and_weights(capsys):
    code, out, _ = run(capsys, "table", "--degree", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 5
    for row in payload["rows"]:
        if row["min_xor_count"] == 1:
            assert row["weight"] == 3
        if row["min_xor_count"] == 2:
            assert row["weight"] <= 5


def test_table_degree8_no_single_xor(capsys):
    # no irreducible trinomial of degree 8 exists, so no row costs 1
    code, out, _ = run(capsys, "table", "--degree", "8", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["rows"]) == 30
    for row in payload["rows"]:
        assert row["min_xor_count"] in (2, None)
        if row["min_xor_count"] == 2:
            assert row["weight"] <= 5


def test_table_out_and_figure(tmp_path, capsys):
    out_file = tmp_path / "deg4.csv"
    fig_file = tmp_path / "deg4.png"
    code, out, err = run(
        capsys,
        "table",
        "--degree",
        "4",
        "--format",
        "csv",
        "--out",
        str(out_file),
        "--figure",
        str(fig_file),
    )
    assert code == 0
    assert out == ""
    assert out_file.exists()
    assert "poly,hex" in out_file.read_text()
    assert fig_file.exists() and fig_file.stat().st_size > 0


def test_table_degree_cap(capsys):
    code, _, err = run(capsys, "table", "--degree", "9")
    assert code == 2
    assert "error:" in err


# -- emit --------------------------------------------------------------------


def test_emit_netlist_golden(capsys):
    code, out, _ = run(capsys, "emit", "--poly", "x^3+x+1", "--n", "3")
    assert code == 0
    assert out == "x[1] ^= x[3]\nout = x[3], x[1], x[2]\n"


def test_emit_one_step_for_trinomial(capsys):
    code, out, _ = run(capsys, "emit", "--poly", "x^4+x+1", "--n", "4")
    assert code == 0
    steps = [ln for ln in out.splitlines() if "^=" in ln]
    assert len(steps) == 1


def test_emit_json_format(capsys):
    code, out, _ = run(
        capsys, "emit", "--poly", "x^2+x+1", "--n", "2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["t"] == 1
    assert len(payload["steps"]) == 1


def test_emit_without_witness_fails(capsys):
    code, _, err = run(
        capsys, "emit", "--poly", "x^8+x^4+x^3+x^2+1", "--n", "8", "--t-max", "2"
    )
    assert code == 1
    assert "no witness" in err


def test_emit_sample_check_mode(capsys):
    code, out, _ = run(
        capsys,
        "emit",
        "--poly",
        "x^6+x+1",
        "--n",
        "6",
        "--check",
        "sample",
        "--seed",
        "9",
    )
    assert code == 0
    assert out.endswith("x[6], x[1], x[2], x[3], x[4], x[5]\n")


# -- determinism ----------------------------------------------------------------


def test_threads_flag_matches_single_threaded(capsys):
    from gf2xor.xorform import clear_scan_cache

    clear_scan_cache()
    _, single, _ = run(capsys, "table", "--degree", "5", "--format", "csv")
    clear_scan_cache()
    try:
        _, multi, _ = run(
            capsys, "table", "--degree", "5", "--format", "csv", "--threads", "2"
        )
    finally:
        clear_scan_cache()
    assert single == multi


def test_identical_invocations_are_byte_identical(capsys):
    _, first, _ = run(capsys, "table", "--degree", "6", "--format", "csv")
    _, second, _ = run(capsys, "table", "--degree", "6", "--format", "csv")
    assert first == second


def test_search_output_stable_excluding_timing(capsys):
    _, first, _ = run(capsys, "search", "--poly", "x^5+x^2+1", "--n", "5")
    _, second, _ = run(capsys, "search", "--poly", "x^5+x^2+1", "--n", "5")
    a, b = json.loads(first), json.loads(second)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b
