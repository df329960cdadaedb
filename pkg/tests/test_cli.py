"""Command-line interface: formats, exit codes, determinism."""

import json

import pytest

from propfactor import run_cli


def _run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _write(tmp_path, name, body):
    p = tmp_path / name
    p.write_bytes(body if isinstance(body, bytes) else body.encode())
    return str(p)


def test_sqms_json(capsys, tmp_path):
    x = _write(tmp_path, "x", "aababaababb")
    y = _write(tmp_path, "y", "babababbaaab")
    code, out, err = _run(capsys, "sqms", "--text", x, "--query", y)
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload == {
        "values": [3, 3, 3, 3, 3, 2, 1, 2, 1, 1, 2, 1],
        "best_length": 3,
        "witness": {"x_pos": 2, "y_pos": 0, "length": 3},
    }
    # keys come out in a fixed order
    assert out.index('"values"') < out.index('"best_length"') < out.index('"witness"')


def test_sqms_tsv(capsys, tmp_path):
    x = _write(tmp_path, "x", "aababaababb")
    y = _write(tmp_path, "y", "babababbaaab")
    code, out, _ = _run(capsys, "sqms", "--format", "tsv", "--text", x, "--query", y)
    assert code == 0
    lines = out.splitlines()
    assert lines[:12] == ["3", "3", "3", "3", "3", "2", "1", "2", "1", "1", "2", "1"]
    assert lines[12] == "3\tbab"


def test_lpcf_routes_and_oracle(capsys, tmp_path):
    a = _write(tmp_path, "a", "ababbabba")
    b = _write(tmp_path, "b", "ababaab")
    code, out, _ = _run(capsys, "lpcf", "--k-prime", "2", a, b)
    assert code == 0
    assert json.loads(out) == {"length": 4, "period": 2,
                               "witness": {"string": 0, "start": 0}}
    code, out, _ = _run(capsys, "lpcf", "--k-prime", "2", "--algorithm", "nga",
                        "--format", "tsv", a, b)
    assert (code, out) == (0, "4\tabab\n")
    code, out, _ = _run(capsys, "lpcf", "--k-prime", "2", "--oracle", a, b)
    assert json.loads(out) == {"length": 4, "period": None, "witness": None}


def test_lpalcf_json_and_empty_error(capsys, tmp_path):
    a = _write(tmp_path, "a", "ababaa")
    b = _write(tmp_path, "b", "bababb")
    code, out, _ = _run(capsys, "lpalcf", a, b)
    assert code == 0
    assert json.loads(out) == {
        "length": 3, "witness": {"x_start": 1, "y_start": 2, "factor": "bab"}}
    empty1 = _write(tmp_path, "e1", "")
    empty2 = _write(tmp_path, "e2", "")
    code, out, err = _run(capsys, "lpalcf", empty1, empty2)
    assert code == 1 and out == ""
    assert err.startswith("error:")


def test_runs_formats(capsys, tmp_path):
    f = _write(tmp_path, "f", "ababbabba")
    code, out, _ = _run(capsys, "runs", f)
    assert json.loads(out) == {"runs": [[0, 3, 2], [1, 8, 3], [3, 4, 1], [6, 7, 1]]}
    code, out, _ = _run(capsys, "runs", "--format", "tsv", f)
    assert out == "0\t3\t2\n1\t8\t3\n3\t4\t1\n6\t7\t1\n"
    code, out, _ = _run(capsys, "runs", "--oracle", f)
    assert json.loads(out)["runs"] == [[0, 3, 2], [1, 8, 3], [3, 4, 1], [6, 7, 1]]


def test_palindromes_tsv(capsys):
    code, out, _ = _run(capsys, "palindromes", "--literal", "abaab", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[:3] == ["0\t1\t0\t0", "1\t0\t1\t0", "2\t3\t0\t2"]
    assert len(out.splitlines()) == 9


def test_literal_and_newline_handling(capsys, tmp_path):
    f = _write(tmp_path, "f", b"aa\n\n")
    code, out, _ = _run(capsys, "runs", f)
    assert json.loads(out) == {"runs": [[0, 1, 1]]}  # exactly one newline stripped
    code, out, err = _run(capsys, "runs", "--keep-newline", f)
    assert json.loads(out) == {"runs": [[0, 1, 1], [2, 3, 1]]}
    code, out, _ = _run(capsys, "runs", "--literal", "aaaa")
    assert json.loads(out) == {"runs": [[0, 3, 1]]}


def test_usage_and_io_errors(capsys, tmp_path):
    code, _, _ = _run(capsys, "nosuch")
    assert code == 2
    code, _, _ = _run(capsys)
    assert code == 2
    code, _, err = _run(capsys, "sqms", "--text", str(tmp_path / "missing"),
                        "--query", str(tmp_path / "missing"))
    assert code == 1 and err.startswith("error:")
    bad = _write(tmp_path, "bad", b"a\x00b")
    code, _, err = _run(capsys, "runs", "--keep-newline", bad)
    assert code == 1 and "position" in err


def test_output_is_deterministic(capsys, tmp_path):
    x = _write(tmp_path, "x", "aababaababb")
    y = _write(tmp_path, "y", "babababbaaab")
    _, first, _ = _run(capsys, "sqms", "--text", x, "--query", y)
    _, second, _ = _run(capsys, "sqms", "--text", x, "--query", y)
    assert first == second


def test_bench_shape(capsys, monkeypatch):
    monkeypatch.setenv("PROPFACTOR_SEED", "11")
    code, out, _ = _run(capsys, "bench", "--problem", "runs", "--size", "64")
    assert code == 0
    payload = json.loads(out)
    assert payload["problem"] == "runs"
    assert [(r["kind"], r["size"]) for r in payload["rows"]] == [
        ("random", 64), ("random", 128), ("periodic", 64), ("periodic", 128)]
    assert set(payload["ratios"]) == {"random", "periodic"}
    code, out, _ = _run(capsys, "bench", "--problem", "lpalcf", "--size", "64",
                        "--format", "tsv")
    lines = out.splitlines()
    assert len(lines) == 6 and lines[4].startswith("ratio\trandom\t")
    code, _, err = _run(capsys, "bench", "--problem", "runs", "--size", "2")
    assert code == 1 and err.startswith("error:")
