import json

import pytest

from lmov.cli import EXIT_OK, EXIT_THEOREM, EXIT_USAGE, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_disc_csv(tmp_path, capsys):
    out = tmp_path / "disc.csv"
    code = main(["disc", "--tau", "-2", "--max-m", "12", "--format", "csv", "--out", str(out)])
    assert code == EXIT_OK
    lines = out.read_bytes().decode().splitlines()
    assert lines[0] == "m,l,tau,value,integral"
    assert len(lines) == 1 + sum(m + 1 for m in range(1, 13))
    assert all(line.endswith("True") for line in lines[1:])


def test_disc_json_stdout(capsys):
    code, text = run(["disc", "--tau", "1", "--max-m", "3"], capsys)
    assert code == EXIT_OK
    obj = json.loads(text)
    assert obj["table"] == "disc" and obj["tau"] == 1
    assert {r["m"] for r in obj["rows"]} == {1, 2, 3}


def test_annulus_json(capsys):
    code, text = run(["annulus", "--tau", "2", "--max-total", "4"], capsys)
    assert code == EXIT_OK
    obj = json.loads(text)
    top = [r for r in obj["rows"] if r["m1"] == 1 and r["m2"] == 1 and r["l"] == 2]
    assert top == [{"m1": 1, "m2": 1, "l": 2, "n": 3, "integral": True}]


def test_multihole_json(capsys):
    code, text = run(["multihole", "--tau", "1", "--max-size", "4"], capsys)
    assert code == EXIT_OK
    obj = json.loads(text)
    assert {"mu": [1, 1, 1], "n": 4, "integral": True} in obj["rows"]


def test_onehole_half_formats(capsys):
    code, text = run(["onehole", "--tau", "1", "--max-m", "1"], capsys)
    assert code == EXIT_OK
    obj = json.loads(text)
    assert obj["rows"][0]["entries"] == [
        {"g": 0, "two_q": -1, "n": 1},
        {"g": 0, "two_q": 1, "n": -1},
    ]
    code, text = run(
        ["onehole", "--tau", "1", "--max-m", "1", "--half-format", "fraction"], capsys
    )
    obj = json.loads(text)
    assert obj["rows"][0]["entries"] == [
        {"g": 0, "Q": "-1/2", "n": 1},
        {"g": 0, "Q": "1/2", "n": -1},
    ]


def test_ov_and_dt(capsys):
    code, text = run(["ov", "--tau", "-1", "--max-m", "4"], capsys)
    assert code == EXIT_OK
    obj = json.loads(text)
    assert obj["rows"][0] == {"m": 1, "entries": [{"k": 0, "N": -1}]}
    code, text = run(["dt", "--loops", "2", "--max-n", "3", "--format", "csv"], capsys)
    assert code == EXIT_OK
    assert text.splitlines()[0] == "loops,n,k,c"


def test_gwdt_check_pass(capsys):
    code, text = run(["gwdt-check", "--tau", "-1", "--order", "12"], capsys)
    assert code == EXIT_OK
    assert "PASS" in text


def test_gwdt_check_usage_guard(capsys):
    code = main(["gwdt-check", "--tau", "0", "--order", "4"])
    assert code == EXIT_USAGE


def test_twist_cli(capsys):
    code, text = run(["twist", "--p-min", "-2", "--p-max", "2", "--max-r", "3"], capsys)
    assert code == EXIT_OK
    obj = json.loads(text)
    assert all(row["p"] != 0 and row["p"] != 1 for row in obj["rows"])


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as ei:
        main(["disc"])  # missing required --tau
    assert ei.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as ei:
        main(["no-such-command"])
    assert ei.value.code == EXIT_USAGE


def test_deterministic_output(tmp_path):
    pairs = [
        ["disc", "--tau", "3", "--max-m", "8", "--format", "csv"],
        ["onehole", "--tau", "-2", "--max-m", "3"],
        ["ov", "--tau", "2", "--max-m", "4"],
        ["annulus", "--tau", "-3", "--max-total", "5", "--format", "csv"],
    ]
    for argv in pairs:
        a = tmp_path / "a.out"
        b = tmp_path / "b.out"
        assert main(argv + ["--out", str(a)]) == EXIT_OK
        assert main(argv + ["--out", str(b)]) == EXIT_OK
        assert a.read_bytes() == b.read_bytes(), argv


def test_jobs_flag_matches_serial(tmp_path):
    a = tmp_path / "serial.json"
    b = tmp_path / "jobs.json"
    assert main(["disc", "--tau", "2", "--max-m", "10", "--out", str(a)]) == EXIT_OK
    assert main(["disc", "--tau", "2", "--max-m", "10", "--jobs", "4", "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_verify_all_quick(capsys):
    code, text = run(["verify-all", "--quick", "--seed", "7"], capsys)
    assert code == EXIT_OK
    lines = [l for l in text.splitlines() if l.strip()]
    assert len(lines) == 13
    assert all(l.startswith("PASS") for l in lines)
