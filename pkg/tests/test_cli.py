import csv
import io
import json
import subprocess
import sys

import pytest

from burstcodes import cli
from burstcodes.codebook import Codebook


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ball_partition_body(capsys):
    code, out, _ = run(capsys, "ball", "--n", "8", "--m", "2", "--t1", "2", "--t2", "1", "--x", "00000000")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("# n=8") and len(lines) == 17
    assert lines[1:] == sorted(lines[1:])


def test_ball_usage_errors(capsys):
    assert run(capsys, "ball", "--t1", "2", "--t2", "1")[0] == 1
    assert run(capsys, "ball", "--x", "0102", "--t1", "2", "--t2", "1")[0] == 1
    assert run(capsys, "ball", "--x", "000", "--n", "4", "--t1", "1", "--t2", "1")[0] == 1


def test_ball_ds_model(capsys):
    code, out, _ = run(capsys, "ball", "--x", "00000000", "--t1", "2", "--t2", "1", "--model", "ds")
    assert code == 0 and "model=DS" in out


def test_verify_thm1_unconstrained_passes(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "1", "--n", "8", "--t1", "2", "--t2", "1",
                       "--variant", "unconstrained")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_counterexample_exit(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "1", "--n", "6", "--t1", "2", "--t2", "1")
    rep = json.loads(out)
    assert code == 2 and not rep["passed"] and rep["counterexample"]


def test_verify_eq7(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "eq7", "--n", "12", "--t1", "3", "--t2", "2")
    rep = json.loads(out)
    assert code == 0 and rep["counts"]["closed_form"] == "116"


def test_verify_obs2_and_lemma4(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "obs2", "--n", "12", "--t1", "3", "--t2", "1")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--theorem", "obs2", "--n", "12", "--t1", "4", "--t2", "2")
    assert code == 2
    code, out, _ = run(capsys, "verify", "--theorem", "lemma4", "--n", "10", "--t", "3")
    assert code == 0 and json.loads(out)["counts"]["words"] == "1024"


def test_verify_budget_refusal(capsys, monkeypatch):
    monkeypatch.setenv("BURSTCODES_BUDGET", "8")
    code, out, _ = run(capsys, "verify", "--theorem", "eq7", "--n", "12", "--t1", "3", "--t2", "2")
    assert code == 1 and "refused" in json.loads(out)


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "12", "--t1", "2", "--t2", "1")
    body = json.loads(out)
    assert code == 0 and body["lower"] == "64/2475" and body["a1"] == "184"


def test_complexity_table_csv(capsys):
    code, out, _ = run(capsys, "complexity-table")
    rows = {r["row"]: r for r in csv.DictReader(io.StringIO(out))}
    assert code == 0
    assert rows["7"]["paper_ds"] == "34" and rows["7"]["t_prime"] == "3"
    assert rows["12"]["paper_ds"] == "18"
    assert rows["14"]["ds"] == "RS operations"
    assert rows["example"]["ds"] == "202275"


def test_complexity_table_json(capsys):
    code, out, _ = run(capsys, "complexity-table", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 16


def test_tt_build_encode_decode(capsys, tmp_path):
    book_path = tmp_path / "tt.txt"
    code, out, _ = run(capsys, "build", "tt", "--n", "16", "--t", "2", "--out", str(book_path))
    assert code == 0
    book = Codebook.loads(book_path.read_text())
    assert len(book) == int(json.loads(out)["size"])
    code, out, _ = run(capsys, "encode", "--codebook", str(book_path), "--msg", "0")
    word = out.strip()
    assert code == 0 and word == "0" * 16
    assert run(capsys, "encode", "--codebook", str(book_path), "--msg", "99")[0] == 1
    y = "11" + "0" * 5 + "11" + "0" * 7  # (2,2)-DI bursts at positions 1 and 8
    code, out, _ = run(capsys, "decode", "--codebook", str(book_path), "--y", y)
    assert code == 0 and out.strip() == word
    code, out, _ = run(capsys, "roundtrip", "--codebook", str(book_path), "--samples", "50", "--seed", "4")
    rep = json.loads(out)
    assert code == 0 and rep["seed"] == "4" and rep["failures"] == "0"


def test_decode_failure_exit(capsys, tmp_path):
    book_path = tmp_path / "tt.txt"
    run(capsys, "build", "tt", "--n", "16", "--t", "2", "--out", str(book_path))
    code, out, _ = run(capsys, "decode", "--codebook", str(book_path), "--y", "0101010101010101")
    assert code == 3 and json.loads(out)["error"] == "undecodable"


def test_general_build_and_roundtrip(capsys, tmp_path):
    book_path = tmp_path / "gen.txt"
    code, out, _ = run(capsys, "build", "general", "--n", "24", "--t1", "3", "--t2", "1",
                       "--out", str(book_path))
    info = json.loads(out)
    assert code == 0 and info["side_info"].endswith(".side.json")
    side = json.loads((tmp_path / "gen.txt.side.json").read_text())
    assert side["moduli"]["N1"] == "4096" and isinstance(side["phi"][0][0], str)
    code, out, _ = run(capsys, "roundtrip", "--codebook", str(book_path), "--samples", "30", "--seed", "1")
    assert code == 0 and json.loads(out)["failures"] == "0"
    code, out, _ = run(capsys, "decode", "--codebook", str(book_path), "--y", "0" * 20)
    assert code == 3


def test_commands_are_deterministic(capsys, tmp_path):
    outs = []
    for k in range(2):
        p = tmp_path / f"tt{k}.txt"
        run(capsys, "build", "tt", "--n", "16", "--t", "2", "--out", str(p))
        outs.append(p.read_text())
        outs.append(run(capsys, "roundtrip", "--codebook", str(p), "--samples", "20", "--seed", "9")[1])
    assert outs[0] == outs[2] and outs[1] == outs[3]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "burstcodes", "bounds", "--n", "10", "--t1", "2", "--t2", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["n"] == "10"
    r = subprocess.run([sys.executable, "-m", "burstcodes", "nope"], capture_output=True, text=True)
    assert r.returncode == 1


@pytest.mark.parametrize("argv", [["verify", "--theorem", "9", "--n", "8"], ["build", "rs", "--n", "4", "--out", "x"]])
def test_bad_choices(capsys, argv):
    assert run(capsys, *argv)[0] == 1
