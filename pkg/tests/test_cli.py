import json
import subprocess
import sys

import pytest

from stanleydepth.cli import INPUT_ERROR, INVALID, OK, UNKNOWN, main
from stanleydepth.core import parse_ideal
from stanleydepth.decomp import load_decomposition, verify_decomposition
from stanleydepth.poset import load_partition, validate_partition


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_sdepth_text(capsys):
    code, out, _ = run(capsys, "sdepth", "(x1,x2,x3)")
    assert code == OK
    assert "sdepth (x1,x2,x3) = 2" in out and "no partition at k = 3" in out


def test_sdepth_json_and_files(capsys, tmp_path):
    cert, dec = tmp_path / "p.json", tmp_path / "d.json"
    code, out, _ = run(capsys, "sdepth", "(x1^2*x2, x3)", "--json",
                       "--certificate", cert, "--decomposition", dec)
    payload = json.loads(out)
    assert code == OK and payload["sdepth"] == 2
    part = load_partition(cert)
    assert validate_partition(part.poset, part).min_rho == 2
    report = verify_decomposition(parse_ideal("(x1^2*x2, x3)"), load_decomposition(dec))
    assert report.valid and report.sdepth == 2
    code, out, _ = run(capsys, "verify", "(x1^2*x2,x3)", dec)
    assert code == OK and "sdepth 2" in out


def test_vars_flag(capsys):
    code, out, _ = run(capsys, "sdepth", "(x1)", "--vars", "3", "--json")
    assert code == OK and json.loads(out)["sdepth"] == 3


@pytest.mark.parametrize("text", ["(x1,", "x1", "(x0)", "(x1^0)", "(x1,x2) junk", "(y1)"])
def test_parse_errors_exit_1(capsys, text):
    code, _, err = run(capsys, "sdepth", text)
    assert code == INPUT_ERROR
    assert "^" in err


def test_redundant_generator_dropped_and_range_error(capsys):
    code, out, _ = run(capsys, "sdepth", "(x1,x1*x2)", "--json")
    assert code == OK and json.loads(out)["ideal"] == "(x1)"
    assert run(capsys, "sdepth", "(x3)", "--vars", "2")[0] == INPUT_ERROR


def test_budget_exit_3(capsys, monkeypatch):
    code, out, _ = run(capsys, "sdepth", "(x1,x2,x3,x4,x5)", "--budget", "5")
    assert code == UNKNOWN and "unknown" in out
    monkeypatch.setenv("STANLEY_BUDGET", "5")
    assert run(capsys, "sdepth", "(x1,x2,x3,x4,x5)")[0] == UNKNOWN


def test_verify_invalid_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "spaces": [{"u": [1, 0], "Z": [1, 2]},
                                                   {"u": [0, 1], "Z": [1, 2]}]}))
    code, out, _ = run(capsys, "verify", "(x1,x2)", path)
    assert code == INVALID and "witness: x1*x2" in out


def test_missing_file_exit_1(capsys, tmp_path):
    assert run(capsys, "verify", "(x1)", tmp_path / "nope.json")[0] == INPUT_ERROR


def test_lift_and_lower(capsys, tmp_path):
    cert, lifted, lowered = tmp_path / "p.json", tmp_path / "l.json", tmp_path / "w.json"
    run(capsys, "sdepth", "(x1,x2)", "--certificate", cert)
    code, out, _ = run(capsys, "transform", "lift", cert, "--var", "1", "-o", lifted)
    assert code == OK and "(x1,x2) -> (x1^2,x2)" in out and "min rho: 1 -> 1" in out
    code, out, _ = run(capsys, "transform", "lower", lifted, "--var", "1", "-o", lowered, "--json")
    assert code == OK and json.loads(out)["to"] == "(x1,x2)"
    assert load_partition(lowered).canonical() == load_partition(cert).canonical()


def test_lift_rejects_shared_variable(capsys, tmp_path):
    cert = tmp_path / "p.json"
    run(capsys, "sdepth", "(x1*x2,x2*x3)", "--certificate", cert)
    code, _, err = run(capsys, "transform", "lift", cert, "--var", "2",
                       "--ideal", "(x1*x2,x2*x3)")
    assert code == INPUT_ERROR and "x2" in err


def test_project_and_extend(capsys, tmp_path):
    dec, proj, ext = tmp_path / "d.json", tmp_path / "p.json", tmp_path / "e.json"
    run(capsys, "sdepth", "(x1,x2*x3)", "--decomposition", dec)
    code, out, _ = run(capsys, "transform", "project", dec, "--ideal", "(x1,x2*x3)", "-o", proj)
    assert code == OK and "decomposes (x1,x2)" in out
    assert verify_decomposition(parse_ideal("(x1,x2)"), load_decomposition(proj)).valid
    code, out, _ = run(capsys, "transform", "extend", proj, "-o", ext, "--json")
    payload = json.loads(out)
    assert code == OK and payload["sdepth_after"] == payload["sdepth_before"] + 1
    assert verify_decomposition(parse_ideal("(x1,x2)", 3), load_decomposition(ext)).valid


def test_radical_chain(capsys, tmp_path):
    cert, carried, chain = tmp_path / "p.json", tmp_path / "c.json", tmp_path / "chain.json"
    run(capsys, "sdepth", "(x1^3,x2^2)", "--certificate", cert)
    code, out, _ = run(capsys, "transform", "radical-chain", "(x1^3,x2^2)",
                       "--partition", cert, "--certificate", carried, "-o", chain)
    assert code == OK and "3 steps, radical (x1,x2)" in out
    assert len(json.loads(chain.read_text())["steps"]) == 3
    part = load_partition(carried)
    assert part.poset.ideal == parse_ideal("(x1,x2)")
    assert validate_partition(part.poset, part).min_rho == 1


def test_radical_chain_non_ci(capsys):
    assert run(capsys, "transform", "radical-chain", "(x1*x2,x2*x3)")[0] == INPUT_ERROR


def test_scan_out_and_resume(capsys, tmp_path):
    out_file = tmp_path / "scan.jsonl"
    code, _, err = run(capsys, "scan-ci", "--n-max", "3", "--out", out_file)
    lines = out_file.read_text().splitlines()
    assert code == OK and len(lines) == 10 and "0 mismatch" in err
    assert all(json.loads(line)["match"] for line in lines)
    partial = tmp_path / "partial.jsonl"
    partial.write_text("\n".join(lines[:4]) + "\n")
    code, _, err = run(capsys, "scan-ci", "--n-max", "3", "--resume", partial, "--threads", "2")
    assert code == OK and "4 resumed" in err
    assert partial.read_text().splitlines() == lines_without_timing(lines, partial)


def lines_without_timing(lines, partial):
    # elapsed differs between runs; compare everything else
    def strip(line):
        rec = json.loads(line)
        rec.pop("elapsed")
        return rec
    got = partial.read_text().splitlines()
    assert [strip(a) for a in got] == [strip(b) for b in lines]
    return got


def test_scan_requires_positive_n(capsys):
    with pytest.raises(SystemExit):
        main(["scan-ci", "--n-max", "0"])


def test_poset_show(capsys):
    code, out, _ = run(capsys, "poset", "show", "(x1^2,x2)")
    assert code == OK and "4 points" in out
    code, out, _ = run(capsys, "poset", "show", "(x1,x2)", "--g", "2,1", "--json")
    assert json.loads(out)["size"] == 5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stanleydepth", "sdepth", "(x1*x2,x3*x4)"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0 and "= 3" in proc.stdout
