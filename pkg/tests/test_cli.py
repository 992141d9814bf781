import json
import subprocess
import sys
from pathlib import Path

import pytest

from bruhat_chains.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_covers(capsys):
    code, out, _ = run(capsys, "covers", "132", "--stats")
    assert code == 0
    assert out.splitlines() == ["132 -> 312  t(1,2)  a=0 b=0 c=1 d=0",
                                "132 -> 231  t(1,3)  a=0 b=1 c=0 d=0"]
    code, out, _ = run(capsys, "covers", "321", "--format", "json")
    assert code == 0 and json.loads(out) == []
    code, out, _ = run(capsys, "covers", "1234")
    assert len(out.splitlines()) == 3


def test_schubert(capsys):
    assert run(capsys, "schubert", "321")[1] == "x1^2*x2"
    assert run(capsys, "schubert", "132", "--spec1")[1] == "2"
    assert run(capsys, "schubert", "132", "--padded")[1] == "x1*y1*y2 + x2*y1^2"


def test_chains(capsys):
    assert run(capsys, "chains", "e", "w0", "--weights", "code", "--n", "4")[1] == "720"
    assert run(capsys, "chains", "132", "321", "--weights", "thm14")[1] == "4"
    assert run(capsys, "chains", "e", "w0", "--weights", "thm13", "--n", "3")[1] == "3*a1*a2^2 + 3*a1^2*a2"
    assert run(capsys, "chains", "e", "w0", "--weights", "thm12:AC:flip", "--n", "4")[1] == "720"


def test_monk(capsys):
    assert run(capsys, "monk", "132", "--m", "1")[1] == "S[231] + S[312]"


def test_invalid_arguments(capsys):
    assert run(capsys, "chains", "321", "123")[0] == 2
    assert run(capsys, "chains", "e", "w0", "--weights", "nope")[0] == 2
    assert run(capsys, "covers", "1123")[0] == 2
    assert run(capsys, "covers", "132", "--n", "4")[0] == 2
    assert run(capsys, "verify", "lem33", "--n", "5")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "thm99"])
    assert exc.value.code == 2


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "thm14", "--n", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert len(data["reports"][0]["cases"]) == 24

    from bruhat_chains import cli
    from bruhat_chains.report import Report

    def failing(n):
        rep = Report("broken", n)
        rep.add("broken/0", False, "forced")
        return rep

    monkeypatch.setitem(cli.TARGETS, "thm12", (failing, 6))
    assert run(capsys, "verify", "thm12", "--n", "3")[0] == 1


def test_verify_all_smallest(capsys):
    code, out, _ = run(capsys, "verify", "all", "--n", "3")
    assert code == 0
    assert out.splitlines()[-1].startswith("ALL PASS")


def test_verify_thm12_n5(capsys):
    code, out, _ = run(capsys, "verify", "thm12", "--n", "5", "--format", "tsv")
    rows = out.splitlines()[1:]
    assert code == 0 and len(rows) == 12
    assert all(r.split("\t")[3] == "PASS" and r.split("\t")[4] == "3628800" for r in rows)


def test_max_n_sweep(capsys):
    code, out, _ = run(capsys, "verify", "lem33", "--max-n", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0 and [r["n"] for r in data["reports"]] == [3, 4]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["verify", "prop21", "--n", "4", "--format", "json", "--out", str(target)]) == 0
    assert json.loads(target.read_text())["pass"]


def test_json_stable_across_threads(monkeypatch, capsys):
    outputs = set()
    for threads in ("1", "4"):
        monkeypatch.setenv("BRUHAT_THREADS", threads)
        code, out, _ = run(capsys, "verify", "all", "--n", "3", "--format", "json")
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


@pytest.mark.parametrize("name, argv", [
    ("verify_all_n3.json", ["verify", "all", "--n", "3", "--format", "json"]),
    ("covers_2143.json", ["covers", "2143", "--format", "json"]),
    ("chains_thm13_n4.json", ["chains", "e", "w0", "--weights", "thm13", "--n", "4", "--format", "json"]),
])
def test_golden_outputs(name, argv, capsys):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / name).read_text().strip()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bruhat_chains", "chains", "e", "w0", "--n", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "720"
