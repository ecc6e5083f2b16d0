import json
import subprocess
import sys

import pytest

from spinecensus.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main


def test_lens_census_check(capsys):
    assert main(["lens-census", "--cmax", "9", "--check"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    counts = [int(line.split("\t")[1]) for line in out[1:]]
    assert counts == [3, 2, 3, 6, 10, 20, 36, 72, 136, 272]


def test_lens_census_json(capsys, tmp_path):
    target = tmp_path / "lens.json"
    assert main(["lens-census", "--cmax", "2", "--format", "json", "--out", str(target)]) == EXIT_OK
    data = json.loads(target.read_text())
    assert sorted(data["2"]) == ["L(5,1)", "L(7,2)", "L(8,3)"]


def test_usage_errors(capsys):
    assert main(["lens-census", "--cmax", "13"]) == EXIT_USAGE
    assert main(["enumerate-spines", "--n", "0"]) == EXIT_USAGE
    assert main(["verify-lemmas", "--n", "6"]) == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["lens-census"])
    assert exc.value.code == EXIT_USAGE


def test_enumerate_spines_check(capsys, tmp_path):
    assert main(["enumerate-spines", "--n", "2", "--check", "--out", str(tmp_path)]) == EXIT_OK
    header, row = capsys.readouterr().out.splitlines()[:2]
    got = dict(zip(header.lstrip("#").split("\t"), row.split("\t")))
    assert got["total"] == "12" and got["partial"] == "False"
    assert len((tmp_path / "n2" / "sig.txt").read_text().split()) == 12


def test_enumerate_spines_partial_marker(capsys):
    assert main(["enumerate-spines", "--n", "3", "--max-seconds", "0", "--check"]) == EXIT_MISMATCH
    assert "PARTIAL" in capsys.readouterr().out


def test_nonorientable_census(capsys):
    assert main(["nonorientable-census", "--format", "json"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert [r["complexity"] for r in rows] == [6] * 5 + [7] * 3


def test_verify_lemmas(capsys):
    assert main(["verify-lemmas", "--n", "3"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("#n=3\tchecked=0\tcounterexamples=0")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "spinecensus", "lens-census", "--cmax", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("#complexity")


def test_verify_lemmas_from_signature_file(capsys, tmp_path):
    from conftest import FIXTURES
    assert main(["verify-lemmas", "--n", "5", "--signatures", str(FIXTURES / "n5" / "sig.txt")]) == EXIT_OK
    assert capsys.readouterr().out.startswith("#n=5\tchecked=4\tcounterexamples=0")
    assert main(["verify-lemmas", "--n", "4", "--signatures", str(FIXTURES / "n5" / "sig.txt")]) == EXIT_USAGE
    assert main(["verify-lemmas", "--n", "4", "--signatures", str(tmp_path / "missing")]) == EXIT_USAGE
