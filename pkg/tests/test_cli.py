import json
import os
import shutil
import subprocess
import sys

import pytest

from quasiengel.cli import RunConfig, main, screen_words
from quasiengel.freewords import FreeWord
from quasiengel.polycore import DATA_DIR


def run_json(capsys, *args):
    status = main(["--format", "json", *args])
    return status, json.loads(capsys.readouterr().out)


def test_spec_examples(capsys):
    status, recs = run_json(capsys, "verify", "fixpoint", "--p", "3")
    assert status == 0 and recs[0]["valid"]
    status, recs = run_json(capsys, "bound", "as", "--N", "3", "--r", "3", "--d", "7")
    assert status == 0 and recs[0]["value"] == 44232
    status, recs = run_json(capsys, "count", "plane", "--q", "4")
    assert status == 0 and recs[0]["count"] == 6


def test_flags_after_subcommand(capsys):
    assert main(["count", "plane", "--field", "2^3", "--format", "csv"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("variety,") and ",11," in out[1]


def test_failure_sets_exit_status(tmp_path, capsys):
    for f in os.listdir(DATA_DIR):
        shutil.copy(os.path.join(DATA_DIR, f), tmp_path)
    t5 = tmp_path / "table5.csv"
    t5.write_text(t5.read_text().replace("4,2,2,6", "4,2,2,7"))
    assert main(["count", "plane", "--q", "4", "--assets", str(tmp_path)]) == 1
    capsys.readouterr()
    # the override is not sticky
    assert main(["count", "plane", "--q", "4"]) == 0


def test_errors_and_caps(capsys):
    assert main(["count", "suzuki", "--n", "7"]) == 2
    assert main(["count", "plane", "--q", "6"]) == 2
    with pytest.raises(SystemExit):
        main(["count", "nonsense"])
    with pytest.raises(ValueError):
        RunConfig("count", "plane", fmt="xml")


def test_screen_regression():
    reps = screen_words(5, [5, 7, 11, 13])
    flagged = {r.word for r in reps if r.flagged}
    for w in ("x^-1 y x y^-1 x", "x^-2 y^-1 x", "y^-2 x^-1 y"):
        assert str(FreeWord.parse(w)) in flagged
    assert "x" not in flagged
    assert all(c >= 0 for r in reps for c in r.counts.values())
    assert len(flagged) < len(reps) / 10


def test_screen_parallel_is_deterministic():
    a = [r.as_dict() for r in screen_words(3, [5, 7])]
    b = [r.as_dict() for r in screen_words(3, [5, 7], jobs=2)]
    assert a == b


def test_screen_primes_guard():
    with pytest.raises(ValueError):
        screen_words(2, [3, 5])


def test_poly_group_lie_zeta(capsys):
    status, recs = run_json(capsys, "poly", "gb", "--system", "psl2_J.txt", "--name", "J",
                            "--check", "--char", "7")
    assert status == 0 and recs[0]["is_groebner"]
    status, recs = run_json(capsys, "poly", "nf", "--system", "psl2_J.txt", "--name", "J",
                            "--poly", "b*(b-1)", "--expect-zero")
    assert status == 1 and not recs[0]["zero"]
    status, recs = run_json(capsys, "group", "--name", "S3,A5")
    assert status == 0 and [r["quasi_engel_index"] for r in recs] == [3, None]
    status, recs = run_json(capsys, "lie", "check", "--algebra", "aff1", "--p", "7")
    assert status == 0 and recs[0]["v_index"] == 2
    status, recs = run_json(capsys, "zeta", "--order", "7", "--compare", "zeta_series.csv")
    assert status == 0 and recs[-1]["series"].startswith("1-4T^2")


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "quasiengel", "bound", "genus", "--d", "3"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "genus=1" in r.stdout
