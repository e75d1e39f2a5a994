import csv
import io
import json
import random
import subprocess
import sys

import pytest

from colorpart.cli import main
from colorpart.colored import PRESETS, enumerate_colored, format_colored


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_examples(capsys):
    code, out, _ = run(capsys, "count", "--preset", "mod7", "--side", "S", "--n", "15", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and rows[0]["enumeration"] == rows[0]["qseries"] == 6
    code, out, _ = run(capsys, "count", "--preset", "mod5", "--n", "3", "--format", "csv")
    assert code == 0 and list(csv.DictReader(io.StringIO(out)))[0]["enumeration"] == "8"
    code, out, _ = run(capsys, "count", "--system", "t=1;C=2;A=1", "--n", "0", "--format", "json")
    assert code == 0 and json.loads(out.splitlines()[0])["enumeration"] == 0


def test_count_range_text(capsys):
    code, out, _ = run(capsys, "count", "--preset", "mod3", "--side", "T", "--nmin", "0", "--nmax", "10")
    assert code == 0
    assert out.splitlines()[0].split() == ["N", "enumeration", "qseries", "agree"]
    assert "agree: True" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--system", "t=1;C=4;A=3", "--n", "2"],
        ["count", "--system", "garbage", "--n", "2"],
        ["count", "--preset", "mod7"],
        ["count", "--preset", "mod7", "--system", "t=1;C=2;A=1", "--n", "1"],
        ["verify", "--preset", "mod13", "--nmax", "10"],
        ["verify", "--preset", "mod5", "--nmax", "2"],
        ["biject", "--preset", "mod5", "3@3+"],
        ["biject", "--preset", "mod5", "--inverse", ""],
        ["conjecture23", "--nmax", "2"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("colorpart:")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--preset", "mod7", "--nmax", "200", "--format", "json", "--no-timing")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(lines) == 201
    assert lines[-1] == {"summary": {"preset": "mod7", "N_min": 1, "N_max": 200, "pass": True}}
    assert all(r["pass"] for r in lines[:-1])
    for name, nmax in (("mod11", 150), ("mod23", 200)):
        assert run(capsys, "verify", "--preset", name, "--nmax", str(nmax))[0] == 0


def test_verify_deterministic(capsys, tmp_path):
    args = ["verify", "--preset", "mod3", "--nmax", "40", "--no-timing"]
    first = run(capsys, *args)[1]
    assert run(capsys, *args)[1] == first
    target = tmp_path / "out.txt"
    assert run(capsys, *args, "--out", str(target)) == (0, "", "")
    assert target.read_text() == first


def test_conjecture23(capsys):
    code, out, err = run(capsys, "conjecture23", "--nmax", "50", "--format", "json", "--no-timing")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and err == ""
    assert lines[0]["N"] == 3 and lines[0]["lhs_tuples"] == lines[0]["rhs_tuples"]
    assert lines[-1]["summary"]["pass"] and lines[-1]["summary"]["consistent"]
    assert all(r["consistent"] and r["tuples_pass"] for r in lines[:-1])


def test_biject_examples(capsys):
    code, out, _ = run(capsys, "biject", "--preset", "mod7", "15@1+", "--format", "json")
    result = json.loads(out)
    assert code == 0 and result["image"] == "14@1+" and result["image_weight"] == 14
    assert [step["step"] for step in result["trace"]] == ["lhs", "kim", "rhs"]
    code, out, _ = run(capsys, "biject", "--preset", "mod5", "3@1+", "--format", "json")
    result = json.loads(out)
    assert code == 0 and result["image"] == "" and 1 <= result["label"] <= 8
    code, out, _ = run(capsys, "biject", "--preset", "mod5", "3@1+")
    assert out.startswith("image: ()\nlabel: ")


def _random_partitions(preset, rng, count):
    pool = []
    N = preset.N0
    while len(pool) < 3 * count:
        pool.extend(enumerate_colored(preset.S, N))
        N += 1
    return rng.sample(pool, count)


@pytest.mark.parametrize("name", ["mod7", "mod3", "mod5", "mod11"])
def test_biject_round_trip_corpus(capsys, name):
    rng = random.Random(name)
    for pi in _random_partitions(PRESETS[name], rng, 100):
        text = format_colored(pi)
        code, out, _ = run(capsys, "biject", "--preset", name, text, "--format", "json")
        assert code == 0
        forward = json.loads(out)
        code, out, _ = run(
            capsys, "biject", "--preset", name, "--inverse", "--label", str(forward["label"]),
            forward["image"], "--format", "json",
        )
        assert code == 0 and json.loads(out)["image"] == text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "colorpart", "count", "--preset", "mod7", "--n", "15"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "agree: True" in proc.stdout
