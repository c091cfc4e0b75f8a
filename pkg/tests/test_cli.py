import json
import os
import subprocess
import sys

import pytest

from rindler_coding.cli import main
from rindler_coding.sweep import read_csv

MES_FLAGS = ["--cx", "-1", "--cy", "-1", "--cz", "-1"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_capacity_mes_region_one(capsys):
    code, out, _ = run(capsys, "capacity", *MES_FLAGS, "--ra", "0", "--rb", "0", "--region", "I-I")
    assert code == 0
    assert out == "region=I-I capacity_bits=2.000000000 decoded_bits=2.000000000 negativity=0.5000000000\n"


def test_capacity_mes_alice_anti_bob(capsys):
    code, out, _ = run(capsys, "capacity", *MES_FLAGS, "--ra", "0", "--rb", "0", "--region", "I-II")
    assert code == 0
    assert "capacity_bits=0.000000000 " in out


def test_capacity_accel_ratio(capsys):
    code, out, _ = run(capsys, "capacity", *MES_FLAGS, "--accel-ratio", "0", "--region", "I-I")
    assert code == 0
    assert "capacity_bits=0.8112781245 " in out


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["--cx", "-1", "--cy", "-1", "--cz", "2", "--ra", "0", "--rb", "0", "--region", "I-I"], "c_z in [-1, 1]"),
        (["--cx", "1", "--cy", "1", "--cz", "1", "--ra", "0", "--rb", "0", "--region", "I-I"], "--cx/--cy/--cz"),
        ([*MES_FLAGS, "--ra", "1.0", "--rb", "0", "--region", "I-I"], "--ra"),
        ([*MES_FLAGS, "--ra", "0", "--rb", "-0.1", "--region", "I-I"], "--rb"),
        ([*MES_FLAGS, "--ra", "0", "--rb", "0", "--region", "III"], "--region"),
        ([*MES_FLAGS, "--ra", "0", "--rb", "0", "--accel-ratio", "1", "--region", "I-I"], "--accel-ratio"),
        ([*MES_FLAGS, "--accel-ratio", "-1", "--region", "I-I"], "--accel-ratio"),
        ([*MES_FLAGS, "--ra", "0", "--region", "I-I"], "--rb"),
    ],
)
def test_capacity_usage_errors(capsys, argv, flag):
    code, out, err = run(capsys, "capacity", *argv)
    assert code == 2
    assert out == ""
    assert flag in err


def test_unparseable_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["capacity", "--cx", "abc"])
    assert exc.value.code == 2


def test_sweep_builtin(tmp_path, capsys):
    out = tmp_path / "mes.csv"
    code, stdout, _ = run(capsys, "sweep", "--config", "fig1-mes", "--output", str(out))
    assert code == 0
    assert stdout.strip() == f"wrote 99 records to {out}"
    assert len(read_csv(out)) == 33 * 3


def test_sweep_config_file_and_determinism(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"c": [-0.9, -0.8, -0.7], "steps": 5, "mode": "grid", "regions": ["II-I"]}))
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "sweep", "--config", str(cfg), "-o", str(a), "--verify")[0] == 0
    assert run(capsys, "sweep", "--config", str(cfg), "-o", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(read_csv(a)) == 25


@pytest.mark.parametrize(
    "content", [None, "{not json", json.dumps([1, 2]), json.dumps({"c": [0, 0, 0], "steps": 1})]
)
def test_sweep_config_errors(tmp_path, capsys, content):
    cfg = tmp_path / "bad.json"
    if content is not None:
        cfg.write_text(content)
    out = tmp_path / "out.csv"
    code, _, err = run(capsys, "sweep", "--config", str(cfg), "-o", str(out))
    assert code == 2
    assert "--config" in err
    assert not out.exists()


def test_sweep_write_failure_leaves_nothing(tmp_path, capsys):
    out = tmp_path / "missing-dir" / "out.csv"
    code, _, err = run(capsys, "sweep", "--config", "fig1-pes", "-o", str(out))
    assert code == 1
    assert "cannot write" in err
    assert not out.parent.exists()


def test_sweep_write_failure_keeps_previous_file(tmp_path, capsys, monkeypatch):
    from rindler_coding import cli

    out = tmp_path / "out.csv"
    out.write_text("previous")

    def refuse(src, dst):
        raise OSError("disk full")

    monkeypatch.setattr(cli.os, "replace", refuse)
    code, _, err = run(capsys, "sweep", "--config", "fig1-pes", "-o", str(out))
    assert code == 1
    assert "disk full" in err
    assert out.read_text() == "previous"
    assert os.listdir(tmp_path) == ["out.csv"]


def test_oracle_check_default(capsys):
    code, out, _ = run(capsys, "oracle-check")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "checked 1782 (state, r_a, r_b) points, seed=0"
    for token, line in zip(["I-I", "II-II", "I-II"], lines[1:]):
        assert line.split()[0] == token
        assert float(line.split("=")[1]) <= 1e-12


def test_oracle_check_endpoints_only(capsys):
    assert run(capsys, "oracle-check", "--grid", "2")[0] == 0


def test_oracle_check_seed_reproducible(capsys):
    a = run(capsys, "oracle-check", "--grid", "3", "--seed", "42", "--random", "5")
    b = run(capsys, "oracle-check", "--grid", "3", "--seed", "42", "--random", "5")
    assert a == b


def test_oracle_check_twirl(capsys):
    code, out, _ = run(capsys, "oracle-check", "--grid", "3", "--random", "2", "--twirl")
    assert code == 0
    assert "twirl" in out


def test_oracle_check_bad_grid(capsys):
    assert run(capsys, "oracle-check", "--grid", "1")[0] == 2


def test_oracle_check_reports_failure(capsys, monkeypatch):
    from rindler_coding import oracle, unruh

    real = unruh.channel_closed_form

    def broken(coeffs, ra, rb, pair):
        out = real(coeffs, ra, rb, pair)
        if pair is unruh.RegionPair.II_II:
            return type(out)(out.a11, out.a22 + 1e-9, out.a33, out.a44 - 1e-9, out.a14, out.a23)
        return out

    monkeypatch.setattr(oracle, "channel_closed_form", broken)
    code, _, err = run(capsys, "oracle-check", "--grid", "2", "--random", "0")
    assert code == 1
    assert "region=II-II" in err and "coefficient=" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "rindler_coding", "capacity", *MES_FLAGS, "--ra", "0", "--rb", "0", "--region", "II-II"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert "capacity_bits=1.000000000" in res.stdout
