import json
import subprocess
import sys
from fractions import Fraction

from nstar.cli import main
from nstar.polynomials import x
from nstar.starcore import ThetaConfig, star_n


def run_cli(args, cwd=None):
    return subprocess.run([sys.executable, "-m", "nstar.cli", *args],
                          capture_output=True, text=True, cwd=cwd)


def test_star_output_matches_engine_serialization(tmp_path):
    proc = run_cli(["star", "--n", "3", "--theta", "1,1,1", "x1", "x2", "x3"],
                   cwd=tmp_path)
    assert proc.returncode == 0
    cfg = ThetaConfig(3, (Fraction(1),) * 3)
    expected = str(star_n([x(1, 3), x(2, 3), x(3, 3)], cfg))
    assert proc.stdout == expected + "\n"
    assert proc.stdout.rstrip("\n") == "x1*x2*x3 + (1/2)i"


def test_star_json_format(tmp_path, capsys):
    code = main(["star", "--format", "json", "--theta", "1,1,1", "x1", "x2", "x3"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 3
    assert {"exponents": [0, 0, 0], "re_num": 0, "re_den": 1,
            "im_num": 1, "im_den": 2} in data["terms"]


def test_star_wave_mode(capsys):
    code = main(["star", "--theta", "0,0,0", "wave(1,0,0)", "wave(0,1,0)", "wave(0,0,1)"])
    assert code == 0
    out = capsys.readouterr().out
    assert "exp(i[1.0, 1.0, 1.0].x)" in out


def test_bracket_and_conj(capsys):
    assert main(["bracket", "--theta", "1,1,1", "x1", "x3", "x2"]) == 0
    assert capsys.readouterr().out.strip() == "i"
    assert main(["conj", "--theta", "1,1,1", "x1", "x2", "x3"]) == 0
    assert capsys.readouterr().out.strip() == "x1*x2*x3 - (1/2)i"


def test_usage_error_exit_codes(tmp_path):
    proc = run_cli(["star", "x1", "x2"], cwd=tmp_path)  # wrong arity
    assert proc.returncode == 2
    body = json.loads(proc.stderr)
    assert body["error"]["code"] == "usage"

    proc = run_cli(["star", "x4", "x1", "x2"], cwd=tmp_path)  # parse error
    assert proc.returncode == 2
    body = json.loads(proc.stderr)
    assert body["error"]["code"] == "parse-error"
    assert body["error"]["line"] == 1

    proc = run_cli(["--bogus-flag"], cwd=tmp_path)  # argparse usage error
    assert proc.returncode == 2


def test_spectrum_value(capsys):
    code = main(["spectrum", "--k", "1", "--nbar", "0,0,0", "--theta", "1,1,1"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "E = 3/2"


def test_spectrum_table_csv(tmp_path, capsys):
    out = tmp_path / "spectrum.csv"
    code = main(["spectrum", "--k", "2", "--nbar", "1,1,0", "--theta", "1,1,1",
                 "--lambda0", "1,0,0", "--output", str(out)])
    assert code == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "k,nbar,energy"
    assert len(rows) == 4


def test_kernel_command(capsys):
    code = main(["kernel", "--theta", "2,0,0", "1,0,0", "0,1,0", "0,0,1"])
    assert code == 0
    out = capsys.readouterr().out
    assert "exponent = 1.0" in out


def test_omega_command(capsys):
    code = main(["omega", "0,1,0", "0,0,1"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "omega = [1.0, 0.0, 0.0]"


def test_verify_deterministic_and_exit_zero(tmp_path):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    p1 = run_cli(["verify", "--seed", "42", "--trials", "3", "--output", str(out1)],
                 cwd=tmp_path)
    p2 = run_cli(["verify", "--seed", "42", "--trials", "3", "--output", str(out2)],
                 cwd=tmp_path)
    assert p1.returncode == 0  # guaranteed claims hold
    assert p2.returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    reports = json.loads(out1.read_text())
    assert {r["claim"] for r in reports} >= {"associativity", "jacobi-six-term"}


def test_residual_csv(tmp_path):
    out = tmp_path / "resid.csv"
    proc = run_cli(["residual", "--k", "0", "--order", "2", "--points", "4",
                    "--seed", "7", "--theta", "1,1,1", "--output", str(out)],
                   cwd=tmp_path)
    assert proc.returncode == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "order,point_index,ground_residual,eigen_residual"
    assert len(rows) == 1 + 3 * 4


def test_oracle_command(capsys):
    code = main(["oracle", "--theta", "2,0,0", "--N", "8",
                 "wave(1,0,0)", "wave(0,1,0)", "wave(0,0,1)"])
    assert code == 0
    out = capsys.readouterr().out
    err = float(out.split("=")[1])
    assert err <= 1e-9


def test_config_file_defaults_and_flag_precedence(tmp_path):
    (tmp_path / "nstar.json").write_text(json.dumps({"n": 3, "theta": "2,0,0"}))
    proc = run_cli(["star", "x1", "x2", "x3"], cwd=tmp_path)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "x1*x2*x3 + i"  # theta from config
    proc = run_cli(["star", "--theta", "1,1,1", "x1", "x2", "x3"], cwd=tmp_path)
    assert proc.stdout.strip() == "x1*x2*x3 + (1/2)i"  # flag wins


def test_malformed_config_is_usage_error(tmp_path):
    (tmp_path / "nstar.json").write_text("{not json")
    proc = run_cli(["star", "x1", "x2", "x3"], cwd=tmp_path)
    assert proc.returncode == 2
    assert json.loads(proc.stderr)["error"]["code"] == "config"
