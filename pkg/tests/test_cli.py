import json

import pytest

from rsse.cli import main
from rsse.presets import builtin_presets, load_presets


def run_csv(tmp_path, argv, name="out.csv"):
    path = tmp_path / name
    code = main(argv + ["--output", str(path)])
    return code, path.read_text() if path.exists() else ""


def csv_rows(text):
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]


def csv_header(text):
    pairs = {}
    for line in text.splitlines():
        if line.startswith("# ") and " = " in line:
            key, value = line[2:].split(" = ", 1)
            pairs[key] = value
    return pairs


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------


def test_solve_hydrogen_numerov(tmp_path):
    code, text = run_csv(
        tmp_path,
        ["solve", "--preset", "hydrogen", "--n-max", "3", "--method", "numerov", "--format", "csv"],
    )
    assert code == 0
    rows = csv_rows(text)
    assert len(rows) == 3
    bohr = [-0.5, -0.125, -1.0 / 18.0]
    for row, expected in zip(rows, bohr):
        assert abs(float(row["epsilon_hartree"]) - expected) < 2e-6
    assert [int(r["nodes"]) for r in rows] == [0, 1, 2]


def test_solve_oscillator_single_row(tmp_path):
    code, text = run_csv(tmp_path, ["solve", "--preset", "oscillator", "--n-max", "1"])
    assert code == 0
    rows = csv_rows(text)
    assert len(rows) == 1
    assert abs(float(rows[0]["epsilon_hartree"]) - 0.5) < 5e-6


def test_solve_coulomb_r_min_zero_exits_2(tmp_path, capsys):
    code = main(["solve", "--preset", "coulomb", "--r-min", "0", "--output", str(tmp_path / "x.csv")])
    assert code == 2
    assert "r_min" in capsys.readouterr().err


def test_solve_wavefunction_dump(tmp_path):
    wf_dir = tmp_path / "wf"
    code, _ = run_csv(
        tmp_path,
        [
            "solve", "--preset", "oscillator", "--n-max", "2",
            "--wavefunctions-dir", str(wf_dir),
        ],
    )
    assert code == 0
    files = sorted(wf_dir.glob("*.dat"))
    assert [f.name for f in files] == [
        "oscillator_fd_state0.dat",
        "oscillator_fd_state1.dat",
    ]
    lines = files[0].read_text().splitlines()
    assert lines[0].startswith("# ")  # config header block
    data = [line.split() for line in lines if not line.startswith("#")]
    assert len(data) == 3000  # one (r, u) pair per grid node
    assert all(len(pair) == 2 for pair in data[:10])
    assert float(data[0][1]) == 0.0 and float(data[-1][1]) == 0.0


def test_solve_header_echoes_config(tmp_path):
    code, text = run_csv(tmp_path, ["solve", "--preset", "oscillator", "--n-max", "1"])
    header = csv_header(text)
    assert header["command"] == "solve"
    assert header["preset"] == "oscillator"
    assert header["units_energy"] == "hartree"
    assert header["units_hbar"] == "1"
    assert "version" in header


# ---------------------------------------------------------------------------
# compare
# ---------------------------------------------------------------------------


def test_compare_hydrogen_json(tmp_path):
    path = tmp_path / "cmp.json"
    code = main(
        ["compare", "--preset", "hydrogen", "--n-max", "2", "--format", "json", "--output", str(path)]
    )
    assert code == 0
    payload = json.loads(path.read_text())
    rows = {row["state"]: row for row in payload["rows"]}
    assert abs(rows["1s1/2"]["delta_rel_vs_dirac"]) < 1e-9
    assert rows["2s1/2"]["B_rel"] == rows["2p1/2"]["B_rel"]
    assert payload["config"]["preset"] == "hydrogen"


def test_compare_positronium_value(tmp_path):
    code, text = run_csv(tmp_path, ["compare", "--preset", "positronium", "--n-max", "1"])
    assert code == 0
    row = csv_rows(text)[0]
    assert abs(float(row["B_rel"]) - 0.2500008320579529) < 1e-10


def test_compare_oscillator_drops_dirac_columns(tmp_path):
    code, text = run_csv(tmp_path, ["compare", "--preset", "oscillator", "--n-max", "2"])
    assert code == 0
    rows = csv_rows(text)
    assert "B_dirac" not in rows[0]
    assert "B_rel" in rows[0]


def test_compare_unknown_preset_exits_2(tmp_path, capsys):
    code = main(["compare", "--preset", "unknown", "--output", str(tmp_path / "x.csv")])
    assert code == 2
    err = capsys.readouterr().err
    assert "hydrogen" in err and "positronium" in err


# ---------------------------------------------------------------------------
# kinematics / invert-demo
# ---------------------------------------------------------------------------


def test_kinematics_beta_06(tmp_path):
    code, text = run_csv(tmp_path, ["kinematics", "--beta", "0.6"])
    assert code == 0
    row = csv_rows(text)[0]
    assert float(row["gamma"]) == pytest.approx(1.25, rel=1e-12)
    assert float(row["chi_over_theta"]) == pytest.approx(1.0 / 3.0, rel=1e-12)
    assert float(row["effective_mass"]) == pytest.approx(1.25, rel=1e-12)
    assert float(row["phase_residual"]) < 1e-10


def test_kinematics_rest_row_has_no_wavelength(tmp_path):
    code, text = run_csv(tmp_path, ["kinematics", "--beta", "0"])
    assert code == 0
    row = csv_rows(text)[0]
    assert row["lambda"] == ""  # p = 0: wavelength absent
    assert float(row["chi_over_theta"]) == 0.0


def test_kinematics_beta_list(tmp_path):
    code, text = run_csv(tmp_path, ["kinematics", "--beta", "0.1,0.5,0.9"])
    assert code == 0
    assert len(csv_rows(text)) == 3


def test_kinematics_superluminal_exits_2(tmp_path, capsys):
    code = main(["kinematics", "--beta", "1.2", "--output", str(tmp_path / "x.csv")])
    assert code == 2
    assert "beta" in capsys.readouterr().err


def test_invert_demo_quantum_number_table(tmp_path):
    code, text = run_csv(tmp_path, ["invert-demo"])
    assert code == 0
    rows = {row["state"]: row for row in csv_rows(text)}
    assert (int(rows["electron"]["Q"]), int(rows["electron"]["L"])) == (-1, 1)
    assert (int(rows["positron"]["Q"]), int(rows["positron"]["L"])) == (1, -1)
    assert rows["electron"]["branch"] == "matter"
    assert rows["positron"]["branch"] == "antimatter"
    assert float(rows["positron"]["eval_identity_residual"]) <= 1e-12
    # energies stay positive on both branches
    assert float(rows["positron"]["E"]) > 0.0


# ---------------------------------------------------------------------------
# convergence
# ---------------------------------------------------------------------------


def test_convergence_fd_slope(tmp_path):
    path = tmp_path / "conv.json"
    code = main(
        ["convergence", "--preset", "oscillator", "--method", "fd", "--format", "json", "--output", str(path)]
    )
    assert code == 0
    payload = json.loads(path.read_text())
    assert abs(payload["slope"] - 2.0) < 0.1
    errors = [row["abs_error"] for row in payload["rows"]]
    assert all(b < a for a, b in zip(errors, errors[1:]))


# ---------------------------------------------------------------------------
# config handling and determinism
# ---------------------------------------------------------------------------


def test_config_file_overrides_defaults_flags_override_file(tmp_path):
    cfg = tmp_path / "run.conf"
    cfg.write_text("preset = positronium\nn_max = 1\n")
    code, text = run_csv(tmp_path, ["compare", "--config", str(cfg)], name="a.csv")
    assert code == 0
    assert csv_header(text)["preset"] == "positronium"
    code, text = run_csv(
        tmp_path, ["compare", "--config", str(cfg), "--preset", "hydrogen"], name="b.csv"
    )
    assert code == 0
    assert csv_header(text)["preset"] == "hydrogen"


def test_unknown_config_key_rejected(tmp_path, capsys):
    cfg = tmp_path / "run.conf"
    cfg.write_text("mystery = 1\n")
    code = main(["compare", "--config", str(cfg), "--output", str(tmp_path / "x.csv")])
    assert code == 2
    assert "mystery" in capsys.readouterr().err


def test_byte_identical_reruns(tmp_path):
    args = ["compare", "--preset", "hydrogen", "--n-max", "2"]
    _, first = run_csv(tmp_path, args, name="one.csv")
    _, second = run_csv(tmp_path, args, name="two.csv")
    assert first == second
    args = ["solve", "--preset", "oscillator", "--n-max", "2"]
    _, first = run_csv(tmp_path, args, name="three.csv")
    _, second = run_csv(tmp_path, args, name="four.csv")
    assert first == second


# ---------------------------------------------------------------------------
# preset loading
# ---------------------------------------------------------------------------


def test_builtin_presets_cover_benchmarks():
    presets = builtin_presets()
    for name in ("hydrogen", "coulomb", "hydrogen_finite_mass", "positronium", "oscillator"):
        assert name in presets


def test_preset_dir_extends_and_overrides(tmp_path, monkeypatch):
    (tmp_path / "tight_oscillator.conf").write_text(
        "potential = harmonic\nomega = 1\nfd_r_min = -6\nfd_r_max = 6\nfd_n = 500\n"
    )
    (tmp_path / "hydrogen.conf").write_text(
        "potential = coulomb\nZ = 1\nfd_r_min = 0.001\nfd_r_max = 25\nfd_n = 1500\n"
    )
    monkeypatch.setenv("RSSE_PRESET_DIR", str(tmp_path))
    presets = load_presets()
    assert "tight_oscillator" in presets
    assert presets["hydrogen"].fd_grid.n == 1500  # override of a builtin
    code = main(
        ["solve", "--preset", "tight_oscillator", "--n-max", "1", "--output", str(tmp_path / "o.csv")]
    )
    assert code == 0
    row = csv_rows((tmp_path / "o.csv").read_text())[0]
    assert abs(float(row["epsilon_hartree"]) - 0.5) < 1e-3
