"""End-to-end tests for the command-line interface.

Every test drives cli.main(argv) directly and inspects the files it leaves
behind; nothing here shells out.
"""

import hashlib
import json
import math

import numpy as np
import pytest

from burgers_dqm import cli, problem1
from burgers_dqm.cli import main
from burgers_dqm.exceptions import ConfigError


def _read_csv(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

def test_solve_writes_solution_errors_and_manifest(tmp_path):
    out = tmp_path / "run"
    rc = main(["solve", "--problem", "p1", "--nx", "21", "--dt", "0.01",
               "--t-end", "0.1", "--out", str(out)])
    assert rc == 0
    sol = out / "solution_t0.1.csv"
    errs = out / "errors.csv"
    man = out / "manifest.json"
    assert sol.exists() and errs.exists() and man.exists()

    header, rows = _read_csv(sol)
    assert header == ["x", "u", "v", "exact_u", "exact_v", "err_u", "err_v"]
    assert len(rows) == 21

    eh, erows = _read_csv(errs)
    assert eh == ["t", "n", "dt", "l2_u", "linf_u", "l2_v", "linf_v"]
    assert len(erows) == 1
    assert float(erows[0][0]) == pytest.approx(0.1)
    assert float(erows[0][4]) <= 1e-3  # linf_u small on this short run


def test_solve_manifest_hashes_match_files(tmp_path):
    out = tmp_path / "run"
    main(["solve", "--problem", "p1", "--nx", "21", "--dt", "0.01",
          "--t-end", "0.05", "--out", str(out)])
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["version"]
    assert manifest["files"]
    for name, entry in manifest["files"].items():
        digest = hashlib.sha256((out / name).read_bytes()).hexdigest()
        assert digest == entry["sha256"]
        assert entry["bytes"] == (out / name).stat().st_size
    assert set(manifest["phases_seconds"]) >= {"integrate", "output"}


def test_solve_is_deterministic(tmp_path):
    args = ["solve", "--problem", "p1", "--nx", "21", "--dt", "0.01",
            "--t-end", "0.05"]
    a = tmp_path / "a"
    b = tmp_path / "b"
    main(args + ["--out", str(a)])
    main(args + ["--out", str(b)])
    for name in ("solution_t0.05.csv", "errors.csv"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_solve_zero_horizon_dumps_initial_condition(tmp_path):
    out = tmp_path / "run"
    rc = main(["solve", "--problem", "p1", "--nx", "11", "--dt", "0.01",
               "--t-end", "0", "--out", str(out)])
    assert rc == 0
    _, rows = _read_csv(out / "solution_t0.csv")
    prob = problem1()
    for row in rows:
        x, u = float(row[0]), float(row[1])
        assert u == pytest.approx(prob.phi(x), abs=1e-12)


def test_solve_snapshots_and_multiple_error_rows(tmp_path):
    out = tmp_path / "run"
    rc = main(["solve", "--problem", "p1", "--nx", "21", "--dt", "0.01",
               "--t-end", "0.1", "--snapshots", "0.05,0.1", "--out", str(out)])
    assert rc == 0
    assert (out / "solution_t0.05.csv").exists()
    assert (out / "solution_t0.1.csv").exists()
    _, erows = _read_csv(out / "errors.csv")
    assert [float(r[0]) for r in erows] == pytest.approx([0.05, 0.1])


def test_solve_2d_has_y_column(tmp_path):
    out = tmp_path / "run"
    rc = main(["solve", "--problem", "p4", "--nx", "9", "--dt", "0.01",
               "--t-end", "0.05", "--out", str(out)])
    assert rc == 0
    header, rows = _read_csv(out / "solution_t0.05.csv")
    assert header[:2] == ["x", "y"]
    assert len(rows) == 81


def test_solve_rejects_unknown_problem(tmp_path):
    out = tmp_path / "nothing"
    rc = main(["solve", "--problem", "p9", "--out", str(out)])
    assert rc == 2
    assert not out.exists()


def test_solve_rejects_non_dividing_dt(tmp_path):
    rc = main(["solve", "--problem", "p1", "--nx", "11", "--dt", "0.3",
               "--t-end", "1.0", "--out", str(tmp_path / "x")])
    assert rc == 2


def test_solve_rejects_re_for_1d_problem(tmp_path):
    rc = main(["solve", "--problem", "p1", "--nx", "11", "--re", "50",
               "--out", str(tmp_path / "x")])
    assert rc == 2


@pytest.mark.filterwarnings("ignore:overflow", "ignore:invalid value")
def test_solve_unstable_run_exits_3(tmp_path, capsys):
    rc = main(["solve", "--problem", "p4", "--nx", "21", "--dt", "1",
               "--t-end", "100", "--out", str(tmp_path / "x")])
    assert rc == 3
    assert "instability" in capsys.readouterr().err


def test_solve_with_stability_check(tmp_path, capsys):
    out = tmp_path / "run"
    rc = main(["solve", "--problem", "p1", "--nx", "21", "--dt", "0.001",
               "--t-end", "0.01", "--stability-check", "--out", str(out)])
    assert rc == 0
    assert "stability" in capsys.readouterr().out.lower()


# ---------------------------------------------------------------------------
# config files
# ---------------------------------------------------------------------------

def test_config_file_round_trip():
    # the parser keeps raw strings; coercion is per-key and must round-trip
    cfg = {"problem": "p1", "nx": 21, "dt": 0.01, "t_end": 0.1,
           "stability_check": True, "snapshots": [0.05, 0.1]}
    text = cli.serialize_config(cfg)
    back = {k: cli.coerce_value(k, v) for k, v in cli.parse_config_text(text).items()}
    assert back == cfg
    again = {k: cli.coerce_value(k, v)
             for k, v in cli.parse_config_text(cli.serialize_config(back)).items()}
    assert again == back


def test_config_file_drives_solve_and_flags_override(tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("problem = p1\nnx = 11\ndt = 0.01\nt_end = 0.1\n")
    out = tmp_path / "run"
    rc = main(["solve", "--config", str(conf), "--t-end", "0.05",
               "--out", str(out)])
    assert rc == 0
    assert (out / "solution_t0.05.csv").exists()  # flag wins over file
    _, rows = _read_csv(out / "solution_t0.05.csv")
    assert len(rows) == 11  # file value used where no flag given


def test_config_rejects_unknown_keys(tmp_path):
    conf = tmp_path / "bad.conf"
    conf.write_text("problem = p1\nwavelength = 3\n")
    rc = main(["solve", "--config", str(conf), "--out", str(tmp_path / "x")])
    assert rc == 2


def test_config_parser_errors():
    with pytest.raises(ConfigError):
        cli.parse_config_text("just words\n")
    with pytest.raises(ConfigError):
        cli.coerce_value("nx", "abc")
    with pytest.raises(ConfigError):
        cli.coerce_value("dt", "fast")


# ---------------------------------------------------------------------------
# convergence
# ---------------------------------------------------------------------------

def test_convergence_writes_rate_table(tmp_path):
    out = tmp_path / "conv"
    rc = main(["convergence", "--problem", "p1", "--n-list", "10,20",
               "--dt", "0.01", "--t-end", "0.1", "--out", str(out)])
    assert rc == 0
    header, rows = _read_csv(out / "convergence.csv")
    assert header == ["n", "l2", "r_l2", "linf", "r_linf"]
    assert len(rows) == 2
    assert rows[0][2] == ""  # no rate on the first grid
    assert float(rows[1][2]) > 1.0


def test_convergence_requires_doubling(tmp_path):
    rc = main(["convergence", "--problem", "p1", "--n-list", "10,30",
               "--dt", "0.01", "--t-end", "0.1", "--out", str(tmp_path / "x")])
    assert rc == 2


def test_convergence_single_grid_has_empty_rates(tmp_path):
    out = tmp_path / "conv"
    rc = main(["convergence", "--problem", "p1", "--n-list", "10",
               "--dt", "0.01", "--t-end", "0.1", "--out", str(out)])
    assert rc == 0
    _, rows = _read_csv(out / "convergence.csv")
    assert len(rows) == 1
    assert rows[0][2] == "" and rows[0][4] == ""


# ---------------------------------------------------------------------------
# stability
# ---------------------------------------------------------------------------

def test_stability_outputs_spectra_and_verdicts(tmp_path, capsys):
    out = tmp_path / "stab"
    rc = main(["stability", "--nx", "11", "--dt-list", "1e-4,1e-2,10",
               "--out", str(out)])
    assert rc == 0
    header, rows = _read_csv(out / "spectra.csv")
    assert header == ["matrix", "index", "re", "im"]
    assert len(rows) == 2 * (11 - 2)
    assert {r[0] for r in rows} == {"lambda1", "lambda2"}

    _, srows = _read_csv(out / "stability.csv")
    verdicts = [r[1] for r in srows]
    assert verdicts[0] == "true"
    assert verdicts[-1] == "false"
    assert (out / "assembled_spectrum.csv").exists()
    assert "max|Re|/max|Im|" in capsys.readouterr().out


def test_stability_requires_dt_list(tmp_path):
    rc = main(["stability", "--nx", "11", "--out", str(tmp_path / "x")])
    assert rc == 2


# ---------------------------------------------------------------------------
# weights dump
# ---------------------------------------------------------------------------

def test_weights_dump_both_orders(tmp_path):
    out = tmp_path / "w"
    rc = main(["weights-dump", "--nx", "7", "--a", "0", "--b", "1",
               "--out", str(out)])
    assert rc == 0
    for name in ("weights_order1.csv", "weights_order2.csv"):
        header, rows = _read_csv(out / name)
        assert header == ["row", "col", "value"]
        assert len(rows) == 49


def test_weights_dump_single_order(tmp_path):
    out = tmp_path / "w"
    rc = main(["weights-dump", "--nx", "7", "--a", "0", "--b", "1",
               "--order", "1", "--out", str(out)])
    assert rc == 0
    assert (out / "weights_order1.csv").exists()
    assert not (out / "weights_order2.csv").exists()


# ---------------------------------------------------------------------------
# table reproduction (quick overrides keep runtimes tiny)
# ---------------------------------------------------------------------------

def test_run_table_quick_comparison(tmp_path, capsys):
    rc = cli.run_table("1.1", out=str(tmp_path / "t"), n_values=[10, 20])
    assert rc == 0
    output = capsys.readouterr().out
    assert "computed vs published" in output
    header, rows = _read_csv(tmp_path / "t" / "table_1_1_comparison.csv")
    assert header[0] == "N"
    assert len(rows) == 2
    # computed errors land within an order of magnitude of the published ones
    ratio = float(rows[0][3])
    assert 0.1 <= ratio <= 10.0


def test_table_cli_rejects_unknown_key(tmp_path):
    rc = main(["table", "9.9", "--out", str(tmp_path / "x")])
    assert rc == 2


def test_version_flag(capsys):
    rc = main(["--version"])
    assert rc == 0
    assert "burgers-dqm" in capsys.readouterr().out
