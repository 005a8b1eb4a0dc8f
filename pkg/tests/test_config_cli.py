import numpy as np
import pytest

from gftrl.cli import main
from gftrl.config import (KNOWN_KEYS, apply_overrides, experiment_config,
                          load_config, parse_config_text)
from gftrl.errors import ConfigError

GOOD = """
# desk-scale protocol
game = matching_pennies
regularizer = euclidean
domain = simplex
T = 200
eta = 0.01
eta_rule = const
m = 2
n = 3
m_range = 0:2
n_range = 1:3
init = 0.55,0.45;0.45,0.55
seed = 7
"""


def test_parse_good_config():
    values = parse_config_text(GOOD)
    assert values["game"] == "matching_pennies"
    assert values["T"] == 200
    assert values["eta"] == pytest.approx(0.01)
    assert values["m_range"] == (0, 2)
    assert values["init"] == ((0.55, 0.45), (0.45, 0.55))
    assert values["seed"] == 7
    cfg = experiment_config(values)
    assert cfg.m == 2 and cfg.n == 3


def test_unknown_key_named():
    with pytest.raises(ConfigError, match="gamma"):
        parse_config_text("gamma = 3")


def test_line_number_in_diagnostic():
    with pytest.raises(ConfigError, match="<config>:2"):
        parse_config_text("T = 10\nT = x")


def test_malformed_line_rejected():
    with pytest.raises(ConfigError, match="key = value"):
        parse_config_text("just words")


def test_value_type_errors():
    for text in ("T = 2.5", "eta = fast", "m_range = 0-2", "m_range = 1:2:3",
                 "init = a,b"):
        with pytest.raises(ConfigError):
            parse_config_text(text)


def test_uniform_init_is_default_start():
    assert parse_config_text("init = uniform")["init"] is None


def test_overrides_win_over_file():
    values = parse_config_text(GOOD)
    merged = apply_overrides(values, ["T=500", "n = 4"])
    assert merged["T"] == 500 and merged["n"] == 4
    assert values["T"] == 200  # original untouched
    with pytest.raises(ConfigError):
        apply_overrides(values, ["T:500"])
    with pytest.raises(ConfigError, match="bogus"):
        apply_overrides(values, ["bogus=1"])


def test_known_keys_cover_documented_set():
    assert set(KNOWN_KEYS) == {"game", "regularizer", "domain", "T", "eta",
                               "eta_rule", "m", "n", "m_range", "n_range",
                               "init", "seed", "out"}


def test_load_config_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "absent.cfg"))


def write_cfg(tmp_path, extra=""):
    path = tmp_path / "run.cfg"
    path.write_text(GOOD + extra)
    return str(path)


def test_cli_run_exit_zero(tmp_path, capsys):
    rc = main(["run", "--config", write_cfg(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "RegTot=" in out and "m=2 n=3" in out
    assert "stability:" in out  # n = m + 1 report


def test_cli_run_bad_eta_exit_two(tmp_path, capsys):
    rc = main(["run", "--config", write_cfg(tmp_path), "--set", "eta=-1"])
    assert rc == 2
    assert "eta" in capsys.readouterr().err


def test_cli_unknown_set_key_exit_two(tmp_path, capsys):
    rc = main(["run", "--config", write_cfg(tmp_path), "--set", "speed=9"])
    assert rc == 2
    assert "speed" in capsys.readouterr().err


def test_cli_unknown_game_exit_two(capsys):
    rc = main(["run", "--set", "game=checkers", "--set", "T=10"])
    assert rc == 2
    assert "checkers" in capsys.readouterr().err


def test_cli_sweep_writes_csv(tmp_path, capsys):
    out = tmp_path / "grid.csv"
    rc = main(["sweep", "--config", write_cfg(tmp_path), "--out", str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "m,n,eta,T,reg_total,log10_reg"
    assert len(lines) - 1 == 3 * 3


def test_cli_series(tmp_path):
    out = tmp_path / "series.csv"
    rc = main(["series", "--config", write_cfg(tmp_path),
               "--out", str(out), "--n-list", "1,3"])
    assert rc == 0
    assert out.read_text().splitlines()[0] == "n,t,reg_total"


def test_cli_scaling(tmp_path, capsys):
    out = tmp_path / "scaling.csv"
    rc = main(["scaling", "--config", write_cfg(tmp_path),
               "--out", str(out), "--T-list", "100,200"])
    assert rc == 0
    assert "slope[const]" in capsys.readouterr().out
    assert out.read_text().splitlines()[0] == "T,eta_rule,eta,reg_total"


def test_cli_trajectory(tmp_path, capsys):
    out = tmp_path / "traj.csv"
    cfg = tmp_path / "traj.cfg"
    cfg.write_text("game = weighted_rps\nregularizer = entropic\nT = 300\n"
                   "eta = 0.1\nm = 4\ninit = 0.2,0.5,0.3;0.2,0.5,0.3\n")
    rc = main(["trajectory", "--config", str(cfg), "--out", str(out),
               "--n-list", "5"])
    assert rc == 0
    assert "n=5" in capsys.readouterr().out
    assert out.read_text().splitlines()[0] == "n,t,player,coord_index,value,dis"


def test_cli_csv_headers_identify_kind(tmp_path):
    """Every emitted schema starts with a distinct header line."""
    headers = {"m,n,eta,T,reg_total,log10_reg", "n,t,reg_total",
               "T,eta_rule,eta,reg_total", "n,t,player,coord_index,value,dis"}
    assert len(headers) == 4


def test_cli_verify_single_suite(capsys):
    rc = main(["verify", "--suite", "recurrence"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "[recurrence] PASS" in out
    assert "checks passed" in out


def test_cli_verify_unknown_suite(capsys):
    rc = main(["verify", "--suite", "perpetual_motion"])
    assert rc == 2
    assert "perpetual_motion" in capsys.readouterr().err


def test_cli_verify_tolerance_override(capsys):
    rc = main(["verify", "--suite", "recurrence",
               "--tol", "recurrence.sup_tol=1e-30"])
    assert rc == 1  # impossible tolerance flips the suite to failure
    assert "FAIL" in capsys.readouterr().out


def test_cli_verify_bad_tolerance_syntax(capsys):
    rc = main(["verify", "--suite", "recurrence", "--tol", "suptol=1"])
    assert rc == 2


def test_cli_help_lists_every_config_key(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
    text = capsys.readouterr().out
    for key in ("game", "regularizer", "domain", "T", "eta", "eta_rule",
                "m_range", "n_range", "init", "seed", "out"):
        assert key in text
