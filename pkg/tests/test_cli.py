import io
import json

import pytest

import main
from src.cli.BcfwClass import BcfwClass
from src.cli.RunLogClass import RunLogClass
from src.config.JsonConfigManager import DEFAULTS, JsonConfigManager
from src.utils.ExceptionsClass import ConfigError

PROFILES = {
    "sections": {
        "RAPIDOS": {
            "description": "Barridos cortos",
            "seed": 4,
            "samples": 2,
            "configs": [
                {"name": "n6-k1", "n": 6, "k": 1},
                {"name": "n7-k2", "n": 7, "k": 2, "samples": 3},
            ],
        }
    }
}


def _lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def _run(capsys, *argv):
    status = main.main(list(argv) + ["--no-log", "--quiet"])
    return status, _lines(capsys.readouterr().out)


@pytest.fixture
def profiles_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps(PROFILES), encoding="utf-8")
    return str(path)


# Comandos

def test_enumerate_n8_k2(capsys):
    status, rows = _run(capsys, "enumerate", "--n", "8", "--k", "2")
    assert status == 0
    assert len(rows) == 20
    assert [row["index"] for row in rows] == list(range(1, 21))
    assert {row["k"] for row in rows} == {2}


def test_enumerate_all_k(capsys):
    status, rows = _run(capsys, "enumerate", "--n", "6")
    assert status == 0
    assert [row["k"] for row in rows] == [0, 1, 1, 1, 2]


def test_convert_to_perm(capsys):
    status, rows = _run(capsys, "convert", "--to", "perm", "--diagram", "n=14; 1-11, 3-6, 8-10")
    assert status == 0
    (row,) = rows
    assert row["permutation"]["images"] == [2, 11, 4, 6, 5, 7, 1, 9, 10, 12, 3, 14, 13, 8]


def test_convert_accepts_json_and_walks(capsys):
    diagram = json.dumps({"n": 14, "chords": [[1, 11], [3, 6], [8, 10]]})
    _, (row,) = _run(capsys, "convert", "--to", "walks", "--diagram", diagram)
    assert row["walks"] == {"n": 14, "a_vertical": [2, 8, 10], "b_vertical": [1, 3, 8]}
    _, (back,) = _run(capsys, "convert", "--to", "diagram", "--walks", json.dumps(row["walks"]))
    assert back["diagram"] == "n=14; 1-11, 3-6, 8-10"


def test_convert_oplus_round_trip(capsys):
    _, (row,) = _run(capsys, "convert", "--to", "oplus", "--diagram", "n=8; 1-6, 2-4, 4-6")
    _, (back,) = _run(capsys, "convert", "--to", "diagram", "--oplus", json.dumps(row["oplus"]))
    assert back["diagram"] == "n=8; 1-6, 2-4, 4-6"


def test_sample_is_deterministic(capsys):
    first = _run(capsys, "sample", "--diagram", "n=7; 1-3", "--samples", "2", "--seed", "5")
    second = _run(capsys, "sample", "--diagram", "n=7; 1-3", "--samples", "2", "--seed", "5")
    assert first == second
    assert [row["seed"] for row in first[1]] == [5, 6]


def test_boundaries_of_a_single_chord(capsys):
    status, rows = _run(capsys, "boundaries", "--diagram", "n=6; 1-3")
    assert status == 0
    assert [row["star"] for row in rows] == ["eps_hat_1", "alpha_1", "beta_1", "gamma_hat_1", "delta_hat_1"]
    assert rows[1]["partner"] == "n=6; 2-4"


def test_invert_round_trip(capsys):
    status, rows = _run(capsys, "invert", "--diagram", "n=7; 1-3", "--samples", "1", "--zs", "2")
    assert status == 0
    assert [row["z"] for row in rows] == [0, 1]


def test_verify_small_suites(capsys):
    argv = ["verify", "--n", "6", "--k", "1", "--seed", "0", "--samples", "1",
            "--suites", "counts", "permutations", "domino", "boundaries"]
    status, rows = _run(capsys, *argv)
    assert status == 0
    assert [row["suite"] for row in rows] == ["counts", "permutations", "domino", "boundaries"]
    assert all(row["failed"] == 0 and row["witness"] is None for row in rows)
    assert _run(capsys, *argv) == (status, rows)


def test_unknown_suite_is_reported(capsys):
    status, rows = _run(capsys, "verify", "--n", "6", "--suites", "magia")
    assert status == 1
    assert rows[0]["type"] == "InvalidIndexError"


def test_invalid_diagram_gives_json_counterexample(capsys):
    status, rows = _run(capsys, "convert", "--to", "perm", "--diagram", "n=6; 1-2")
    assert status == 1
    assert rows[0]["type"] == "InvalidDiagramError"
    assert "witness" in rows[0]


def test_usage_errors_exit_with_2():
    with pytest.raises(SystemExit) as raised:
        main.main(["enumerate", "--n", "seis"])
    assert raised.value.code == 2
    with pytest.raises(SystemExit):
        main.main(["volar"])


def test_missing_n_is_a_config_error(capsys):
    status, rows = _run(capsys, "enumerate")
    assert status == 1
    assert rows[0]["type"] == "ConfigError"


def test_text_format(capsys):
    main.main(["enumerate", "--n", "5", "--k", "1", "--format", "text", "--no-log", "--quiet"])
    assert capsys.readouterr().out.strip() == "n: 5  k: 1  index: 1  diagram: n=5; 1-3"


# Configuración

def test_profile_inherits_section_values(profiles_file):
    profile = JsonConfigManager(profiles_file).find_profile("RAPIDOS/n7-k2")
    assert (profile["n"], profile["k"], profile["seed"], profile["samples"]) == (7, 2, 4, 3)


def test_command_line_overrides_profile(profiles_file):
    config = JsonConfigManager(profiles_file).build_run_config({"command": "enumerate", "k": 0, "seed": None}, "RAPIDOS/n6-k1")
    assert (config["n"], config["k"], config["seed"], config["samples"]) == (6, 0, 4, 2)
    assert config["zs"] == DEFAULTS["zs"]
    assert config["profile"] == "RAPIDOS/n6-k1"


def test_missing_profiles_are_config_errors(profiles_file, tmp_path):
    with pytest.raises(ConfigError):
        JsonConfigManager(profiles_file).find_profile("RAPIDOS/nada")
    with pytest.raises(ConfigError):
        JsonConfigManager(profiles_file).find_profile("OTRA/n6-k1")
    with pytest.raises(ConfigError):
        JsonConfigManager(str(tmp_path / "no.json")).find_profile("RAPIDOS/n6-k1")
    assert JsonConfigManager(str(tmp_path / "no.json")).build_run_config({"command": "enumerate"})["seed"] == DEFAULTS["seed"]


def test_main_reads_the_profile(capsys, monkeypatch, profiles_file):
    monkeypatch.setattr(main, "CONFIG_FILE", profiles_file)
    status, rows = _run(capsys, "enumerate", "--profile", "RAPIDOS/n6-k1")
    assert status == 0
    assert len(rows) == 3


# Logs

def test_run_log_lines(tmp_path):
    logger = RunLogClass(str(tmp_path))
    logger.log_check("counts", 3, 0)
    logger.log_check("domino", 2, 1)
    logger.log_error("fallo", "verify")
    text = logger.read_today_log()
    assert "[SUCCESS] CHECK - Suite: counts | Passed: 3 | Failed: 0" in text
    assert "[ERROR] CHECK - Suite: domino | Passed: 2 | Failed: 1" in text
    assert "[ERROR] ERROR - verify | fallo" in text
    assert logger.get_today_log_path().endswith("_bcfw_runs.log")


def test_bcfw_run_writes_banners(tmp_path):
    config = dict(DEFAULTS, command="enumerate", n=5, k=1, quiet=True)
    out = io.StringIO()
    assert BcfwClass(config, logs_dir=str(tmp_path), stream=out).run() == 0
    assert json.loads(out.getvalue())["diagram"] == "n=5; 1-3"
    text = RunLogClass(str(tmp_path)).read_today_log()
    assert "🚀 INICIO DEL GESTOR DE CELDAS BCFW" in text
    assert "COMMAND_ENUMERATE - n=5" in text
    assert "🏁 FIN DEL GESTOR DE CELDAS BCFW" in text


def test_no_log_skips_the_logger():
    bcfw = BcfwClass(dict(DEFAULTS, command="enumerate", n=5, log=False, quiet=True), stream=io.StringIO())
    assert bcfw.logger is None
    assert bcfw.run() == 0


def test_middle_outside_its_sizes_is_a_logged_warning(tmp_path):
    config = dict(DEFAULTS, command="verify", n=6, k=1, suites=["middle"], quiet=True)
    out = io.StringIO()
    assert BcfwClass(config, logs_dir=str(tmp_path), stream=out).run() == 0
    assert json.loads(out.getvalue()) == {"suite": "middle", "passed": 0, "failed": 0, "witness": None}
    assert "[WARNING] WARNING - verify | La batería middle no tiene comprobaciones para n=6" in RunLogClass(str(tmp_path)).read_today_log()


def test_install_check_runs(capsys):
    # Misma ejecución que install_dependencies.sh --check
    status, rows = _run(capsys, "verify", "--n", "6", "--k", "1", "--suites", "counts", "permutations", "domino", "--samples", "1")
    assert status == 0
    assert [row["suite"] for row in rows] == ["counts", "permutations", "domino"]
