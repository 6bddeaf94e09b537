from pathlib import Path

import pytest
import tomlkit

from immgate.env import DEBUG, FAIL, INFO, WARN, Settings, load_settings, set_verbosity
from immgate.env.config import CONFIG_ENV, TABLE_ENV
from immgate.env.messages import DEBUGGING, QUIET, VERBOSE, verbosity
from immgate.util.error import SchemaError


########################
####    SETTINGS    ####
########################


def test_defaults():
    settings = load_settings()
    assert settings == Settings()
    assert settings.budget == 10**8
    assert settings.modulus_cap == 64
    assert settings.table_path is None


def test_local_config_file(tmp_path):
    (tmp_path / "immgate.toml").write_text(
        "[immgate]\nbudget = 1000\nworkers = 4\n", encoding="utf-8"
    )
    settings = load_settings()
    assert settings.budget == 1000
    assert settings.workers == 4


def test_config_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "elsewhere.toml"
    path.write_text("[immgate]\nmodulus_cap = 16\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_ENV, str(path))
    assert load_settings().modulus_cap == 16


def test_explicit_path_wins(tmp_path, monkeypatch):
    env = tmp_path / "env.toml"
    env.write_text("[immgate]\nbudget = 5\n", encoding="utf-8")
    explicit = tmp_path / "explicit.toml"
    explicit.write_text("[immgate]\nbudget = 7\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_ENV, str(env))
    assert load_settings(explicit).budget == 7


def test_table_path_environment(tmp_path, monkeypatch):
    (tmp_path / "immgate.toml").write_text(
        '[immgate]\ntable_path = "from-file.tbl"\n', encoding="utf-8"
    )
    assert load_settings().table_path == Path("from-file.tbl")
    monkeypatch.setenv(TABLE_ENV, "from-env.tbl")
    assert load_settings().table_path == Path("from-env.tbl")


def test_missing_explicit_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_settings(tmp_path / "absent.toml")


@pytest.mark.parametrize(
    "text",
    [
        "[immgate]\nbudgett = 3\n",
        "[immgate]\nbudget = 0\n",
        "[immgate]\nworkers = \"many\"\n",
        "[immgate]\nverbosity = -1\n",
        "immgate = 3\n",
    ],
)
def test_invalid_config(tmp_path, text):
    path = tmp_path / "bad.toml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(SchemaError):
        load_settings(path)


def test_replace_ignores_none():
    settings = Settings().replace(budget=50, workers=None)
    assert settings.budget == 50
    assert settings.workers == 1
    with pytest.raises(SchemaError):
        Settings().replace(budget=True)


def test_to_toml_round_trips(tmp_path):
    settings = Settings(budget=123, table_path=Path("x.tbl"), verbosity=2)
    text = settings.to_toml()
    assert tomlkit.parse(text)["immgate"]["budget"] == 123
    path = tmp_path / "out.toml"
    path.write_text(text, encoding="utf-8")
    assert load_settings(path) == settings


#######################
####    CONSOLE    ####
#######################


def test_verbosity_levels(capsys):
    set_verbosity(QUIET)
    WARN("hidden")
    assert capsys.readouterr().err == ""

    set_verbosity(VERBOSE)
    INFO("shown")
    DEBUG("hidden")
    err = capsys.readouterr().err
    assert "shown" in err and "hidden" not in err

    set_verbosity(DEBUGGING)
    DEBUG("internal")
    captured = capsys.readouterr()
    assert "internal" in captured.err
    assert captured.out == ""
    assert verbosity() == DEBUGGING


def test_negative_verbosity():
    with pytest.raises(ValueError):
        set_verbosity(-1)


def test_fail_exits(capsys):
    with pytest.raises(SystemExit) as info:
        FAIL("broken")
    assert info.value.code == 1
    assert "broken" in capsys.readouterr().err
