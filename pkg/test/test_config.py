import pytest

from conflab.config import BaseConfig, Settings, configuration
from conflab.util.converters import CaseConverter


def test_defaults():
    settings = Settings(environ={})
    assert settings["degree_bound"] == 6
    assert settings["annihilation_level"] == 8
    assert settings["seed"] == 1
    assert settings["log_file"] is None
    assert settings["colored"] is False
    assert len(settings) == len(Settings.DEFAULTS)


def test_environment_overrides():
    settings = Settings(
        environ={"CONFLAB_SEED": "7", "CONFLAB_COLORED": "yes", "CONFLAB_LOG_FILE": ""}
    )
    assert settings["seed"] == 7
    assert settings["colored"] is True
    assert settings["log_file"] is None


def test_keyword_overrides_win_over_environment():
    settings = Settings(environ={"CONFLAB_SAMPLES": "9"}, samples=3)
    assert settings["samples"] == 3


@pytest.mark.parametrize(
    "environ",
    [
        {"CONFLAB_DEGREE_BOUND": "-1"},
        {"CONFLAB_SAMPLES": "0"},
        {"CONFLAB_COLORED": "maybe"},
        {"CONFLAB_SEED": "one"},
    ],
)
def test_invalid_environment_values(environ):
    with pytest.raises(ValueError):
        Settings(environ=environ)


def test_unknown_override():
    with pytest.raises(KeyError):
        Settings(environ={}, depth=3)


def test_settings_are_read_only():
    settings = Settings(environ={})
    with pytest.raises(TypeError):
        settings.dump()["seed"] = 2


def test_case_conversion():
    assert CaseConverter.pascal("settings") == "Settings"
    assert CaseConverter.pascal("probe-degree") == "ProbeDegree"
    assert CaseConverter.pascal("seriesCap") == "SeriesCap"
    assert CaseConverter.screaming("degree_bound") == "DEGREE_BOUND"
    assert CaseConverter.screaming("logFile") == "LOG_FILE"
    with pytest.raises(ValueError):
        CaseConverter.pascal("  ")
    with pytest.raises(TypeError):
        CaseConverter.screaming(3)


def test_configuration_attaches_instance():
    @configuration("settings", "conflab.config.settings")
    class Runner:
        pass

    assert isinstance(Runner._config, Settings)
    assert Runner._config["series_cap"] >= 1


def test_configuration_missing_class():
    with pytest.raises(ImportError):

        @configuration("nowhere", "conflab.config.settings")
        class Runner:
            pass


def test_base_config_without_validators():
    class Limits(BaseConfig):
        PREFIX = "LIMITS_"
        DEFAULTS = {"depth": 1, "name": "x"}

    limits = Limits(environ={"LIMITS_DEPTH": "4"}, name="y")
    assert dict(limits) == {"depth": "4", "name": "y"}
