import pytest

from src.config import Config

KEYS = ("FGLH_DEFAULT_ORDER", "FGLH_MAX_ORDER", "FGLH_DEFAULT_LAW", "FGLH_DEFAULT_INSTANCE",
        "FGLH_OUTPUT_FORMAT", "FGLH_CONCURRENT", "LOG_LEVEL", "LOG_DIR")


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for key in KEYS:
        monkeypatch.delenv(key, raising=False)


def test_defaults():
    config = Config.from_env()
    assert (config.DEFAULT_ORDER, config.MAX_ORDER) == (5, 10)
    assert config.DEFAULT_LAW == "mishchenko-model"
    assert config.DEFAULT_INSTANCE == "beta"
    assert config.OUTPUT_FORMAT == "table"
    assert config.CONCURRENT is True
    assert config.validate() == []


def test_reads_environment(monkeypatch):
    monkeypatch.setenv("FGLH_DEFAULT_ORDER", "3")
    monkeypatch.setenv("FGLH_MAX_ORDER", "6")
    monkeypatch.setenv("FGLH_DEFAULT_LAW", "additive")
    monkeypatch.setenv("FGLH_OUTPUT_FORMAT", "records")
    monkeypatch.setenv("FGLH_CONCURRENT", "no")
    config = Config.from_env()
    assert (config.DEFAULT_ORDER, config.MAX_ORDER, config.DEFAULT_LAW) == (3, 6, "additive")
    assert config.OUTPUT_FORMAT == "records"
    assert config.CONCURRENT is False
    assert config.validate() == []


def test_unparseable_integer_falls_back(monkeypatch):
    monkeypatch.setenv("FGLH_MAX_ORDER", "lots")
    assert Config.from_env().MAX_ORDER == 10


@pytest.mark.parametrize("key, value, fragment", [
    ("FGLH_DEFAULT_ORDER", "0", "FGLH_DEFAULT_ORDER"),
    ("FGLH_MAX_ORDER", "0", "FGLH_MAX_ORDER"),
    ("FGLH_OUTPUT_FORMAT", "yaml", "FGLH_OUTPUT_FORMAT"),
    ("FGLH_DEFAULT_LAW", "no-such-law", "FGLH_DEFAULT_LAW"),
    ("FGLH_DEFAULT_INSTANCE", "no-such-instance", "FGLH_DEFAULT_INSTANCE"),
])
def test_validate_reports_problems(monkeypatch, key, value, fragment):
    monkeypatch.setenv(key, value)
    problems = Config.from_env().validate()
    assert any(fragment in problem for problem in problems)
