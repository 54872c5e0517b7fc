"""
Tests for environment-driven configuration.
"""

import logging
from pathlib import Path

import pytest

from AW_Forge.utils.logging_config import setup_from_config
from config import Config, load_config, validate_config

ENV_KEYS = (
    "AW_FORGE_MODE", "AW_FORGE_THREADS", "AW_FORGE_DRAWS", "AW_FORGE_SEED",
    "AW_FORGE_FLOAT_TOL", "AW_FORGE_SPECTRUM_TOL", "AW_FORGE_REPORT_DIR", "LOG_LEVEL", "LOG_FILE",
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)


def test_defaults():
    config = load_config()
    validate_config(config)
    assert config.default_mode == "exact"
    assert config.threads == 1
    assert config.default_draws == 20
    assert config.default_seed == 7
    assert config.log_file is None


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("AW_FORGE_MODE", "FLOAT")
    monkeypatch.setenv("AW_FORGE_THREADS", "4")
    monkeypatch.setenv("AW_FORGE_FLOAT_TOL", "1e-6")
    monkeypatch.setenv("LOG_FILE", str(tmp_path / "aw.log"))
    config = load_config()
    validate_config(config)
    assert config.default_mode == "float"
    assert config.threads == 4
    assert config.float_tolerance == 1e-6
    assert isinstance(config.log_file, Path)


def test_unparseable_number(monkeypatch):
    monkeypatch.setenv("AW_FORGE_DRAWS", "many")
    with pytest.raises(ValueError):
        load_config()


@pytest.mark.parametrize("overrides", [
    {"default_mode": "rational"},
    {"threads": 0},
    {"default_draws": 0},
    {"float_tolerance": 0.0},
])
def test_invalid_configuration(overrides):
    with pytest.raises(ValueError):
        validate_config(Config(**overrides))


def test_report_directory(tmp_path):
    config = Config(report_dir=str(tmp_path / "out"))
    config.ensure_directories()
    assert config.report_dir.is_dir()


def test_logging_from_config(tmp_path):
    path = tmp_path / "logs" / "aw.log"
    setup_from_config(Config(log_file=str(path), log_level="WARNING"))
    logging.getLogger("AW_Forge.tests").debug("window 4")
    text = path.read_text()
    assert "window 4" in text
