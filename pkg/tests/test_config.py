"""Tests for environment-driven configuration."""
import logging

import pytest

from src.config import Config, EigenSettings, configure_logging

SETTINGS = (
    "OMEGA_CALC_SEED",
    "OMEGA_SINGULAR_EPS",
    "OMEGA_FD_STEP",
    "OMEGA_MAX_TERMS",
    "OMEGA_TAIL_TOL",
    "OMEGA_PRODUCT_TOL",
    "OMEGA_MAX_FACTORS",
    "OMEGA_WORKERS",
    "DEBUG_MODE",
    "LOG_LEVEL",
)


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """Unset every setting and point the loader at an empty .env"""
    for name in SETTINGS:
        # set first so monkeypatch restores the variable's absence on teardown
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    env_file = tmp_path / ".env"
    env_file.write_text("")
    return env_file


def test_defaults(clean_env):
    config = Config(env_file=str(clean_env))
    assert config.seed == 0
    assert config.singular_eps == 1e-12
    assert config.fd_step == 1e-6
    assert config.max_terms == 10_000
    assert config.tail_tol == 1e-12
    assert config.workers == 1
    assert config.log_level == "WARNING"
    assert not config.debug_mode
    assert config.validate()
    assert config.eigen_settings() == EigenSettings()


def test_environment_overrides(clean_env, monkeypatch):
    monkeypatch.setenv("OMEGA_CALC_SEED", "7")
    monkeypatch.setenv("OMEGA_TAIL_TOL", "1e-9")
    monkeypatch.setenv("OMEGA_WORKERS", "4")
    monkeypatch.setenv("DEBUG_MODE", "True")
    monkeypatch.setenv("LOG_LEVEL", "info")
    config = Config(env_file=str(clean_env))
    assert config.seed == 7
    assert config.inverse_config().tail_tol == 1e-9
    assert config.workers == 4
    assert config.debug_mode
    assert config.log_level == "INFO"


def test_env_file_is_loaded(clean_env):
    clean_env.write_text("OMEGA_MAX_FACTORS=500\nOMEGA_FD_STEP=1e-5\n")
    config = Config(env_file=str(clean_env))
    assert config.eigen_settings().max_factors == 500
    assert config.derivative_config().fd_step == 1e-5


def test_environment_wins_over_env_file(clean_env, monkeypatch):
    clean_env.write_text("OMEGA_WORKERS=8\n")
    monkeypatch.setenv("OMEGA_WORKERS", "2")
    assert Config(env_file=str(clean_env)).workers == 2


def test_malformed_number_falls_back_to_default(clean_env, monkeypatch, caplog):
    monkeypatch.setenv("OMEGA_MAX_TERMS", "lots")
    with caplog.at_level(logging.WARNING):
        config = Config(env_file=str(clean_env))
    assert config.max_terms == 10_000
    assert "OMEGA_MAX_TERMS" in caplog.text


@pytest.mark.parametrize(
    "name, value",
    [
        ("OMEGA_SINGULAR_EPS", "0"),
        ("OMEGA_PRODUCT_TOL", "-1e-3"),
        ("OMEGA_WORKERS", "0"),
        ("OMEGA_MAX_FACTORS", "-5"),
        ("LOG_LEVEL", "LOUD"),
    ],
)
def test_invalid_settings_fail_validation(clean_env, monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    config = Config(env_file=str(clean_env))
    assert not config.validate()
    assert any(name in problem for problem in config.problems())


def test_configure_logging_levels():
    configure_logging("ERROR")
    assert logging.getLogger().level == logging.ERROR
    configure_logging("ERROR", verbose=True)
    assert logging.getLogger().level == logging.DEBUG
    configure_logging("WARNING")
