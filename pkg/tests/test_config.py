# tests/test_config.py
import pytest

from core.config import SEED_ENV, RunConfig


def test_defaults():
    cfg = RunConfig()
    assert (cfg.seed, cfg.retries, cfg.height, cfg.sampler, cfg.format) == (0, 5, 3, "cell", "json")
    assert cfg.length_for(6) == 12
    assert RunConfig(word_length=5).length_for(6) == 5


@pytest.mark.parametrize("bad", [
    {"retries": 0},
    {"height": 0},
    {"word_length": 0},
    {"sampler": "orbit"},
    {"format": "xml"},
    {"workers": 0},
])
def test_invalid_values_are_rejected(bad):
    with pytest.raises(ValueError):
        RunConfig(**bad)


def test_environment_seed_and_overrides(monkeypatch):
    monkeypatch.setenv(SEED_ENV, "41")
    assert RunConfig.from_env().seed == 41
    assert RunConfig.from_env(seed=7).seed == 7
    assert RunConfig.from_env(seed=None, retries=2).seed == 41


def test_environment_seed_absent(monkeypatch):
    monkeypatch.delenv(SEED_ENV, raising=False)
    cfg = RunConfig.from_env(height=4)
    assert cfg.seed == 0 and cfg.height == 4
    assert cfg.with_seed(9).seed == 9
    assert cfg.with_seed(9).height == 4
