import pytest
import yaml

from orbicurves.errors import InvalidInput
from orbicurves.settings import SearchConfig, Settings, SolverConfig, load_settings, with_overrides


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("ORBICURVES_MAX_RESTARTS", "ORBICURVES_RNG_SEED", "ORBICURVES_SEED_M", "ORBICURVES_BOUND_LIMIT"):
        monkeypatch.delenv(name, raising=False)


def write_config(tmp_path, data):
    path = tmp_path / "settings.yaml"
    path.write_text(yaml.safe_dump(data))
    return path


def test_packaged_defaults_match_dataclass_defaults():
    assert load_settings() == Settings()


def test_yaml_values_are_coerced(tmp_path):
    path = write_config(tmp_path, {"solver": {"max_restarts": "5", "seed_M": 100}, "search": {"fano_cap": 12}})
    settings = load_settings(path)
    assert settings.solver.max_restarts == 5
    assert settings.solver.seed_M == 100.0
    assert settings.search.fano_cap == 12


def test_environment_overrides_yaml(tmp_path, monkeypatch):
    path = write_config(tmp_path, {"solver": {"max_restarts": 5}})
    monkeypatch.setenv("ORBICURVES_MAX_RESTARTS", "7")
    monkeypatch.setenv("ORBICURVES_BOUND_LIMIT", "4")
    settings = load_settings(path)
    assert settings.solver.max_restarts == 7
    assert settings.search.bound_limit == 4


def test_invalid_environment_value_is_ignored(monkeypatch):
    monkeypatch.setenv("ORBICURVES_RNG_SEED", "not-a-number")
    assert load_settings().solver.rng_seed == SolverConfig().rng_seed


@pytest.mark.parametrize(
    "data",
    [
        {"solver": {"tolerance": 1e-3}},
        {"solver": {"max_restarts": "many"}},
        {"solver": {"seed_M": 1}},
        {"search": {"fano_cap": 1}},
        ["not", "a", "mapping"],
    ],
)
def test_bad_config_files(tmp_path, data):
    with pytest.raises(InvalidInput):
        load_settings(write_config(tmp_path, data))


def test_missing_config_file(tmp_path):
    with pytest.raises(InvalidInput):
        load_settings(tmp_path / "absent.yaml")


@pytest.mark.parametrize(
    "overrides",
    [
        {"newton_tolerance": 0.0},
        {"verify_tolerance": 1.5},
        {"max_newton_iters": 0},
        {"max_restarts": -1},
        {"min_step": 2.0},
        {"rng_seed": -3},
    ],
)
def test_solver_config_validation(overrides):
    with pytest.raises(InvalidInput):
        SolverConfig(**overrides)


def test_search_config_validation():
    with pytest.raises(InvalidInput):
        SearchConfig(bound_limit=0)


def test_with_overrides_skips_missing_flags():
    config = SolverConfig()
    assert with_overrides(config, rng_seed=None, verify_tolerance=None) is config
    changed = with_overrides(config, rng_seed=9, verify_tolerance=None)
    assert changed.rng_seed == 9
    assert changed.verify_tolerance == config.verify_tolerance
