from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from orbicurves.errors import InvalidInput

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent / "config" / "defaults.yaml"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverConfig:
    """Numerical settings of the rational normal curve solver."""

    newton_tolerance: float = 1e-12
    max_newton_iters: int = 50
    homotopy_steps: int = 64
    min_step: float = 2.0 ** -20
    seed_M: float = 1e3
    max_restarts: int = 20
    rng_seed: int = 0
    verify_tolerance: float = 1e-8

    def __post_init__(self):
        if not 0 < self.newton_tolerance < 1:
            raise InvalidInput(f"newton_tolerance must lie in (0, 1), got {self.newton_tolerance}")
        if not 0 < self.verify_tolerance < 1:
            raise InvalidInput(f"verify_tolerance must lie in (0, 1), got {self.verify_tolerance}")
        for name in ("max_newton_iters", "homotopy_steps"):
            if getattr(self, name) <= 0:
                raise InvalidInput(f"{name} must be positive, got {getattr(self, name)}")
        if self.max_restarts < 0:
            raise InvalidInput(f"max_restarts must be nonnegative, got {self.max_restarts}")
        if not 0 < self.min_step < 1:
            raise InvalidInput(f"min_step must lie in (0, 1), got {self.min_step}")
        if self.seed_M <= 1:
            raise InvalidInput(f"seed_M must exceed 1, got {self.seed_M}")
        if not 0 <= self.rng_seed < 2 ** 64:
            raise InvalidInput(f"rng_seed must be a 64-bit unsigned integer, got {self.rng_seed}")


@dataclass(frozen=True)
class SearchConfig:
    """Limits of the exhaustive Egyptian-fraction searches."""

    bound_limit: int = 5
    fano_cap: int = 40

    def __post_init__(self):
        if self.bound_limit <= 0:
            raise InvalidInput(f"bound_limit must be positive, got {self.bound_limit}")
        if self.fano_cap < 2:
            raise InvalidInput(f"fano_cap must be at least 2, got {self.fano_cap}")


@dataclass(frozen=True)
class Settings:
    solver: SolverConfig = field(default_factory=SolverConfig)
    search: SearchConfig = field(default_factory=SearchConfig)


# (section, field, environment variable, parser)
_ENV_OVERRIDES = [
    ("solver", "newton_tolerance", "ORBICURVES_NEWTON_TOLERANCE", float),
    ("solver", "max_newton_iters", "ORBICURVES_MAX_NEWTON_ITERS", int),
    ("solver", "homotopy_steps", "ORBICURVES_HOMOTOPY_STEPS", int),
    ("solver", "seed_M", "ORBICURVES_SEED_M", float),
    ("solver", "max_restarts", "ORBICURVES_MAX_RESTARTS", int),
    ("solver", "rng_seed", "ORBICURVES_RNG_SEED", int),
    ("search", "bound_limit", "ORBICURVES_BOUND_LIMIT", int),
]


def load_settings(path: Optional[Path] = None) -> Settings:
    """Read YAML defaults (packaged unless ``path`` is given) and apply env overrides."""
    config_path = Path(path) if path else DEFAULT_CONFIG_PATH
    if not config_path.exists():
        raise InvalidInput(f"Config file not found: {config_path}")

    with open(config_path, "r") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise InvalidInput(f"Config file {config_path} must contain a mapping")

    data = _apply_env_overrides(data)
    return Settings(
        solver=_build(SolverConfig, data.get("solver") or {}, config_path),
        search=_build(SearchConfig, data.get("search") or {}, config_path),
    )


def _apply_env_overrides(config: Dict[str, Any]) -> Dict[str, Any]:
    config = {section: dict(values or {}) for section, values in config.items()}
    for section, name, env_name, parse in _ENV_OVERRIDES:
        env_value = os.getenv(env_name)
        if env_value is None:
            continue
        try:
            value = parse(env_value)
        except ValueError:
            logger.warning("Ignoring invalid %s value: %s", env_name, env_value)
            continue
        config.setdefault(section, {})[name] = value
        logger.info("Overriding %s.%s via environment to %s", section, name, value)
    return config


def _build(cls, values: Dict[str, Any], source: Path):
    known = {f.name: f.type for f in fields(cls)}
    unknown = sorted(set(values) - set(known))
    if unknown:
        raise InvalidInput(f"Unknown {cls.__name__} keys in {source}: {', '.join(unknown)}")
    coerced = {}
    for name, value in values.items():
        caster = int if known[name] == "int" else float
        try:
            coerced[name] = caster(value)
        except (TypeError, ValueError) as e:
            raise InvalidInput(f"Invalid value for {name} in {source}: {value!r}") from e
    return cls(**coerced)


def with_overrides(config: SolverConfig, **overrides) -> SolverConfig:
    """Return ``config`` with the non-None overrides applied (CLI flags)."""
    changes = {name: value for name, value in overrides.items() if value is not None}
    return replace(config, **changes) if changes else config
