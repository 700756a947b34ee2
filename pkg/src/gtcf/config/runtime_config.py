from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, ConfigDict, Field, PositiveInt

from .settings import settings


class _Section(BaseModel):
    # unknown keys in the YAML files are typos, not extensions
    model_config = ConfigDict(extra="forbid")


class GroupsCfg(_Section):
    max_order: PositiveInt = 64
    cover_max_order: PositiveInt = 1536
    cross_check_frattini: bool = False


class FFCfg(_Section):
    magnitude_bound: int = 2**64
    max_characteristic: int = 2**16
    table_bound: int = 2**16
    factor_seed: int = 0


class GroebnerCfg(_Section):
    default_order: Literal["lex", "grevlex", "deglex"] = "grevlex"
    pair_cap: int = 20000
    max_quotient_dim: PositiveInt = 64
    linear_sweep: int = 16
    random_retries: int = 16


class AxiomsCfg(_Section):
    budget: PositiveInt = 2**20
    random_probes: int = 0
    workers: PositiveInt = 1


class ClosureCfg(_Section):
    level_budget: int = 3
    max_levels: PositiveInt = 6
    max_certify_degree: PositiveInt = 8
    exhaustive_cap: int = 2**20
    sample_size: int = 256
    iso_check_cap: int = 4096


class ReportsCfg(_Section):
    schema_version: str = "1"


class RuntimeConfig(_Section):
    groups: GroupsCfg = Field(default_factory=GroupsCfg)
    ff: FFCfg = Field(default_factory=FFCfg)
    groebner: GroebnerCfg = Field(default_factory=GroebnerCfg)
    axioms: AxiomsCfg = Field(default_factory=AxiomsCfg)
    closure: ClosureCfg = Field(default_factory=ClosureCfg)
    reports: ReportsCfg = Field(default_factory=ReportsCfg)


def config_files(base_dir: str) -> tuple[Path, Path]:
    """(service_defaults.yaml, runtime_config.yaml); the second overrides the first."""
    root = Path(base_dir) / "config"
    return root / "service_defaults.yaml", root / "runtime_config.yaml"


def _read_section_tree(path: Path) -> dict[str, Any]:
    if not path.exists():
        return {}
    with open(path, encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"{path} must hold a mapping of config sections")
    return data


def _overlay(base: dict[str, Any], top: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in top.items():
        below = merged.get(key)
        merged[key] = _overlay(below, value) if isinstance(value, dict) and isinstance(below, dict) else value
    return merged


def load_runtime_config(base_dir: str) -> RuntimeConfig:
    defaults, overrides = (_read_section_tree(p) for p in config_files(base_dir))
    return RuntimeConfig(**_overlay(defaults, overrides))


@lru_cache(maxsize=1)
def current_config() -> RuntimeConfig:
    """Merged runtime configuration for library defaults (cached)."""
    return load_runtime_config(settings.data_dir)
