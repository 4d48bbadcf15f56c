# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Configuration for pm4cover.

Defaults ship as data/defaults.toml inside the package. A user TOML file can
override any key, and the PM4COVER_SIZE_CAP environment variable overrides
every oracle cap last.
"""

import os
import logging
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

import importlib_resources
import psutil
import tomli

from . import constants

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleLimits:
    """Size caps for the exhaustive searches"""
    matching_cap: int = constants.DEFAULT_MATCHING_CAP          # vertices, perfect matching enumeration
    cover_cap: int = constants.DEFAULT_COVER_CAP                # vertices, brute-force proper covers
    circuit_cap: int = constants.DEFAULT_CIRCUIT_CAP            # vertices, alternating circuit enumeration
    enumeration_cap: int = constants.DEFAULT_ENUMERATION_CAP    # n, exhaustive pole streams

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"{f.name} must be positive, got {getattr(self, f.name)}")


@dataclass(frozen=True)
class EngineConfig:
    """Cover engine switches"""
    verify_each_level: bool = True                                  # check the cover after every recursion level
    use_b_route: bool = True                                        # try Hamiltonian colouring + Kempe swaps first
    kempe_budget_factor: int = constants.DEFAULT_KEMPE_BUDGET_FACTOR  # swaps allowed per edge of B
    kempe_restarts: int = constants.DEFAULT_KEMPE_RESTARTS            # randomised Kempe walks after the first
    search_restarts: int = constants.DEFAULT_SEARCH_RESTARTS          # cut-off G* searches before the full one


@dataclass(frozen=True)
class GenConfig:
    rejection_budget: int = constants.DEFAULT_REJECTION_BUDGET     # samples per constraint before giving up


@dataclass
class Settings:
    oracle: OracleLimits = field(default_factory=OracleLimits)
    engine: EngineConfig = field(default_factory=EngineConfig)
    generator: GenConfig = field(default_factory=GenConfig)


@dataclass
class CliConfig:
    """Resolved command line invocation"""
    subcommand: str
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    seed: int = 0
    trace: bool = False
    jobs: int = 1
    settings: Settings = field(default_factory=Settings)


def default_jobs() -> int:
    """Physical core count, or 1 when it cannot be determined"""
    return psutil.cpu_count(logical=False) or 1


def _section(cls, values: Dict[str, Any], base):
    known = {f.name for f in fields(cls)}
    unknown = set(values) - known
    if unknown:
        logger.warning(f"Ignoring unknown {cls.__name__} keys: {sorted(unknown)}")
    return replace(base, **{k: v for k, v in values.items() if k in known})


def _apply(settings: Settings, data: Dict[str, Any]) -> Settings:
    return Settings(
        oracle=_section(OracleLimits, data.get("oracle", {}), settings.oracle),
        engine=_section(EngineConfig, data.get("engine", {}), settings.engine),
        generator=_section(GenConfig, data.get("generator", {}), settings.generator),
    )


def load_settings(config_path: Optional[Path] = None, environ: Optional[Dict[str, str]] = None) -> Settings:
    """Bundled defaults, then the user file, then the environment"""
    environ = os.environ if environ is None else environ
    defaults = importlib_resources.files("pm4cover") / "data" / "defaults.toml"
    settings = _apply(Settings(), tomli.loads(defaults.read_text(encoding="utf-8")))

    if config_path is not None:
        with open(config_path, "rb") as f:
            settings = _apply(settings, tomli.load(f))
        logger.info(f"Loaded configuration overrides from {config_path}")

    raw_cap = environ.get(constants.SIZE_CAP_ENV)
    if raw_cap:
        try:
            cap = int(raw_cap)
        except ValueError:
            raise ValueError(f"{constants.SIZE_CAP_ENV} must be an integer, got {raw_cap!r}")
        settings.oracle = OracleLimits(cap, cap, cap, cap)
        logger.info(f"Oracle caps overridden by {constants.SIZE_CAP_ENV}={cap}")
    return settings


_global_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get or lazily load the process-wide settings"""
    global _global_settings
    if _global_settings is None:
        _global_settings = load_settings()
    return _global_settings


def set_settings(settings: Optional[Settings]) -> None:
    """Install settings for this process; None restores lazy loading"""
    global _global_settings
    _global_settings = settings


def get_oracle_limits() -> OracleLimits:
    return get_settings().oracle


def get_engine_config() -> EngineConfig:
    return get_settings().engine


def get_gen_config() -> GenConfig:
    return get_settings().generator


def set_oracle_limits(limits: OracleLimits) -> None:
    get_settings().oracle = limits
