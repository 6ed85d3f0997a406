"""Scenario harness: walking state machine, tuning rigs, telemetry, CLI."""

from .config import (
    SCENARIOS, ScenarioConfig, config_from_dict, config_to_dict,
    default_config, load_config, write_config,
)
from .rigs import Rig, build_rig
from .scenarios import run_scenario
from .telemetry import RunSummary, TelemetryRecord, write_telemetry
from .walker import (
    WalkerState, advance_time, detect_exchange, detect_fall, make_walker,
    walker_tick,
)

__all__ = [
    "SCENARIOS", "ScenarioConfig", "config_from_dict", "config_to_dict",
    "default_config", "load_config", "write_config", "Rig", "build_rig",
    "run_scenario", "RunSummary", "TelemetryRecord", "write_telemetry",
    "WalkerState", "advance_time", "detect_exchange", "detect_fall",
    "make_walker", "walker_tick",
]
