"""Scenario configuration: JSON documents mirroring ScenarioConfig fields.

Each scenario carries its own default gains, torso-pitch setpoint and
initial CoM offset (the values of the corresponding experiment); a config
file only needs the keys it wants to change.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, replace

from ..errors import ConfigError
from ..gait import GaitParams

SCENARIOS = (
    "walk_point_feet",
    "walk_no_ankle",
    "walk_full",
    "tune_hip_air",
    "tune_hip_ground",
    "tune_knee",
    "tune_ankle",
)

WALK_GAINS = {
    "walk_point_feet": {"hip": (100.5, 0.85), "knee": (200.0, 4.0),
                        "ankle": (0.0, 0.0), "posture": (1.5, 0.1)},
    "walk_no_ankle": {"hip": (45.5, 0.85), "knee": (200.0, 4.0),
                      "ankle": (0.0, 0.0), "posture": (1.5, 0.1)},
    "walk_full": {"hip": (48.5, 0.85), "knee": (200.0, 4.0),
                  "ankle": (20.0, 1.2), "posture": (1.5, 0.1)},
}

RIG_GAINS = {
    "tune_hip_air": {"hip": (100.5, 5.0), "knee": (200.0, 4.0),
                     "ankle": (20.0, 1.2), "posture": (1.5, 0.1)},
    "tune_hip_ground": {"hip": (22.5, 0.85), "knee": (200.0, 4.0),
                        "ankle": (20.0, 1.2), "posture": (1.5, 0.1)},
    "tune_knee": {"hip": (48.5, 0.85), "knee": (200.0, 4.0),
                  "ankle": (20.0, 1.2), "posture": (1.5, 0.1)},
    "tune_ankle": {"hip": (48.5, 0.85), "knee": (200.0, 4.0),
                   "ankle": (20.0, 1.2), "posture": (1.5, 0.1)},
}

THETA_D = {"walk_point_feet": 0.3, "walk_no_ankle": 0.2, "walk_full": 0.1}


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: str = "walk_full"
    x_init: float = 0.173
    theta_d: float = 0.1
    gains: dict = field(default_factory=lambda: dict(WALK_GAINS["walk_full"]))
    gait: GaitParams = GaitParams()
    duration: float = 60.0
    seed: int | None = None
    output: str | None = None
    ankle_lock: float = 0.71  # fixed ankle angle of the no-ankle variant
    # optional split of hip gains by role: the stance hip carries the body
    # (in-air rig values), the swing hip only moves the leg (ground rig
    # values); off by default
    dual_hip_gains: bool = False

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise ConfigError(
                "scenario", f"unknown id {self.scenario!r}; expected one of {SCENARIOS}"
            )
        if not self.duration > 0:
            raise ConfigError("duration", f"must be > 0, got {self.duration}")
        for joint in ("hip", "knee", "ankle", "posture"):
            if joint not in self.gains:
                raise ConfigError("gains", f"missing joint {joint!r}")

    def gains_for(self, joint: str):
        kp, kd = self.gains[joint]
        return float(kp), float(kd)


def default_config(scenario: str = "walk_full", **overrides) -> ScenarioConfig:
    """Scenario defaults (gains, theta_d, x_init) with optional overrides."""
    if scenario not in SCENARIOS:
        raise ConfigError("scenario", f"unknown id {scenario!r}")
    base = {
        "scenario": scenario,
        "gains": dict(WALK_GAINS.get(scenario) or RIG_GAINS[scenario]),
        "theta_d": THETA_D.get(scenario, 0.1),
        "duration": 60.0 if scenario.startswith("walk") else 15.0,
    }
    if scenario == "walk_point_feet":
        base["x_init"] = 0.25
    base.update(overrides)
    return ScenarioConfig(**base)


_FIELD_TYPES = {
    "scenario": str,
    "x_init": (int, float),
    "theta_d": (int, float),
    "gains": dict,
    "gait": dict,
    "duration": (int, float),
    "seed": (int, type(None)),
    "output": (str, type(None)),
    "ankle_lock": (int, float),
    "dual_hip_gains": bool,
}


def config_from_dict(data: dict) -> ScenarioConfig:
    if not isinstance(data, dict):
        raise ConfigError("<root>", f"expected a JSON object, got {type(data).__name__}")
    if "scenario" not in data:
        raise ConfigError("scenario", "required key missing")
    kwargs = {}
    for key, value in data.items():
        if key not in _FIELD_TYPES:
            raise ConfigError(key, "unknown key")
        if _FIELD_TYPES[key] is bool:
            if not isinstance(value, bool):
                raise ConfigError(key, f"bad type {type(value).__name__}")
        elif not isinstance(value, _FIELD_TYPES[key]) or isinstance(value, bool):
            raise ConfigError(key, f"bad type {type(value).__name__}")
        kwargs[key] = value
    scenario = kwargs.pop("scenario")
    gait_dict = kwargs.pop("gait", None)
    gains = kwargs.pop("gains", None)
    cfg = default_config(scenario, **kwargs)
    if gait_dict is not None:
        try:
            cfg = replace(cfg, gait=GaitParams(**gait_dict))
        except TypeError as exc:
            raise ConfigError("gait", str(exc)) from None
        except ValueError as exc:
            raise ConfigError("gait", str(exc)) from None
    if gains is not None:
        merged = dict(cfg.gains)
        for joint, kp_kd in gains.items():
            if joint not in ("hip", "knee", "ankle", "posture"):
                raise ConfigError("gains", f"unknown joint {joint!r}")
            if (not isinstance(kp_kd, (list, tuple)) or len(kp_kd) != 2
                    or not all(isinstance(v, (int, float)) for v in kp_kd)):
                raise ConfigError("gains", f"{joint} must be [kp, kd]")
            merged[joint] = (float(kp_kd[0]), float(kp_kd[1]))
        cfg = replace(cfg, gains=merged)
    return cfg


def config_to_dict(cfg: ScenarioConfig) -> dict:
    data = asdict(cfg)
    data["gains"] = {k: list(v) for k, v in cfg.gains.items()}
    data["gait"] = {
        "t_step": cfg.gait.t_step, "t_m": cfg.gait.t_m,
        "z_fm": cfg.gait.z_fm, "v_d": cfg.gait.v_d,
    }
    return data


def load_config(path: str) -> ScenarioConfig:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError("<file>", f"invalid JSON: {exc}") from None
    return config_from_dict(data)


def write_config(cfg: ScenarioConfig, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(config_to_dict(cfg), fh, indent=2)
        fh.write("\n")
