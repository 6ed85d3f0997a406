"""Telemetry records and the fixed-schema CSV writer.

One record per physics tick.  Column order is fixed: time, CoM state,
torso pitch, then per joint desired / actual / velocity / torque, then
per-leg contact flags and the step index.  Floats are written with nine
significant digits so identical runs produce byte-identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass
class TelemetryRecord:
    t: float
    com_x: float
    com_z: float
    com_vx: float
    com_vz: float
    torso_pitch: float
    joints: dict  # name -> (desired, actual, velocity, torque)
    contact_a: bool
    contact_b: bool
    step_index: int


@dataclass
class RunSummary:
    """End-of-run digest; steps are counted as support exchanges."""

    scenario: str
    steps: int
    distance: float
    mean_velocity: float
    max_velocity: float
    fell: bool
    unstable: bool
    rms_tracking_error: float
    duration: float
    ticks: int
    reach_errors: int = 0
    early_contacts: int = 0
    step_counting: str = "support_exchanges"

    @property
    def exit_code(self) -> int:
        if self.unstable:
            return 3
        if self.fell:
            return 2
        return 0

    def as_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "steps": self.steps,
            "distance": self.distance,
            "mean_velocity": self.mean_velocity,
            "max_velocity": self.max_velocity,
            "fell": self.fell,
            "unstable": self.unstable,
            "rms_tracking_error": self.rms_tracking_error,
            "duration": self.duration,
            "ticks": self.ticks,
            "reach_errors": self.reach_errors,
            "early_contacts": self.early_contacts,
            "step_counting": self.step_counting,
        }


def header(joint_names) -> list:
    cols = ["t", "com_x", "com_z", "com_vx", "com_vz", "torso_pitch"]
    for j in joint_names:
        cols += [f"{j}_desired", f"{j}_actual", f"{j}_velocity", f"{j}_torque"]
    cols += ["contact_a", "contact_b", "step_index"]
    return cols


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, int):
        return str(v)
    if not math.isfinite(v):
        return "nan"
    return f"{v:.9g}"


def write_telemetry(records, path, joint_names) -> None:
    """Write records as UTF-8 CSV; an empty run yields a header-only file."""
    lines = [",".join(header(joint_names))]
    for r in records:
        row = [r.t, r.com_x, r.com_z, r.com_vx, r.com_vz, r.torso_pitch]
        for j in joint_names:
            row.extend(r.joints[j])
        row += [r.contact_a, r.contact_b, r.step_index]
        lines.append(",".join(_fmt(v) for v in row))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
