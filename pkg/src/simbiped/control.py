"""Joint-level PD control with a filtered derivative term.

Each joint runs u = kp (q_d - q) - kd * filtered(qd), with the measured
velocity passed through a first-order low-pass before the derivative term
(the angle is used raw).  A separate adjustment controller keeps the torso
upright by integrating a desired pitch rate into the support-hip target;
its accumulator is cleared at every support exchange.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

DEFAULT_FILTER_ALPHA = 0.075
DEFAULT_TORQUE_LIMIT = 100.0


@dataclass(frozen=True)
class PdGains:
    kp: float
    kd: float

    def __post_init__(self):
        if self.kp < 0 or self.kd < 0:
            raise ValueError(f"gains must be >= 0, got {self}")


@dataclass(frozen=True)
class LowPassState:
    """Per-tick exponential smoother y <- (1 - alpha) y + alpha * sample."""

    alpha: float = DEFAULT_FILTER_ALPHA
    y_prev: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")


def filter_step(state: LowPassState, sample: float):
    """Advance the smoother by one sample; returns (new state, output)."""
    if not math.isfinite(sample):
        raise ValueError(f"sample must be finite, got {sample}")
    y = (1.0 - state.alpha) * state.y_prev + state.alpha * sample
    return replace(state, y_prev=y), y


@dataclass
class PdController:
    """One joint actuator: gains, velocity filter, saturation, target."""

    gains: PdGains
    filter: LowPassState = field(default_factory=LowPassState)
    torque_limit: float = DEFAULT_TORQUE_LIMIT
    target: float = 0.0

    def __post_init__(self):
        if not self.torque_limit > 0:
            raise ValueError(f"torque_limit must be > 0, got {self.torque_limit}")


def pd_torque(ctrl: PdController, q: float, q_dot: float) -> float:
    """Torque for one tick; updates the controller's velocity filter."""
    ctrl.filter, qd_f = filter_step(ctrl.filter, q_dot)
    u = ctrl.gains.kp * (ctrl.target - q) - ctrl.gains.kd * qd_f
    return min(max(u, -ctrl.torque_limit), ctrl.torque_limit)


@dataclass
class PostureController:
    """Accumulating hip-target adjustment that keeps the torso upright.

    Each tick integrates the desired pitch rate kp (phi_ref - phi) - kd
    phi_dot into an offset added to the support-hip target.  The offset is
    accumulated over one stance phase only.
    """

    gains: PdGains = PdGains(1.5, 0.1)
    phi_ref: float = 0.0
    dt: float = 1.0 / 60.0
    accumulator: float = 0.0


def posture_adjust(
    ctrl: PostureController, phi: float, phi_dot: float, q_hip_desired: float
) -> float:
    """Adjusted support-hip target for this tick."""
    omega_d = ctrl.gains.kp * (ctrl.phi_ref - phi) - ctrl.gains.kd * phi_dot
    ctrl.accumulator += omega_d * ctrl.dt
    return q_hip_desired + ctrl.accumulator


def reset_on_exchange(ctrl: PostureController) -> PostureController:
    """Clear the accumulated adjustment when the support leg changes."""
    ctrl.accumulator = 0.0
    return ctrl


# (kp multiplier on K_u, t_i divisor of T_u, t_d multiplier on T_u)
_ZN_TABLE = {
    "classic": (0.6, 2.0, 1.0 / 8.0),
    "piae": (0.7, 2.5, 3.0 / 20.0),
    "some_overshoot": (0.33, 2.0, 1.0 / 3.0),
    "no_overshoot": (0.2, 2.0, 1.0 / 3.0),
}


def zn_gains(k_u: float, t_u: float, control_type: str):
    """Closed-loop tuning rules from the ultimate gain and period.

    Returns (kp, t_i, t_d) for the requested rule; the derivative gain in
    standard form is kd = kp * t_d.
    """
    if not (k_u > 0 and t_u > 0):
        raise ValueError(f"k_u and t_u must be > 0, got {k_u}, {t_u}")
    key = control_type.strip().lower().replace(" ", "_")
    if key not in _ZN_TABLE:
        raise ValueError(
            f"unknown control type {control_type!r}; "
            f"expected one of {sorted(_ZN_TABLE)}"
        )
    kp_f, ti_div, td_f = _ZN_TABLE[key]
    return kp_f * k_u, t_u / ti_div, td_f * t_u


def zn_pd_gains(k_u: float, t_u: float, control_type: str) -> PdGains:
    """PD gains (kd = kp * t_d) from the same tuning table."""
    kp, _, td = zn_gains(k_u, t_u, control_type)
    return PdGains(kp=kp, kd=kp * td)
