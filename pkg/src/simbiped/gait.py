"""Step-to-step planning and swing-foot trajectories.

The forward-speed controller works step to step: the pendulum equations
propagate the CoM state across the current step, and the touchdown point of
the swing foot is chosen so the *following* step ends at the desired
velocity.  Within a step the swing foot follows piecewise cubics with zero
endpoint velocities (smooth lift-off and touchdown).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ReachError
from .lipm import LipmParams, LipmState, evolve


@dataclass(frozen=True)
class GaitParams:
    """Stride timing and targets.

    t_step: step duration (s); t_m: time of the swing-foot apex (s);
    z_fm: apex foot height (m); v_d: desired forward velocity (m/s).
    """

    t_step: float = 0.4
    t_m: float = 0.2
    z_fm: float = 0.222
    v_d: float = 0.6

    def __post_init__(self):
        if not self.t_step > 0:
            raise ValueError(f"t_step must be > 0, got {self.t_step}")
        if not 0 < self.t_m < self.t_step:
            raise ValueError(f"t_m must lie in (0, t_step), got {self.t_m}")
        if not self.z_fm > 0:
            raise ValueError(f"z_fm must be > 0, got {self.z_fm}")

    def tau_s(self, params: LipmParams) -> float:
        """Normalized step time t_step / T_c."""
        return self.t_step / params.t_c


@dataclass(frozen=True)
class StepPlan:
    """Boundary conditions for one stride.

    Foot positions are world coordinates of the swing foot point; p_n is the
    planned touchdown position relative to the CoM at the end of the step.
    """

    x_fs: float
    x_fe: float
    z_fs: float
    z_fe: float
    z_fm: float
    p_n: float
    xdot_s_next: float
    xdot_e_next: float
    step_index: int = 0

    def __post_init__(self):
        if self.z_fm < max(self.z_fs, self.z_fe):
            raise ValueError(
                f"apex {self.z_fm} must clear the endpoints "
                f"({self.z_fs}, {self.z_fe})"
            )


def propagate_step_velocity(
    state: LipmState, params: LipmParams, gait: GaitParams
) -> float:
    """CoM velocity at the end of the step started at `state`.

    With no velocity loss at support exchange this is also the start
    velocity of the next step.
    """
    return evolve(state, params, gait.t_step).x_dot


def foot_placement(
    xdot_s_next: float,
    xdot_e_target: float,
    params: LipmParams,
    gait: GaitParams,
) -> float:
    """Touchdown position (relative to the CoM) hitting a velocity target.

    p = T_c xd_s coth(tau_s) - T_c xd_e csch(tau_s); the next step then
    starts at x = -p and ends with velocity xd_e exactly.
    """
    tau = gait.tau_s(params)
    if not tau > 0:
        raise ValueError(f"normalized step time must be > 0, got {tau}")
    tc = params.t_c
    sh = math.sinh(tau)
    return tc * xdot_s_next * math.cosh(tau) / sh - tc * xdot_e_target / sh


def plan_step(
    state: LipmState,
    params: LipmParams,
    gait: GaitParams,
    swing_foot: tuple[float, float] = (0.0, 0.0),
    support_x: float = 0.0,
    step_index: int = 0,
    max_leg: float | None = None,
) -> StepPlan:
    """Plan one stride from the CoM state captured at support exchange.

    `swing_foot` is the current world position of the swing foot point and
    `support_x` the world x of the support point; the touchdown target is
    placed p_n ahead of the predicted end-of-step CoM.  If `max_leg` is
    given, a touchdown that would stretch the leg beyond it raises.
    """
    xdot_s_next = propagate_step_velocity(state, params, gait)
    p_n = foot_placement(xdot_s_next, gait.v_d, params, gait)
    if max_leg is not None:
        stretch = math.hypot(p_n, params.z_c)
        if stretch > max_leg:
            raise ReachError(
                f"touchdown {p_n:.3f} m needs leg {stretch:.3f} m > {max_leg:.3f} m"
            )
    com_end = support_x + evolve(state, params, gait.t_step).x
    return StepPlan(
        x_fs=swing_foot[0],
        x_fe=com_end + p_n,
        z_fs=swing_foot[1],
        z_fe=swing_foot[1],
        z_fm=gait.z_fm,
        p_n=p_n,
        xdot_s_next=xdot_s_next,
        xdot_e_next=gait.v_d,
        step_index=step_index,
    )


def _check_phase(t: float, gait: GaitParams):
    if not 0.0 <= t <= gait.t_step:
        raise ValueError(f"step phase t={t} outside [0, {gait.t_step}]")


def _cubic(s: float) -> float:
    # 3 s^2 - 2 s^3: 0 -> 0, 1 -> 1 with zero slope at both ends
    return s * s * (3.0 - 2.0 * s)


def _cubic_rate(s: float) -> float:
    return 6.0 * s * (1.0 - s)


def foot_x(t: float, plan: StepPlan, gait: GaitParams) -> float:
    """Horizontal swing-foot position at phase time t in [0, t_step]."""
    _check_phase(t, gait)
    return plan.x_fs + (plan.x_fe - plan.x_fs) * _cubic(t / gait.t_step)


def foot_z(t: float, plan: StepPlan, gait: GaitParams) -> float:
    """Swing-foot height: rises to the apex by t_m, then descends."""
    _check_phase(t, gait)
    if t <= gait.t_m:
        return plan.z_fs + (plan.z_fm - plan.z_fs) * _cubic(t / gait.t_m)
    s = (t - gait.t_m) / (gait.t_step - gait.t_m)
    return plan.z_fm + (plan.z_fe - plan.z_fm) * _cubic(s)


def foot_velocity(t: float, plan: StepPlan, gait: GaitParams):
    """Analytic time derivative (xd_f, zd_f) of the swing-foot cubics."""
    _check_phase(t, gait)
    xd = (plan.x_fe - plan.x_fs) * _cubic_rate(t / gait.t_step) / gait.t_step
    if t <= gait.t_m:
        zd = (plan.z_fm - plan.z_fs) * _cubic_rate(t / gait.t_m) / gait.t_m
    else:
        rest = gait.t_step - gait.t_m
        zd = (plan.z_fe - plan.z_fm) * _cubic_rate((t - gait.t_m) / rest) / rest
    return xd, zd
