"""Walking state machine: one support leg at a time, re-planned per step.

The pendulum reference is continuous and feedforward: at each support
exchange its state carries over (the no-loss assumption), re-expressed
relative to the real position of the new support ankle, and a fresh step
is planned from it.  Within a step the joint targets come from the
closed-form reference and the swing-foot cubics, not from measurements,
so measured velocity enters only through the small exchange-time blend
below.  The posture controller biases the support-hip target and its
accumulator is cleared at every exchange.

The scenario's torso-inclination setpoint serves double duty: it is the
posture reference, and it tilts the leg targets forward by the same angle.
The tilt keeps the real pendulum slightly ahead of its reference, which is
what sustains a forward speed above the plan's own average.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..control import (
    LowPassState, PdController, PdGains, PostureController,
    filter_step, pd_torque, posture_adjust, reset_on_exchange,
)
from ..errors import ReachError
from ..gait import GaitParams, StepPlan, foot_x, foot_z, plan_step
from ..kinematics import (
    JointLimits, LegAngles, clamp_joint_limits, ik_support, ik_swing,
    level_swing_xi,
)
from ..lipm import LipmParams, LipmState, evolve
from ..physics.robot import BipedRobot

# contact during the last fifth of a step hands support over early;
# the step timer is authoritative at full step time either way
EARLY_CONTACT_FRACTION = 0.8

# fraction of the measured (filtered) forward speed blended into the
# reference at exchange; bounds the real-vs-reference velocity gap that
# the forward tilt keeps regenerating
VELOCITY_BLEND = 0.26

# cap on the support-leg reference excursion (m); keeps the stance knee
# flexed so a reference-tracking error cannot pole-vault the hips
SUPPORT_X_CAP = 0.38

# hip gains by role when the dual-gain option is on: the stance hip
# carries the torso (in-air rig tuning), the swing hip only the leg
# (on-ground rig tuning)
DUAL_HIP_GAINS = {"support": PdGains(100.5, 5.0), "swing": PdGains(22.5, 0.85)}

OTHER = {"a": "b", "b": "a"}


@dataclass
class WalkerState:
    params: LipmParams
    gait: GaitParams
    limits: JointLimits
    lean: float = 0.0  # forward inclination of the gait frame (rad)
    support: str = "a"
    step_index: int = 0
    time_in_step: float = 0.0
    plan: StepPlan | None = None
    lipm0: LipmState = LipmState(0.0, 0.0)
    anchor_x: float = 0.0
    posture: PostureController = field(default_factory=PostureController)
    pds: dict = field(default_factory=dict)
    reach_errors: int = 0
    early_contacts: int = 0
    dual_hip_gains: bool = False
    vx_filter: LowPassState = field(
        default_factory=lambda: LowPassState(alpha=0.25)
    )

    @property
    def swing(self) -> str:
        return OTHER[self.support]


def make_walker(robot: BipedRobot, gains: dict, theta_d: float,
                gait: GaitParams = GaitParams(),
                dt: float = 1.0 / 60.0,
                dual_hip_gains: bool = False) -> WalkerState:
    """Controllers and the first step plan for a freshly built robot."""
    params = LipmParams(z_c=robot.geom.h_c)
    pds = {}
    for name in robot.joint_names:
        joint_type = name.rsplit("_", 1)[0]
        kp, kd = gains[joint_type]
        angle, _ = robot.world.joint_readout(name)
        pds[name] = PdController(gains=PdGains(kp, kd), target=angle,
                                 filter=LowPassState())
    state = WalkerState(
        params=params, gait=gait, limits=JointLimits(), lean=theta_d,
        posture=PostureController(gains=PdGains(*gains["posture"]),
                                  phi_ref=theta_d, dt=dt),
        pds=pds, dual_hip_gains=dual_hip_gains,
    )
    _start_step(state, robot, first=True)
    return state


def _start_step(state: WalkerState, robot: BipedRobot, first: bool = False):
    """Re-anchor the pendulum reference on the new support ankle and plan.

    The reference state at the exchange instant carries over, re-expressed
    relative to the real position of the new support ankle; only a small
    fraction of the measured forward speed is blended in.
    """
    anchor_x, _ = robot.ankle_position(state.support)
    if first:
        cx, _, cvx, _ = robot.com()
        state.lipm0 = LipmState(cx - anchor_x, cvx)
    else:
        ref = evolve(state.lipm0, state.params, state.time_in_step)
        v_ref = ref.x_dot + VELOCITY_BLEND * (state.vx_filter.y_prev - ref.x_dot)
        state.lipm0 = LipmState(ref.x - (anchor_x - state.anchor_x), v_ref)
    state.anchor_x = anchor_x
    swing_x, _ = robot.ankle_position(state.swing)
    try:
        state.plan = plan_step(
            state.lipm0, state.params, state.gait,
            swing_foot=(swing_x, 0.0), support_x=anchor_x,
            step_index=state.step_index, max_leg=robot.geom.max_reach,
        )
    except ReachError:
        state.reach_errors += 1
        state.plan = plan_step(
            state.lipm0, state.params, state.gait,
            swing_foot=(swing_x, 0.0), support_x=anchor_x,
            step_index=state.step_index, max_leg=None,
        )
    state.time_in_step = 0.0
    reset_on_exchange(state.posture)


def detect_exchange(state: WalkerState, robot: BipedRobot) -> bool:
    """Timer-authoritative exchange with a late-contact window."""
    t = state.time_in_step
    if t >= state.gait.t_step - 1e-9:
        return True
    if t >= EARLY_CONTACT_FRACTION * state.gait.t_step \
            and robot.foot_on_ground(state.swing):
        state.early_contacts += 1
        return True
    return False


def detect_fall(robot: BipedRobot) -> bool:
    """Torso center below half the commanded height, or torso on ground."""
    torso = robot.torso
    if torso.z < 0.5 * robot.geom.h_c:
        return True
    return robot.world.contacts().on_ground("torso")


def _clamped_support_x(x_t: float, geom) -> tuple[float, bool]:
    drop = geom.h_c - geom.h_f
    limit = min(math.sqrt(max(geom.max_reach ** 2 - drop ** 2, 0.0)),
                SUPPORT_X_CAP)
    if abs(x_t) > limit:
        return math.copysign(limit, x_t), True
    return x_t, False


def _clamped_swing(dx: float, drop: float, geom) -> tuple[float, bool]:
    if math.hypot(dx, drop) <= geom.max_reach:
        return dx, False
    limit = math.sqrt(max(geom.max_reach ** 2 - drop ** 2, 0.0))
    return math.copysign(limit, dx), True


def walker_tick(state: WalkerState, robot: BipedRobot):
    """Targets and torques for one control tick.

    Returns (commands, desired) keyed by joint name.  Call before stepping
    the world, then advance time with `advance_time`.
    """
    state.vx_filter, _ = filter_step(state.vx_filter, robot.com()[2])
    if detect_exchange(state, robot):
        state.support = state.swing
        state.step_index += 1
        _start_step(state, robot)

    geom = robot.geom
    t = state.time_in_step
    x_ref = evolve(state.lipm0, state.params, t).x

    x_sup, clamped = _clamped_support_x(x_ref, geom)
    if clamped:
        state.reach_errors += 1
    support_angles = ik_support(x_sup, geom)
    ik_gamma_support = support_angles.gamma

    # the swing chain solves to the ankle: sole trajectory plus foot height
    foot_wx = foot_x(t, state.plan, state.gait)
    ankle_z = foot_z(t, state.plan, state.gait) + geom.h_f
    drop = geom.h_c - ankle_z
    dx_raw = (foot_wx - state.anchor_x) - x_sup
    dx, clamped = _clamped_swing(dx_raw, drop, geom)
    if clamped:
        state.reach_errors += 1
    swing_angles = ik_swing(x_sup, (x_sup + dx, ankle_z), geom)
    # hold the swing sole level; the support-convention ankle target
    swing_angles = LegAngles(swing_angles.gamma, swing_angles.theta,
                             level_swing_xi(swing_angles))

    # posture control works on lean-forward-positive pitch; world pitch is
    # counterclockwise-positive, so mirror the measurement.  phi_ref > 0
    # then holds a slight forward lean and the accumulated hip adjustment
    # rights the torso (negative feedback through the hip reaction torque).
    phi, phi_dot = robot.torso_pitch()
    hip_target = posture_adjust(
        state.posture, -phi, -phi_dot, support_angles.gamma
    )
    support_angles = LegAngles(hip_target, support_angles.theta,
                               support_angles.xi)

    support_angles = clamp_joint_limits(support_angles, state.limits)
    swing_angles = clamp_joint_limits(swing_angles, state.limits)

    # ankle targets convert from the leg-chain convention to the joint
    # sensor frame: sensor = ref + (foot pitch - shin pitch), which for a
    # chain angle xi works out to ref + xi - 2 gamma (gamma before the
    # posture adjustment).  The support formula then reads exactly "hold
    # the sole level under the current leg pose".
    desired = {}
    for leg, angles, gamma_ik in (
        (state.support, support_angles, ik_gamma_support),
        (state.swing, swing_angles, swing_angles.gamma),
    ):
        desired[f"hip_{leg}"] = angles.gamma - state.lean
        desired[f"knee_{leg}"] = angles.theta
        if robot.feet != "none":
            desired[f"ankle_{leg}"] = robot.ankle_ref + angles.xi - 2.0 * gamma_ik

    if state.dual_hip_gains:
        state.pds[f"hip_{state.support}"].gains = DUAL_HIP_GAINS["support"]
        state.pds[f"hip_{state.swing}"].gains = DUAL_HIP_GAINS["swing"]

    commands = {}
    for name in robot.joint_names:
        ctrl = state.pds[name]
        ctrl.target = desired[name]
        q, q_dot = robot.world.joint_readout(name)
        commands[name] = pd_torque(ctrl, q, q_dot)
    return commands, desired


def advance_time(state: WalkerState, dt: float):
    state.time_in_step += dt
