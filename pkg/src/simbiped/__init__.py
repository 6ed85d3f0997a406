"""simbiped: planar bipedal walking on pendulum-model control.

Analytic pendulum dynamics, step-to-step gait planning, leg inverse
kinematics, filtered PD joint control, a small deterministic rigid-body
engine, and the scenario harness that ties them into walking and
gain-tuning experiments.
"""

from . import control, gait, kinematics, lipm, physics
from .control import (
    LowPassState, PdController, PdGains, PostureController,
    filter_step, pd_torque, posture_adjust, reset_on_exchange, zn_gains,
)
from .gait import (
    GaitParams, StepPlan, foot_placement, foot_velocity, foot_x, foot_z,
    plan_step, propagate_step_velocity,
)
from .kinematics import (
    JointLimits, LegAngles, RobotGeometry, clamp_joint_limits, fk_leg,
    ik_support, ik_swing, level_swing_xi,
)
from .lipm import (
    ConstraintLine, ConstraintPlane, Lipm3dState, LipmParams, LipmState,
    OrbitalEnergyPair, accel_from_zmp, evolve, evolve_3d, hyperbola_residual,
    orbital_energy, orbital_energy_rotated, sloped_dynamics_accel,
    time_constant, zmp_from_torque, zmp_from_trajectory,
)
from .physics import World, WorldConfig, build_robot

__version__ = "0.1.0"
