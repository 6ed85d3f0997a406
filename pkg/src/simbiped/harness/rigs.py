"""Gain-tuning rigs: isolated joints tracking a sine-wave target.

Each rig pins part of the robot with infinite-mass (static) bodies and
drives one joint family with PD control toward a sine target around the
initial readout.  Amplitude 0.5 rad at 0.5 Hz keeps the targets well inside
the joint speed limits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..kinematics import RobotGeometry
from ..physics.robot import BipedRobot, build_robot
from ..physics.world import WorldConfig

SINE_AMPLITUDE = 0.5  # rad
SINE_FREQUENCY = 0.5  # Hz
TRANSIENT = 2.5  # s of settling excluded from tracking metrics


@dataclass
class Rig:
    robot: BipedRobot
    driven: list  # joint names receiving the sine target
    measured: str  # joint scored for tracking error
    offsets: dict  # joint -> initial readout the sine rides on
    free: tuple = ()  # joints left uncommanded (would fight the rig)

    def target(self, joint: str, t: float) -> float:
        return self.offsets[joint] + SINE_AMPLITUDE * math.sin(
            2.0 * math.pi * SINE_FREQUENCY * t
        )


def _pin(robot: BipedRobot, *names: str):
    for name in names:
        body = robot.world.body(name)
        body.inv_mass = 0.0
        body.inv_inertia = 0.0
        body.vx = body.vz = body.w = 0.0


def _lift(robot: BipedRobot, dz: float):
    for body in robot.world.bodies:
        body.z += dz


def _offsets(robot: BipedRobot, joints) -> dict:
    return {j: robot.world.joint_readout(j)[0] for j in joints}


def build_rig(scenario: str, geom: RobotGeometry = RobotGeometry()) -> Rig:
    if scenario == "tune_hip_air":
        # hip and knee were tuned on the point-feet robot variant; the
        # dangling legs swing rigidly (knees mechanically held), so the
        # hip actuator sees a clean pendulum load
        config = WorldConfig(gravity=0.0)
        robot = build_robot(RobotGeometry.point_feet(), feet="none",
                            x_init=0.0, config=config)
        _pin(robot, "torso")
        _lift(robot, 1.0)
        for leg in ("a", "b"):
            joint = robot.world.joint(f"knee_{leg}")
            joint.locked_angle = joint.angle
        driven = ["hip_a", "hip_b"]
        free = ("knee_a", "knee_b")
    elif scenario == "tune_hip_ground":
        robot = build_robot(geom, feet="actuated", x_init=0.0)
        _pin(robot, "thigh_a", "shin_a", "foot_a",
             "thigh_b", "shin_b", "foot_b")
        driven = ["hip_a"]
        free = ("hip_b",)
    elif scenario == "tune_knee":
        robot = build_robot(RobotGeometry.point_feet(), feet="none",
                            x_init=0.0)
        _pin(robot, "torso", "thigh_a", "thigh_b")
        _lift(robot, 1.0)
        driven = ["knee_a", "knee_b"]
        free = ()
    elif scenario == "tune_ankle":
        robot = build_robot(geom, feet="actuated", x_init=0.0)
        _pin(robot, "torso", "thigh_a", "thigh_b", "shin_a", "shin_b")
        _lift(robot, 1.0)
        driven = ["ankle_a", "ankle_b"]
        free = ()
    else:
        raise ValueError(f"not a tuning scenario: {scenario!r}")
    return Rig(robot=robot, driven=driven, measured=driven[0],
               offsets=_offsets(robot, driven), free=free)
