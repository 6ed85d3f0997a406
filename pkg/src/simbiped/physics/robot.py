"""Planar biped assembly: torso, two legs, optional feet.

The build pose solves both legs with the support-leg trigonometry so the
hips sit at the commanded height with both ankles under the origin and the
feet flat on the ground.  Joint readout references are chosen so that the
hip reads the thigh angle relative to the torso, the knee reads pi when
straight, and the ankle reads the leg-convention value at nominal stance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..kinematics import RobotGeometry, ik_support
from .body import RigidBody
from .joints import RevoluteJoint
from .world import World, WorldConfig

SPEED_LIMITS = {"hip": 4.0, "knee": 6.0, "ankle": 4.0}
TORQUE_LIMIT = 100.0
LEGS = ("a", "b")


@dataclass
class BipedRobot:
    """World plus the naming and geometry needed to drive the biped."""

    world: World
    geom: RobotGeometry
    feet: str  # 'actuated' | 'passive' | 'none'
    joint_names: list
    foot_bodies: dict  # leg -> body name that touches the ground
    ankle_ref: float

    @property
    def torso(self) -> RigidBody:
        return self.world.body("torso")

    @property
    def total_mass(self) -> float:
        return sum(b.mass for b in self.world.bodies if not b.static)

    def com(self):
        """Pendulum-point state: the torso center carries the model mass."""
        t = self.torso
        return t.x, t.z, t.vx, t.vz

    def torso_pitch(self):
        t = self.torso
        return t.angle, t.w

    def ankle_position(self, leg: str):
        """World position of the ankle point (foot top or shin tip)."""
        if self.feet == "none":
            shin = self.world.body(f"shin_{leg}")
            return shin.world_point(0.0, -self.geom.l_shin / 2.0)
        foot = self.world.body(f"foot_{leg}")
        return foot.world_point(0.0, self.geom.h_f / 2.0)

    def foot_on_ground(self, leg: str) -> bool:
        return self.world.contacts().on_ground(self.foot_bodies[leg])

    def foot_weight_contact(self, leg: str) -> bool:
        """Contact carrying a meaningful share of the robot's weight,
        filtering out grazing touches."""
        held = self.world.contacts().body_impulse(self.foot_bodies[leg])
        threshold = 0.2 * self.total_mass * self.world.config.gravity \
            * self.world.config.dt
        return held > threshold

    def leg_joints(self, leg: str):
        names = [f"hip_{leg}", f"knee_{leg}"]
        if self.feet != "none":
            names.append(f"ankle_{leg}")
        return names


def _dir(a: float):
    return math.sin(a), -math.cos(a)


def build_robot(
    geom: RobotGeometry = RobotGeometry(),
    feet: str = "actuated",
    x_init: float = 0.0,
    ankle_lock: float = 0.71,
    config: WorldConfig = WorldConfig(),
) -> BipedRobot:
    """Assemble the biped standing with both ankles above the origin and
    the pendulum point (torso center) at (x_init, h_c)."""
    if feet not in ("actuated", "passive", "none"):
        raise ValueError(f"feet must be actuated|passive|none, got {feet!r}")
    if feet == "none" and geom.h_f != 0.0:
        raise ValueError("point-feet robot requires geometry with h_f = 0")

    world = World(config)
    L = geom.leg
    hip = (x_init, geom.h_c)
    pose = ik_support(x_init, geom)
    a_th = pose.gamma
    a_sh = a_th - (math.pi - pose.theta)

    torso = RigidBody(
        "torso", geom.torso_w / 2, geom.torso_h / 2, geom.torso_mass,
        geom.friction, x=hip[0], z=hip[1],
    )
    world.add_body(torso)

    # ankle readout reference: leg-convention ankle value at nominal stance
    nominal = ik_support(0.0, geom)
    ankle_ref = math.pi - nominal.theta
    # a locked (passive) ankle holds the configured angle around the
    # level-sole-at-nominal-stance readout, which anchors 0.71 rad
    flat_nominal = ankle_ref + 0.5 * (math.pi - nominal.theta)
    locked_readout = flat_nominal + (ankle_lock - 0.71)

    joint_names = []
    foot_bodies = {}
    for leg in LEGS:
        tx = hip[0] + L / 2 * _dir(a_th)[0]
        tz = hip[1] + L / 2 * _dir(a_th)[1]
        thigh = RigidBody(
            f"thigh_{leg}", geom.thigh_w / 2, L / 2, geom.thigh_mass,
            geom.friction, x=tx, z=tz, angle=a_th,
        )
        world.add_body(thigh)

        knee = (hip[0] + L * _dir(a_th)[0], hip[1] + L * _dir(a_th)[1])
        sx = knee[0] + L / 2 * _dir(a_sh)[0]
        sz = knee[1] + L / 2 * _dir(a_sh)[1]
        shin = RigidBody(
            f"shin_{leg}", geom.shin_w / 2, L / 2, geom.shin_mass,
            geom.friction, x=sx, z=sz, angle=a_sh,
        )
        world.add_body(shin)

        world.add_joint(RevoluteJoint(
            f"hip_{leg}", torso, thigh,
            anchor_parent=(0.0, 0.0), anchor_child=(0.0, L / 2),
            torque_limit=TORQUE_LIMIT, speed_limit=SPEED_LIMITS["hip"],
            ref=0.0,
        ))
        world.add_joint(RevoluteJoint(
            f"knee_{leg}", thigh, shin,
            anchor_parent=(0.0, -L / 2), anchor_child=(0.0, L / 2),
            torque_limit=TORQUE_LIMIT, speed_limit=SPEED_LIMITS["knee"],
            ref=math.pi,
        ))
        joint_names += [f"hip_{leg}", f"knee_{leg}"]

        if feet == "none":
            foot_bodies[leg] = f"shin_{leg}"
            continue

        ankle = (knee[0] + L * _dir(a_sh)[0], knee[1] + L * _dir(a_sh)[1])
        foot = RigidBody(
            f"foot_{leg}", geom.foot_len / 2, geom.h_f / 2, geom.foot_mass,
            geom.friction, x=ankle[0], z=ankle[1] - geom.h_f / 2,
        )
        world.add_body(foot)
        world.add_joint(RevoluteJoint(
            f"ankle_{leg}", shin, foot,
            anchor_parent=(0.0, -L / 2), anchor_child=(0.0, geom.h_f / 2),
            torque_limit=TORQUE_LIMIT, speed_limit=SPEED_LIMITS["ankle"],
            ref=ankle_ref,
            locked_angle=locked_readout if feet == "passive" else None,
        ))
        joint_names.append(f"ankle_{leg}")
        foot_bodies[leg] = f"foot_{leg}"

    # telemetry order: all joints of leg a, then leg b
    per_leg = 2 if feet == "none" else 3
    joint_names = joint_names[:per_leg] + joint_names[per_leg:]
    return BipedRobot(
        world=world, geom=geom, feet=feet,
        joint_names=joint_names, foot_bodies=foot_bodies, ankle_ref=ankle_ref,
    )
