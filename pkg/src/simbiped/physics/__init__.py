"""Minimal deterministic 2-D rigid-body engine for the walking scenarios."""

from .body import RigidBody
from .contacts import MARGIN
from .joints import RevoluteJoint
from .robot import SPEED_LIMITS, TORQUE_LIMIT, BipedRobot, build_robot
from .world import ContactState, World, WorldConfig

__all__ = [
    "RigidBody", "RevoluteJoint", "World", "WorldConfig", "ContactState",
    "BipedRobot", "build_robot", "SPEED_LIMITS", "TORQUE_LIMIT", "MARGIN",
]
