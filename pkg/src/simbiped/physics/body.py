"""Rigid bodies: axis-aligned boxes in body frame, planar pose and twist."""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass
class RigidBody:
    """One planar rigid body with a box collision shape.

    mass = 0 makes the body static (infinite mass and inertia).  Pose is
    (x, z, angle) with angle counterclockwise; velocity is (vx, vz, w).
    Inertia follows the uniform rectangle formula m (w^2 + h^2) / 12.
    """

    name: str
    half_w: float
    half_h: float
    mass: float
    friction: float = 0.1
    x: float = 0.0
    z: float = 0.0
    angle: float = 0.0
    vx: float = 0.0
    vz: float = 0.0
    w: float = 0.0
    collide: bool = True
    force: list = field(default_factory=lambda: [0.0, 0.0])
    torque: float = 0.0

    def __post_init__(self):
        if self.mass < 0:
            raise ValueError(f"mass must be >= 0, got {self.mass}")
        if self.mass == 0.0:
            self.inv_mass = 0.0
            self.inertia = 0.0
            self.inv_inertia = 0.0
        else:
            self.inv_mass = 1.0 / self.mass
            w, h = 2.0 * self.half_w, 2.0 * self.half_h
            self.inertia = self.mass * (w * w + h * h) / 12.0
            self.inv_inertia = 1.0 / self.inertia

    @property
    def static(self) -> bool:
        return self.inv_mass == 0.0

    def world_point(self, lx: float, lz: float):
        c, s = math.cos(self.angle), math.sin(self.angle)
        return self.x + c * lx - s * lz, self.z + s * lx + c * lz

    def corners(self):
        """World positions of the four box corners."""
        return [
            self.world_point(sx * self.half_w, sz * self.half_h)
            for sx, sz in ((-1, -1), (1, -1), (1, 1), (-1, 1))
        ]

    def velocity_at(self, rx: float, rz: float):
        """Velocity of a point at world offset (rx, rz) from the center."""
        return self.vx - self.w * rz, self.vz + self.w * rx

    def apply_impulse(self, px: float, pz: float, rx: float, rz: float):
        self.vx += self.inv_mass * px
        self.vz += self.inv_mass * pz
        self.w += self.inv_inertia * (rx * pz - rz * px)

    def kinetic_energy(self) -> float:
        lin = 0.5 * self.mass * (self.vx * self.vx + self.vz * self.vz)
        return lin + 0.5 * self.inertia * self.w * self.w
