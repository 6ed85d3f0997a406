"""Revolute joints with torque-command motors and optional angle locks.

The point-to-point part is a standard sequential-impulse block solve.  The
motor realizes a torque command with joint-speed saturation: each velocity
iteration drives the relative speed toward +-speed_limit in the command's
direction, with the accumulated motor impulse clamped to |u| * dt.  Below
the speed limit this applies exactly the commanded torque; at the limit the
accelerating component vanishes.  A locked joint replaces the motor with a
hard angular constraint (used for the fixed-ankle robot variant).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .body import RigidBody


@dataclass
class RevoluteJoint:
    """Pin joint between parent and child bodies with local anchors.

    The angle readout is ref + (child.angle - parent.angle); ref is set at
    build time so readouts match the leg-angle conventions.
    """

    name: str
    parent: RigidBody
    child: RigidBody
    anchor_parent: tuple[float, float]
    anchor_child: tuple[float, float]
    torque_limit: float = 100.0
    speed_limit: float = math.inf
    ref: float = 0.0
    locked_angle: float | None = None  # readout value to hold, if locked

    command: float = 0.0  # clamped torque command for this step
    impulse: list = field(default_factory=lambda: [0.0, 0.0])
    motor_impulse: float = 0.0

    def set_command(self, torque: float):
        self.command = min(max(torque, -self.torque_limit), self.torque_limit)

    @property
    def angle(self) -> float:
        return self.ref + (self.child.angle - self.parent.angle)

    @property
    def speed(self) -> float:
        return self.child.w - self.parent.w

    @property
    def applied_torque(self) -> float:
        """Motor torque actually applied during the last step."""
        return self._last_motor_torque

    _last_motor_torque: float = 0.0

    # -- solver --------------------------------------------------------

    def init_velocity_constraints(self, dt: float, warm_start: bool = True):
        a, b = self.parent, self.child
        ca, sa = math.cos(a.angle), math.sin(a.angle)
        cb, sb = math.cos(b.angle), math.sin(b.angle)
        lax, laz = self.anchor_parent
        lbx, lbz = self.anchor_child
        self._rax = ca * lax - sa * laz
        self._raz = sa * lax + ca * laz
        self._rbx = cb * lbx - sb * lbz
        self._rbz = sb * lbx + cb * lbz

        k11 = a.inv_mass + b.inv_mass
        k11 += a.inv_inertia * self._raz ** 2 + b.inv_inertia * self._rbz ** 2
        k22 = a.inv_mass + b.inv_mass
        k22 += a.inv_inertia * self._rax ** 2 + b.inv_inertia * self._rbx ** 2
        k12 = -(a.inv_inertia * self._rax * self._raz
                + b.inv_inertia * self._rbx * self._rbz)
        det = k11 * k22 - k12 * k12
        inv_det = 1.0 / det if det != 0.0 else 0.0
        self._m11 = k22 * inv_det
        self._m22 = k11 * inv_det
        self._m12 = -k12 * inv_det

        inv_i = a.inv_inertia + b.inv_inertia
        self._motor_mass = 1.0 / inv_i if inv_i > 0.0 else 0.0
        self._max_motor_impulse = abs(self.command) * dt
        self._motor_target = (
            math.copysign(self.speed_limit, self.command)
            if self.command != 0.0 else 0.0
        )
        self.motor_impulse = 0.0
        self._dt = dt

        if warm_start:
            px, pz = self.impulse
            b.apply_impulse(px, pz, self._rbx, self._rbz)
            a.apply_impulse(-px, -pz, self._rax, self._raz)
        else:
            self.impulse = [0.0, 0.0]

    def solve_velocity(self):
        a, b = self.parent, self.child

        # motor / lock: 1-D angular constraint on relative speed
        if self.locked_angle is not None:
            d_lambda = self._motor_mass * (0.0 - self.speed)
            self.motor_impulse += d_lambda
            a.w -= a.inv_inertia * d_lambda
            b.w += b.inv_inertia * d_lambda
        elif self.command != 0.0:
            d_lambda = self._motor_mass * (self._motor_target - self.speed)
            total = self.motor_impulse + d_lambda
            total = min(max(total, -self._max_motor_impulse),
                        self._max_motor_impulse)
            d_lambda = total - self.motor_impulse
            self.motor_impulse = total
            a.w -= a.inv_inertia * d_lambda
            b.w += b.inv_inertia * d_lambda

        # point-to-point
        vax, vaz = a.velocity_at(self._rax, self._raz)
        vbx, vbz = b.velocity_at(self._rbx, self._rbz)
        cx, cz = vbx - vax, vbz - vaz
        px = -(self._m11 * cx + self._m12 * cz)
        pz = -(self._m12 * cx + self._m22 * cz)
        self.impulse[0] += px
        self.impulse[1] += pz
        b.apply_impulse(px, pz, self._rbx, self._rbz)
        a.apply_impulse(-px, -pz, self._rax, self._raz)

    def finish_step(self):
        self._last_motor_torque = self.motor_impulse / self._dt if self._dt else 0.0

    def solve_position(self, beta: float):
        """One nonlinear Gauss-Seidel pass on the anchor coincidence (and
        the angle, if locked), moving a fraction beta of the error."""
        a, b = self.parent, self.child

        if self.locked_angle is not None:
            c = self.angle - self.locked_angle
            correction = -beta * c * self._motor_mass
            a.angle -= a.inv_inertia * correction
            b.angle += b.inv_inertia * correction

        ca, sa = math.cos(a.angle), math.sin(a.angle)
        cb, sb = math.cos(b.angle), math.sin(b.angle)
        lax, laz = self.anchor_parent
        lbx, lbz = self.anchor_child
        rax = ca * lax - sa * laz
        raz = sa * lax + ca * laz
        rbx = cb * lbx - sb * lbz
        rbz = sb * lbx + cb * lbz
        cx = (b.x + rbx) - (a.x + rax)
        cz = (b.z + rbz) - (a.z + raz)

        k11 = a.inv_mass + b.inv_mass + a.inv_inertia * raz ** 2 + b.inv_inertia * rbz ** 2
        k22 = a.inv_mass + b.inv_mass + a.inv_inertia * rax ** 2 + b.inv_inertia * rbx ** 2
        k12 = -(a.inv_inertia * rax * raz + b.inv_inertia * rbx * rbz)
        det = k11 * k22 - k12 * k12
        if det == 0.0:
            return
        inv_det = beta / det
        px = -(k22 * cx - k12 * cz) * inv_det
        pz = -(k11 * cz - k12 * cx) * inv_det

        a.x -= a.inv_mass * px
        a.z -= a.inv_mass * pz
        a.angle -= a.inv_inertia * (rax * pz - raz * px)
        b.x += b.inv_mass * px
        b.z += b.inv_mass * pz
        b.angle += b.inv_inertia * (rbx * pz - rbz * px)
