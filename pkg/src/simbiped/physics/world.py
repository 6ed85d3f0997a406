"""Deterministic fixed-step world: gravity, joints, motors, ground contact.

Stepping order is semi-implicit Euler with a sequential-impulse velocity
solve and a nonlinear Gauss-Seidel position pass: integrate forces, solve
velocity constraints (joints, motors, contacts), integrate positions, then
correct positional drift.  Identical configurations and command streams
produce bit-identical trajectories.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InstabilityError
from .body import RigidBody
from .contacts import (collect_contacts, group_blocks, solve_block,
                        solve_contact_positions)
from .joints import RevoluteJoint

VELOCITY_BLOWUP = 1e3


@dataclass(frozen=True)
class WorldConfig:
    gravity: float = 9.81  # downward, m/s^2
    dt: float = 1.0 / 60.0
    velocity_iterations: int = 8
    position_iterations: int = 3
    ground_friction: float = 2.5
    baumgarte: float = 0.2
    slop: float = 1e-3

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError(f"dt must be > 0, got {self.dt}")
        if self.velocity_iterations < 1 or self.position_iterations < 1:
            raise ValueError("iteration counts must be >= 1")


@dataclass
class ContactState:
    """Per-body ground contact flags and the solved normal impulses."""

    touching: dict = field(default_factory=dict)
    points: list = field(default_factory=list)
    normal_impulses: list = field(default_factory=list)
    body_names: list = field(default_factory=list)

    def on_ground(self, body_name: str) -> bool:
        return self.touching.get(body_name, False)

    def body_impulse(self, body_name: str) -> float:
        """Total normal impulse carried by one body this step."""
        return sum(
            imp for name, imp in zip(self.body_names, self.normal_impulses)
            if name == body_name
        )


class World:
    def __init__(self, config: WorldConfig = WorldConfig()):
        self.config = config
        self.bodies: list[RigidBody] = []
        self.joints: list[RevoluteJoint] = []
        self._joint_index: dict[str, RevoluteJoint] = {}
        self._warm_contacts: dict = {}
        self.contact_state = ContactState()
        self.ticks = 0

    def add_body(self, body: RigidBody) -> RigidBody:
        self.bodies.append(body)
        return body

    def add_joint(self, joint: RevoluteJoint) -> RevoluteJoint:
        if joint.name in self._joint_index:
            raise ValueError(f"duplicate joint name {joint.name!r}")
        self.joints.append(joint)
        self._joint_index[joint.name] = joint
        return joint

    def joint(self, name: str) -> RevoluteJoint:
        try:
            return self._joint_index[name]
        except KeyError:
            raise KeyError(f"unknown joint {name!r}") from None

    def body(self, name: str) -> RigidBody:
        for b in self.bodies:
            if b.name == name:
                return b
        raise KeyError(f"unknown body {name!r}")

    # -- readouts ------------------------------------------------------

    def joint_readout(self, name: str):
        """(relative angle, relative angular velocity) of a joint."""
        j = self.joint(name)
        return j.angle, j.speed

    def com_state(self):
        """Mass-weighted CoM position and velocity of all dynamic bodies."""
        m = x = z = vx = vz = 0.0
        for b in self.bodies:
            if b.static:
                continue
            m += b.mass
            x += b.mass * b.x
            z += b.mass * b.z
            vx += b.mass * b.vx
            vz += b.mass * b.vz
        if m == 0.0:
            raise ValueError("world has no dynamic bodies")
        return x / m, z / m, vx / m, vz / m

    def contacts(self) -> ContactState:
        return self.contact_state

    # -- stepping ------------------------------------------------------

    def step(self, joint_torques: dict | None = None):
        """Advance one fixed step with the given torque commands."""
        cfg = self.config
        dt = cfg.dt

        for j in self.joints:
            j.set_command((joint_torques or {}).get(j.name, 0.0))

        for b in self.bodies:
            if b.static:
                continue
            b.vx += dt * b.inv_mass * b.force[0]
            b.vz += dt * (b.inv_mass * b.force[1] - cfg.gravity)
            b.w += dt * b.inv_inertia * b.torque

        contacts = collect_contacts(self.bodies, cfg.ground_friction, dt)
        for c in contacts:
            c.init_velocity_constraints(dt, self._warm_contacts.get(c.key, (0.0, 0.0)))
        blocks, singles = group_blocks(contacts)
        for j in self.joints:
            j.init_velocity_constraints(dt)

        for _ in range(cfg.velocity_iterations):
            for j in self.joints:
                j.solve_velocity()
            for c1, c2 in blocks:
                solve_block(c1, c2)
                c1.solve_friction()
                c2.solve_friction()
            for c in singles:
                c.solve_normal()
                c.solve_friction()

        for b in self.bodies:
            if b.static:
                continue
            b.x += dt * b.vx
            b.z += dt * b.vz
            b.angle += dt * b.w
            b.force[0] = b.force[1] = 0.0
            b.torque = 0.0

        for _ in range(cfg.position_iterations):
            for j in self.joints:
                j.solve_position(cfg.baumgarte)
            solve_contact_positions(self.bodies, cfg.baumgarte, cfg.slop)

        self._warm_contacts = {
            c.key: (c.normal_impulse, c.tangent_impulse) for c in contacts
        }
        state = ContactState()
        for c in contacts:
            if c.normal_impulse > 0.0:
                state.touching[c.body.name] = True
                state.points.append((c.body.x + c.rx, c.body.z + c.rz))
                state.normal_impulses.append(c.normal_impulse)
                state.body_names.append(c.body.name)
        self.contact_state = state

        for j in self.joints:
            j.finish_step()

        for b in self.bodies:
            if abs(b.vx) > VELOCITY_BLOWUP or abs(b.vz) > VELOCITY_BLOWUP \
                    or abs(b.w) > VELOCITY_BLOWUP:
                raise InstabilityError(
                    f"velocity blow-up on body {b.name!r} at tick {self.ticks}"
                )
        self.ticks += 1

    def mechanical_energy(self) -> float:
        """Kinetic plus gravitational potential energy of dynamic bodies."""
        e = 0.0
        for b in self.bodies:
            if b.static:
                continue
            e += b.kinetic_energy() + b.mass * self.config.gravity * b.z
        return e
