"""Box-corner vs ground-halfplane contacts with Coulomb friction.

Contacts are speculative: a corner is active when it is inside a small
margin above the ground or will cross it within the step, and the normal
constraint allows the corner to close the remaining gap but not pass it.
Accumulated impulses are warm-started between steps keyed by corner.
"""

from __future__ import annotations

import math

from .body import RigidBody

MARGIN = 0.005  # activation band above the ground (m)


class GroundContact:
    """One corner of a body against the ground halfplane z = 0."""

    __slots__ = (
        "body", "key", "rx", "rz", "sep", "mu",
        "normal_mass", "tangent_mass", "bias",
        "normal_impulse", "tangent_impulse",
    )

    def __init__(self, body: RigidBody, key, px: float, pz: float, mu: float):
        self.body = body
        self.key = key
        self.rx = px - body.x
        self.rz = pz - body.z
        self.sep = pz
        self.mu = mu
        self.normal_impulse = 0.0
        self.tangent_impulse = 0.0

    def init_velocity_constraints(self, dt: float, warm=(0.0, 0.0)):
        b = self.body
        kn = b.inv_mass + b.inv_inertia * self.rx ** 2
        kt = b.inv_mass + b.inv_inertia * self.rz ** 2
        self.normal_mass = 1.0 / kn if kn > 0.0 else 0.0
        self.tangent_mass = 1.0 / kt if kt > 0.0 else 0.0
        # speculative: may fall through a positive gap, not beyond it
        self.bias = -max(self.sep, 0.0) / dt
        self.normal_impulse, self.tangent_impulse = warm
        b.apply_impulse(
            self.tangent_impulse, self.normal_impulse, self.rx, self.rz
        )

    def solve_normal(self):
        b = self.body
        _, vn = b.velocity_at(self.rx, self.rz)
        d_lambda = -self.normal_mass * (vn - self.bias)
        total = max(self.normal_impulse + d_lambda, 0.0)
        d_lambda = total - self.normal_impulse
        self.normal_impulse = total
        b.apply_impulse(0.0, d_lambda, self.rx, self.rz)

    def solve_friction(self):
        b = self.body
        vt, _ = b.velocity_at(self.rx, self.rz)
        d_lambda = -self.tangent_mass * vt
        bound = self.mu * self.normal_impulse
        total = min(max(self.tangent_impulse + d_lambda, -bound), bound)
        d_lambda = total - self.tangent_impulse
        self.tangent_impulse = total
        b.apply_impulse(d_lambda, 0.0, self.rx, self.rz)


def solve_block(c1: GroundContact, c2: GroundContact):
    """Exact coupled normal solve for two corners of the same body.

    Sequential scalar solves leave a coupling residual that makes resting
    boxes creep; the 2x2 complementarity solve (both corners / one corner /
    none) removes it.  Friction still runs per point afterwards.
    """
    b = c1.body
    k11 = b.inv_mass + b.inv_inertia * c1.rx * c1.rx
    k22 = b.inv_mass + b.inv_inertia * c2.rx * c2.rx
    k12 = b.inv_mass + b.inv_inertia * c1.rx * c2.rx
    det = k11 * k22 - k12 * k12
    if det <= 0.0:
        c1.solve_normal()
        c2.solve_normal()
        return

    _, vn1 = b.velocity_at(c1.rx, c1.rz)
    _, vn2 = b.velocity_at(c2.rx, c2.rz)
    # residual velocities if the accumulated impulses were removed
    f1 = (vn1 - c1.bias) - (k11 * c1.normal_impulse + k12 * c2.normal_impulse)
    f2 = (vn2 - c2.bias) - (k12 * c1.normal_impulse + k22 * c2.normal_impulse)

    n1 = (-k22 * f1 + k12 * f2) / det
    n2 = (k12 * f1 - k11 * f2) / det
    if n1 < 0.0 or n2 < 0.0:
        # single-corner candidates, then separation
        n1, n2 = -f1 / k11, 0.0
        if n1 < 0.0 or f2 + k12 * n1 < 0.0:
            n1, n2 = 0.0, -f2 / k22
            if n2 < 0.0 or f1 + k12 * n2 < 0.0:
                n1 = n2 = 0.0

    d1 = n1 - c1.normal_impulse
    d2 = n2 - c2.normal_impulse
    c1.normal_impulse = n1
    c2.normal_impulse = n2
    b.apply_impulse(0.0, d1, c1.rx, c1.rz)
    b.apply_impulse(0.0, d2, c2.rx, c2.rz)


def collect_contacts(bodies, ground_friction: float, dt: float):
    """Active corner contacts for this step, in deterministic order."""
    out = []
    for bi, body in enumerate(bodies):
        if body.static or not body.collide:
            continue
        mu = math.sqrt(body.friction * ground_friction)
        for ci, (px, pz) in enumerate(body.corners()):
            _, vn = body.velocity_at(px - body.x, pz - body.z)
            if pz < MARGIN or pz + vn * dt < 0.0:
                out.append(GroundContact(body, (bi, ci), px, pz, mu))
    return out


def group_blocks(contacts):
    """Pair up two-corner manifolds per body; the rest solve singly."""
    by_body = {}
    for c in contacts:
        by_body.setdefault(id(c.body), []).append(c)
    blocks, singles = [], []
    for group in by_body.values():
        if len(group) == 2:
            blocks.append((group[0], group[1]))
        else:
            singles.extend(group)
    return blocks, singles


def solve_contact_positions(bodies, beta: float, slop: float):
    """Push penetrating corners back toward the slop band."""
    for body in bodies:
        if body.static or not body.collide:
            continue
        for px, pz in body.corners():
            depth = -pz - slop
            if depth <= 0.0:
                continue
            rx = px - body.x
            kn = body.inv_mass + body.inv_inertia * rx * rx
            if kn == 0.0:
                continue
            impulse = beta * depth / kn
            body.z += body.inv_mass * impulse
            body.angle += body.inv_inertia * rx * impulse
