"""Analytic leg kinematics for the planar six-joint biped.

Frame and sign conventions (fixed here, enforced by the FK oracle):
x forward, z up, angles positive counterclockwise.  Thighs and shins have
equal length L and the knee bends forward, so each leg is an isosceles
triangle between the hip and the foot point.  A segment's absolute angle is
measured from straight down; gamma is the thigh angle relative to the torso
down-axis, theta the interior knee angle (pi = straight), xi the ankle
angle in the chain convention below.

The ankle angle of the support leg simplifies to xi = (pi - theta) + gamma,
which is also what forward kinematics inverts: the foot pitch recovered by
`fk_leg` is xi - ((pi - theta) + gamma), zero meaning a level sole.  The
swing-leg ankle formula `ik_swing` inherits carries a different offset
convention; `level_swing_xi` gives the level-sole target instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import GeometryError, ReachError

# keeps arccos/arcsin arguments strictly interior near full knee extension
REACH_MARGIN = 0.02


@dataclass(frozen=True)
class RobotGeometry:
    """Segment lengths, masses and box dimensions of the planar biped."""

    l_thigh: float = 0.57
    l_shin: float = 0.57
    h_f: float = 1.11 / 0.9 - 1.14  # foot height, sole to ankle
    h_c: float = 1.11  # commanded CoM (hip) height above ground
    torso_w: float = 0.29
    torso_h: float = 0.29
    thigh_w: float = 0.09
    shin_w: float = 0.07
    foot_len: float = 0.38
    torso_mass: float = 0.42
    thigh_mass: float = 0.05
    shin_mass: float = 0.04
    foot_mass: float = 0.038
    friction: float = 0.1

    def __post_init__(self):
        if self.l_thigh != self.l_shin:
            raise GeometryError(
                f"thigh and shin must have equal length, got "
                f"{self.l_thigh} vs {self.l_shin}"
            )
        for name in ("l_thigh", "l_shin", "h_c"):
            if not getattr(self, name) > 0:
                raise GeometryError(f"{name} must be > 0")
        if self.h_f < 0:
            raise GeometryError(f"h_f must be >= 0, got {self.h_f}")
        if not self.h_c < self.l_thigh + self.l_shin + self.h_f:
            raise GeometryError(
                f"h_c={self.h_c} must be below full leg extension "
                f"{self.l_thigh + self.l_shin + self.h_f}"
            )

    @property
    def leg(self) -> float:
        return self.l_thigh

    @property
    def max_reach(self) -> float:
        """Largest usable hip-to-foot-point distance."""
        return 2.0 * self.leg * (1.0 - REACH_MARGIN)

    @classmethod
    def point_feet(cls) -> "RobotGeometry":
        """Four-joint variant: no feet, the shin tip is the contact point."""
        return cls(h_f=0.0, h_c=0.9 * 2 * 0.57, foot_mass=0.0, foot_len=0.0)


@dataclass(frozen=True)
class LegAngles:
    """Hip, knee and ankle angles (gamma, theta, xi) of one leg."""

    gamma: float
    theta: float
    xi: float


@dataclass(frozen=True)
class JointLimits:
    hip: tuple[float, float] = (-1.4, 1.4)
    knee: tuple[float, float] = (0.2, math.pi)
    ankle: tuple[float, float] = (-2.0, 2.0)


def _knee_from_virtual_leg(l_v: float, geom: RobotGeometry) -> float:
    lim = 2.0 * geom.leg * (1.0 - REACH_MARGIN)
    # tolerate targets produced by clamping to the limit itself
    if l_v > lim * (1.0 + 1e-12):
        raise ReachError(f"virtual leg {l_v:.4f} m exceeds reach {lim:.4f} m")
    ll = 2.0 * geom.leg * geom.leg
    return math.acos(max((ll - l_v * l_v) / ll, -1.0))


def ik_support(x_t: float, geom: RobotGeometry) -> LegAngles:
    """Support-leg angles from the CoM position relative to the ankle.

    The foot is flat on the ground, so the hip sits h_c - h_f above the
    ankle and x_t ahead of it.
    """
    drop = geom.h_c - geom.h_f
    if drop <= 0:
        raise GeometryError(f"h_c={geom.h_c} must exceed h_f={geom.h_f}")
    l_v1 = math.hypot(x_t, drop)
    theta = _knee_from_virtual_leg(l_v1, geom)
    gamma = 0.5 * (math.pi - theta) - math.atan(x_t / drop)
    xi = (math.pi - theta) + gamma
    return LegAngles(gamma=gamma, theta=theta, xi=xi)


def ik_swing(
    x_t: float, foot: tuple[float, float], geom: RobotGeometry
) -> LegAngles:
    """Swing-leg angles reaching the foot point (x_ft, z_ft).

    x_t and x_ft share one frame (the support point); z_ft is height above
    ground.  The hip term uses the signed foot-ahead-of-hip angle so that
    forward kinematics inverts it exactly; the ankle keeps the inherited
    offset convention (see `level_swing_xi` for a level sole).
    """
    x_ft, z_ft = foot
    drop = geom.h_c - z_ft
    if drop <= 0:
        raise GeometryError(f"foot height {z_ft} must stay below h_c={geom.h_c}")
    dx = x_ft - x_t
    l_v2 = math.hypot(dx, drop)
    theta = _knee_from_virtual_leg(l_v2, geom)
    gamma = 0.5 * (math.pi - theta) + math.atan(dx / drop)
    s = (geom.h_c - z_ft - geom.h_f) / l_v2
    if not -1.0 <= s <= 1.0:
        raise GeometryError(f"ankle arcsin argument {s:.4f} outside [-1, 1]")
    xi = 0.5 * (math.pi - theta) - math.asin(s)
    return LegAngles(gamma=gamma, theta=theta, xi=xi)


def level_swing_xi(angles: LegAngles) -> float:
    """Ankle target holding the swing sole level, matching the support
    convention xi = (pi - theta) + gamma."""
    return (math.pi - angles.theta) + angles.gamma


def fk_leg(
    angles: LegAngles,
    geom: RobotGeometry,
    hip: tuple[float, float] = (0.0, 0.0),
    torso_pitch: float = 0.0,
):
    """Forward kinematics: world knee, ankle and sole points.

    Plants the chain hip -> knee -> ankle from the absolute segment angles
    a_thigh = torso_pitch + gamma and a_shin = a_thigh - (pi - theta); the
    sole sits h_f below the ankle along the foot-down direction whose pitch
    is xi - ((pi - theta) + gamma) relative to the torso down-axis.
    """
    a_th = torso_pitch + angles.gamma
    a_sh = a_th - (math.pi - angles.theta)
    hx, hz = hip
    kx = hx + geom.leg * math.sin(a_th)
    kz = hz - geom.leg * math.cos(a_th)
    ax = kx + geom.leg * math.sin(a_sh)
    az = kz - geom.leg * math.cos(a_sh)
    rho = torso_pitch + angles.xi - ((math.pi - angles.theta) + angles.gamma)
    sx = ax + geom.h_f * math.sin(rho)
    sz = az - geom.h_f * math.cos(rho)
    return (kx, kz), (ax, az), (sx, sz)


def clamp_joint_limits(
    angles: LegAngles, limits: JointLimits = JointLimits()
) -> LegAngles:
    """Clamp angles into the configured ranges; the knee never passes pi."""
    knee_hi = min(limits.knee[1], math.pi)
    return replace(
        angles,
        gamma=min(max(angles.gamma, limits.hip[0]), limits.hip[1]),
        theta=min(max(angles.theta, limits.knee[0]), knee_hi),
        xi=min(max(angles.xi, limits.ankle[0]), limits.ankle[1]),
    )
