"""Analytic point-mass pendulum dynamics for planar walking.

The model is a point mass on a massless leg whose height above the support
point is held constant, giving the linear dynamics ``xdd = (g / z_c) * x``
around the support point.  Closed-form evolution, orbital energy, the
sloped-constraint variant, the two-axis extension with virtual input
torques, and the ground-reference (ZMP) maps all live here.

All functions are pure and operate on small frozen value types; the support
point is the coordinate origin throughout, and callers re-anchor the state
whenever the support point changes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateOrbitError

GRAVITY = 9.81


@dataclass(frozen=True)
class LipmParams:
    """Constant-height pendulum parameters: height z_c, gravity g, mass."""

    z_c: float
    g: float = GRAVITY
    mass: float = 1.0

    def __post_init__(self):
        if not self.z_c > 0:
            raise ValueError(f"z_c must be > 0, got {self.z_c}")
        if not self.g > 0:
            raise ValueError(f"g must be > 0, got {self.g}")
        if not self.mass > 0:
            raise ValueError(f"mass must be > 0, got {self.mass}")

    @property
    def t_c(self) -> float:
        return math.sqrt(self.z_c / self.g)


@dataclass(frozen=True)
class LipmState:
    """Horizontal CoM position and velocity relative to the support point."""

    x: float
    x_dot: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.x_dot)):
            raise ValueError(f"state must be finite, got {self}")


@dataclass(frozen=True)
class ConstraintLine:
    """Sloped line y = k*x + y_c constraining the CoM on uneven ground."""

    k: float
    y_c: float

    def __post_init__(self):
        if not self.y_c > 0:
            raise ValueError(f"y_c must be > 0, got {self.y_c}")


@dataclass(frozen=True)
class ConstraintPlane:
    """Plane z = k_x*x + k_y*y + z_c constraining the CoM in 3-D."""

    k_x: float
    k_y: float
    z_c: float

    def __post_init__(self):
        if not self.z_c > 0:
            raise ValueError(f"z_c must be > 0, got {self.z_c}")


@dataclass(frozen=True)
class Lipm3dState:
    """Two-axis CoM state plus the virtual input torques (u_x, u_y)."""

    x: float
    y: float
    x_dot: float
    y_dot: float
    u_x: float = 0.0
    u_y: float = 0.0

    def __post_init__(self):
        vals = (self.x, self.y, self.x_dot, self.y_dot, self.u_x, self.u_y)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"state must be finite, got {self}")


@dataclass(frozen=True)
class OrbitalEnergyPair:
    """Orbital energies of both axes in a frame rotated by theta."""

    e_x: float
    e_y: float
    theta: float = 0.0


def time_constant(params: LipmParams) -> float:
    """Pendulum time constant sqrt(z_c / g)."""
    return params.t_c


def evolve(state: LipmState, params: LipmParams, t: float) -> LipmState:
    """Closed-form state after time t (negative t reverses time).

    x(t)  = x0 cosh(t/T_c) + T_c xd0 sinh(t/T_c)
    xd(t) = x0/T_c sinh(t/T_c) + xd0 cosh(t/T_c)
    """
    tc = params.t_c
    s = t / tc
    ch, sh = math.cosh(s), math.sinh(s)
    return LipmState(
        x=state.x * ch + tc * state.x_dot * sh,
        x_dot=state.x / tc * sh + state.x_dot * ch,
    )


def orbital_energy(state: LipmState, params: LipmParams) -> float:
    """Conserved quantity -(g / 2 z_c) x^2 + xd^2 / 2 along evolve."""
    return -(params.g / (2.0 * params.z_c)) * state.x ** 2 + 0.5 * state.x_dot ** 2


def orbital_energy_rotated(
    state3d: Lipm3dState, plane: ConstraintPlane, theta: float, g: float = GRAVITY
) -> OrbitalEnergyPair:
    """Per-axis orbital energies evaluated in a frame rotated by theta."""
    c, s = math.cos(theta), math.sin(theta)
    q = g / (2.0 * plane.z_c)
    xr = c * state3d.x + s * state3d.y
    vr = c * state3d.x_dot + s * state3d.y_dot
    yr = -s * state3d.x + c * state3d.y
    wr = -s * state3d.x_dot + c * state3d.y_dot
    return OrbitalEnergyPair(
        e_x=-q * xr ** 2 + 0.5 * vr ** 2,
        e_y=-q * yr ** 2 + 0.5 * wr ** 2,
        theta=theta,
    )


ENERGY_EPS = 1e-12


def hyperbola_residual(
    x: float,
    y: float,
    energies: OrbitalEnergyPair,
    plane: ConstraintPlane,
    g: float = GRAVITY,
) -> float:
    """Residual of the trajectory conic; zero on torque-free orbits.

    Evaluates (g / 2 z_c E_x) x^2 + (g / 2 z_c E_y) y^2 + 1.  Energies within
    ENERGY_EPS of zero describe a degenerate orbit and raise.
    """
    if abs(energies.e_x) < ENERGY_EPS or abs(energies.e_y) < ENERGY_EPS:
        raise DegenerateOrbitError(
            f"orbital energy too close to zero: ({energies.e_x}, {energies.e_y})"
        )
    q = g / (2.0 * plane.z_c)
    return q / energies.e_x * x ** 2 + q / energies.e_y * y ** 2 + 1.0


def _accel_3d(state: Lipm3dState, plane: ConstraintPlane, params: LipmParams):
    w2 = params.g / plane.z_c
    mzc = params.mass * plane.z_c
    return (w2 * state.x + state.u_y / mzc, w2 * state.y - state.u_x / mzc)


def evolve_3d(
    state3d: Lipm3dState, plane: ConstraintPlane, params: LipmParams, dt: float
) -> Lipm3dState:
    """One classical RK4 step of the two-axis dynamics with held torques.

    xdd = (g/z_c) x + u_y / (m z_c);  ydd = (g/z_c) y - u_x / (m z_c)
    """
    if not dt > 0:
        raise ValueError(f"dt must be > 0, got {dt}")

    def deriv(x, y, vx, vy):
        ax, ay = _accel_3d(
            Lipm3dState(x, y, vx, vy, state3d.u_x, state3d.u_y), plane, params
        )
        return vx, vy, ax, ay

    x0, y0, vx0, vy0 = state3d.x, state3d.y, state3d.x_dot, state3d.y_dot
    k1 = deriv(x0, y0, vx0, vy0)
    k2 = deriv(*(v + 0.5 * dt * d for v, d in zip((x0, y0, vx0, vy0), k1)))
    k3 = deriv(*(v + 0.5 * dt * d for v, d in zip((x0, y0, vx0, vy0), k2)))
    k4 = deriv(*(v + dt * d for v, d in zip((x0, y0, vx0, vy0), k3)))
    x, y, vx, vy = (
        v + dt / 6.0 * (a + 2 * b + 2 * c + d)
        for v, a, b, c, d in zip((x0, y0, vx0, vy0), k1, k2, k3, k4)
    )
    return Lipm3dState(x, y, vx, vy, state3d.u_x, state3d.u_y)


def zmp_from_torque(u_x: float, u_y: float, params: LipmParams):
    """Ground reference point produced by the virtual input torques."""
    mg = params.mass * params.g
    return (-u_y / mg, u_x / mg)


def zmp_from_trajectory(x: float, x_ddot: float, params: LipmParams) -> float:
    """Ground reference point p = x - (z_c / g) xdd (either axis)."""
    return x - params.z_c / params.g * x_ddot


def accel_from_zmp(x: float, p: float, params: LipmParams) -> float:
    """CoM acceleration (g / z_c)(x - p) implied by a ground point p."""
    return params.g / params.z_c * (x - p)


def sloped_dynamics_accel(x: float, line: ConstraintLine, g: float = GRAVITY) -> float:
    """CoM acceleration on a sloped constraint line: (g / y_c) x.

    The slope k drops out; only the intercept y_c enters, so the dynamics
    keep the flat-ground form with z_c replaced by y_c.
    """
    return g / line.y_c * x
