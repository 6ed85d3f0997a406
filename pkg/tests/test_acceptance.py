"""Acceptance suite: one test per criterion, at its stated tolerance.

Each test prints a `criterion N: PASS` line (run with `pytest -s` to see
them live); a failure raises with the measured value.
"""

import math
import time

import numpy as np
import pytest

from simbiped.control import (
    LowPassState, PdController, PdGains, filter_step, pd_torque, zn_gains,
)
from simbiped.gait import GaitParams, foot_placement, foot_velocity, foot_x, foot_z, plan_step
from simbiped.harness.config import default_config
from simbiped.harness.scenarios import run_scenario
from simbiped.harness.telemetry import write_telemetry
from simbiped.kinematics import (
    LegAngles, RobotGeometry, clamp_joint_limits, fk_leg, ik_support, ik_swing,
)
from simbiped.lipm import (
    LipmParams, LipmState, accel_from_zmp, evolve, orbital_energy,
    zmp_from_trajectory,
)

PARAMS = LipmParams(z_c=1.11, g=9.81)
GAIT = GaitParams(t_step=0.4, t_m=0.2, z_fm=0.222, v_d=0.6)
GEOM = RobotGeometry()


def report(num, text):
    print(f"criterion {num}: PASS — {text}")


def test_criterion_1_analytic_fidelity():
    """evolve vs vectorized RK4 over 1 s, energy conservation, < 1 s."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(101)
    x = rng.uniform(-0.5, 0.5, size=100)
    v = rng.uniform(-1.0, 1.0, size=100)
    w2 = PARAMS.g / PARAMS.z_c
    dt = 1e-4
    xs, vs = x.copy(), v.copy()
    for _ in range(10000):  # 1 s of RK4
        k1x, k1v = vs, w2 * xs
        k2x, k2v = vs + 0.5 * dt * k1v, w2 * (xs + 0.5 * dt * k1x)
        k3x, k3v = vs + 0.5 * dt * k2v, w2 * (xs + 0.5 * dt * k2x)
        k4x, k4v = vs + dt * k3v, w2 * (xs + dt * k3x)
        xs = xs + dt * (k1x + 2 * k2x + 2 * k3x + k4x) / 6
        vs = vs + dt * (k1v + 2 * k2v + 2 * k3v + k4v) / 6
    worst = 0.0
    for i in range(100):
        s = evolve(LipmState(x[i], v[i]), PARAMS, 1.0)
        worst = max(worst, abs(s.x - xs[i]))
        e0 = orbital_energy(LipmState(x[i], v[i]), PARAMS)
        e1 = orbital_energy(s, PARAMS)
        scale = max(abs(e0), 1e-12)
        assert abs(e1 - e0) / scale < 1e-9, f"energy drift {abs(e1-e0)/scale}"
    elapsed = time.perf_counter() - t0
    assert worst < 1e-6, f"closed form vs RK4 deviates {worst}"
    assert elapsed < 1.0, f"runtime {elapsed:.2f} s"
    report(1, f"evolve vs RK4 max |dx| {worst:.2e} m, energy drift < 1e-9, "
              f"{elapsed:.2f} s")


def test_criterion_2_zmp_algebra():
    """Round trip exactness and zero ZMP along pendulum trajectories."""
    rng = np.random.default_rng(102)
    for _ in range(1000):
        x, acc = rng.uniform(-2, 2, size=2)
        p = zmp_from_trajectory(x, acc, PARAMS)
        back = accel_from_zmp(x, p, PARAMS)
        assert back == pytest.approx(acc, abs=1e-12)
    worst = 0.0
    h = 1e-5
    for _ in range(20):
        s0 = LipmState(*rng.uniform(-0.3, 0.3, size=2))
        for t in np.linspace(0.0, 1.0, 21):
            xt = evolve(s0, PARAMS, t).x
            acc = (evolve(s0, PARAMS, t + h).x_dot
                   - evolve(s0, PARAMS, t - h).x_dot) / (2 * h)
            worst = max(worst, abs(zmp_from_trajectory(xt, acc, PARAMS)))
    assert worst < 1e-9, f"ZMP residual {worst}"
    report(2, f"round trip exact on 1000 inputs, |p| <= {worst:.2e} on trajectories")


def test_criterion_3_foot_placement():
    """Velocity round trips and the steady placement vs the bisection oracle."""
    rng = np.random.default_rng(103)
    for _ in range(1000):
        v_s, v_e = rng.uniform(0.0, 1.5, size=2)
        p = foot_placement(v_s, v_e, PARAMS, GAIT)
        end = evolve(LipmState(-p, v_s), PARAMS, GAIT.t_step).x_dot
        assert end == pytest.approx(v_e, abs=1e-9)

    lo, hi = -1.0, 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if evolve(LipmState(mid, 0.6), PARAMS, 0.4).x_dot > 0.6:
            hi = mid
        else:
            lo = mid
    oracle = -0.5 * (lo + hi)
    p_star = foot_placement(0.6, 0.6, PARAMS, GAIT)
    assert p_star == pytest.approx(oracle, abs=1e-6)
    report(3, f"1000 velocity round trips to 1e-9; steady p = {p_star:.6f} m "
              f"matches bisection {oracle:.6f} m")


def test_criterion_4_swing_smoothness():
    """Cubic boundary exactness, zero touchdown speed, derivative oracle."""
    plan = plan_step(LipmState(-0.1076, 0.6), PARAMS, GAIT,
                     swing_foot=(-0.05, 0.0))
    assert foot_x(0.0, plan, GAIT) == pytest.approx(plan.x_fs, abs=1e-12)
    assert foot_x(GAIT.t_step, plan, GAIT) == pytest.approx(plan.x_fe, abs=1e-12)
    assert foot_z(GAIT.t_m, plan, GAIT) == pytest.approx(plan.z_fm, abs=1e-12)
    assert foot_z(GAIT.t_step, plan, GAIT) == pytest.approx(plan.z_fe, abs=1e-12)
    vx_td, vz_td = foot_velocity(GAIT.t_step, plan, GAIT)
    assert vx_td == 0.0 and vz_td == 0.0
    h = 1e-6
    worst = 0.0
    for t in np.linspace(2 * h, GAIT.t_step - 2 * h, 101):
        vx, vz = foot_velocity(t, plan, GAIT)
        fx = (foot_x(t + h, plan, GAIT) - foot_x(t - h, plan, GAIT)) / (2 * h)
        fz = (foot_z(t + h, plan, GAIT) - foot_z(t - h, plan, GAIT)) / (2 * h)
        worst = max(worst, abs(vx - fx), abs(vz - fz))
    assert worst < 1e-6, f"derivative mismatch {worst}"
    report(4, f"boundaries exact to 1e-12, touchdown speed 0, "
              f"derivatives match FD to {worst:.2e}")


def test_criterion_5_kinematics():
    """FK∘IK under 1e-9 m on 1000 targets per leg; knee capped at pi."""
    rng = np.random.default_rng(105)
    worst = 0.0
    for _ in range(1000):
        x_t = rng.uniform(-0.35, 0.35)
        a = ik_support(x_t, GEOM)
        _, _, sole = fk_leg(a, GEOM, hip=(0.0, 0.0))
        worst = max(worst, math.hypot(sole[0] + x_t, sole[1] + GEOM.h_c))
    hits = 0
    while hits < 1000:
        x_t = rng.uniform(-0.3, 0.3)
        dx = rng.uniform(-0.45, 0.45)
        z_ft = rng.uniform(0.0, 0.4)
        if math.hypot(dx, GEOM.h_c - z_ft) > GEOM.max_reach:
            continue
        hits += 1
        a = ik_swing(x_t, (x_t + dx, z_ft), GEOM)
        _, ankle, _ = fk_leg(a, GEOM, hip=(x_t, GEOM.h_c))
        worst = max(worst, math.hypot(ankle[0] - (x_t + dx), ankle[1] - z_ft))
    assert worst < 1e-9, f"round trip error {worst}"
    for _ in range(500):
        angles = LegAngles(*rng.uniform(-6, 6, size=3))
        assert clamp_joint_limits(angles).theta <= math.pi
    report(5, f"FK∘IK round trip {worst:.2e} m over 1000 targets per leg; "
              f"knee never exceeds pi")


def test_criterion_6_controller_units():
    """Filter DC/step behavior, exact PD arithmetic, clamp, tuning table."""
    state = LowPassState(alpha=0.075, y_prev=0.33)
    for _ in range(50):
        state, y = filter_step(state, 0.33)
        assert y == pytest.approx(0.33, abs=1e-15)
    state = LowPassState(alpha=0.075)
    prev = 0.0
    for _ in range(100):
        state, y = filter_step(state, 1.0)
        assert prev < y < 1.0
        prev = y

    knee = PdController(gains=PdGains(200.0, 4.0), target=0.1,
                        filter=LowPassState(alpha=0.075, y_prev=0.5))
    assert pd_torque(knee, 0.0, 0.5) == pytest.approx(18.0, abs=1e-12)

    hot = PdController(gains=PdGains(200.0, 4.0), target=5.0)
    assert pd_torque(hot, 0.0, 0.0) == 100.0

    k_u, t_u = 3.7, 1.3
    table = {
        "classic": (0.6 * k_u, t_u / 2, t_u / 8),
        "piae": (0.7 * k_u, t_u / 2.5, 3 * t_u / 20),
        "some_overshoot": (0.33 * k_u, t_u / 2, t_u / 3),
        "no_overshoot": (0.2 * k_u, t_u / 2, t_u / 3),
    }
    for rule, expect in table.items():
        assert zn_gains(k_u, t_u, rule) == pytest.approx(expect, abs=1e-15)
    report(6, "filter DC gain 1 and monotone step, 18 N·m case exact, "
              "clamp at 100 N·m, all four tuning rows")


@pytest.mark.parametrize("scenario", [
    "tune_hip_air", "tune_hip_ground", "tune_knee", "tune_ankle",
])
def test_criterion_7_tuning_rigs(scenario):
    """Sine tracking RMS < 0.08 rad after the 2.5 s transient, < 10 s wall."""
    t0 = time.perf_counter()
    cfg = default_config(scenario, duration=12.5)
    _, summary = run_scenario(cfg)
    elapsed = time.perf_counter() - t0
    assert not summary.unstable
    assert summary.rms_tracking_error < 0.08, (
        f"{scenario} RMS {summary.rms_tracking_error:.4f}"
    )
    assert elapsed < 10.0, f"runtime {elapsed:.1f} s"
    report(7, f"{scenario} RMS {summary.rms_tracking_error:.4f} rad "
              f"in {elapsed:.1f} s")


def test_criterion_8_walking_headline():
    """walk_full defaults: 50+ steps, CoM height band, mean velocity band."""
    t0 = time.perf_counter()
    cfg = default_config("walk_full")
    records, summary = run_scenario(cfg)
    elapsed = time.perf_counter() - t0
    assert not summary.fell, f"fell after {summary.steps} steps"
    assert not summary.unstable
    assert summary.steps >= 50, f"only {summary.steps} steps"
    after5 = [r for r in records if r.step_index > 5]
    z_lo = min(r.com_z for r in after5)
    z_hi = max(r.com_z for r in after5)
    assert 0.9 * GEOM.h_c <= z_lo and z_hi <= 1.1 * GEOM.h_c, (
        f"CoM height [{z_lo:.3f}, {z_hi:.3f}] outside ±10% of {GEOM.h_c}"
    )
    assert 0.6 <= summary.mean_velocity <= 1.5, (
        f"mean velocity {summary.mean_velocity:.4f}"
    )
    assert elapsed < 60.0, f"runtime {elapsed:.1f} s"
    report(8, f"{summary.steps} steps, CoM z [{z_lo:.3f}, {z_hi:.3f}] m, "
              f"mean velocity {summary.mean_velocity:.3f} m/s, "
              f"max {summary.max_velocity:.2f} m/s, {elapsed:.1f} s")


def first_five_step_streak(records, fell):
    """Step index at which the fifth consecutive fall-free step completes.

    Falls reset nothing here because a fall ends the run: either the
    telemetry reaches step five fall-free, or it never does.
    """
    for r in records:
        if r.step_index >= 5:
            return 5
    return math.inf


def test_criterion_9_comparative_behaviors():
    """Point feet fall early; the smaller start offset settles no later."""
    cfg = default_config("walk_point_feet", duration=20.0)
    _, summary = run_scenario(cfg)
    assert summary.fell
    assert summary.steps <= 10, f"point feet lasted {summary.steps} steps"

    streaks = {}
    for x_init in (0.173, 0.25):
        cfg = default_config("walk_full", duration=20.0, x_init=x_init)
        records, s = run_scenario(cfg)
        streaks[x_init] = first_five_step_streak(records, s.fell)
    assert streaks[0.173] <= streaks[0.25], f"streaks {streaks}"
    report(9, f"point feet fell after {summary.steps} steps; "
              f"first 5-step streaks {streaks}")


def test_criterion_10_determinism(tmp_path):
    """Two identical runs produce byte-identical telemetry files."""
    for scenario, duration in (("walk_full", 5.0), ("tune_knee", 3.0)):
        blobs = []
        for run in range(2):
            cfg = default_config(scenario, duration=duration)
            records, _ = run_scenario(cfg)
            path = tmp_path / f"{scenario}_{run}.csv"
            joints = sorted(records[0].joints)
            write_telemetry(records, path, joints)
            blobs.append(path.read_bytes())
        assert blobs[0] == blobs[1], f"{scenario} runs differ"
    report(10, "byte-identical CSV across repeated runs "
               "(walk_full 5 s, tune_knee 3 s)")
