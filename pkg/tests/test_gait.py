"""Gait planner tests: placement round trips and swing-cubic smoothness."""

import numpy as np
import pytest

from simbiped.errors import ReachError
from simbiped.gait import (
    GaitParams, foot_placement, foot_velocity, foot_x, foot_z, plan_step,
    propagate_step_velocity,
)
from simbiped.lipm import LipmParams, LipmState, evolve

PARAMS = LipmParams(z_c=1.11, g=9.81)
GAIT = GaitParams(t_step=0.4, t_m=0.2, z_fm=0.222, v_d=0.6)


def bisect_steady_start(v_d, t_step, lo=-1.0, hi=0.0, iters=200):
    """Oracle: start offset whose step ends at the same boundary speed."""
    def end_vel(x0):
        return evolve(LipmState(x0, v_d), PARAMS, t_step).x_dot
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if end_vel(mid) > v_d:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


class TestPropagate:
    def test_rest_stays_rest(self):
        assert propagate_step_velocity(LipmState(0, 0), PARAMS, GAIT) == 0.0

    def test_reference_value(self):
        v = propagate_step_velocity(LipmState(0.25, 0.0), PARAMS, GAIT)
        assert v == pytest.approx(1.1073022031840234, abs=1e-9)

    def test_equals_evolve_end_velocity(self):
        rng = np.random.default_rng(20)
        for _ in range(50):
            s = LipmState(*rng.uniform(-0.5, 0.5, size=2))
            assert propagate_step_velocity(s, PARAMS, GAIT) == pytest.approx(
                evolve(s, PARAMS, GAIT.t_step).x_dot, abs=1e-15
            )


class TestFootPlacement:
    def test_zero_velocities_zero_placement(self):
        assert foot_placement(0.0, 0.0, PARAMS, GAIT) == 0.0

    def test_steady_state_matches_bisection_oracle(self):
        p = foot_placement(0.6, 0.6, PARAMS, GAIT)
        assert p == pytest.approx(-bisect_steady_start(0.6, 0.4), abs=1e-9)
        assert p == pytest.approx(0.10760874572982959, abs=1e-6)

    def test_round_trip_hits_target_velocity(self):
        rng = np.random.default_rng(21)
        for _ in range(100):
            v_s, v_e = rng.uniform(0.0, 1.5, size=2)
            p = foot_placement(v_s, v_e, PARAMS, GAIT)
            end = evolve(LipmState(-p, v_s), PARAMS, GAIT.t_step).x_dot
            assert end == pytest.approx(v_e, abs=1e-9)

    def test_rejects_degenerate_gait(self):
        with pytest.raises(ValueError):
            GaitParams(t_step=0.0)


class TestPlanStep:
    def test_stationary_robot_plans_in_place(self):
        plan = plan_step(LipmState(0.0, 0.0),
                         LipmParams(z_c=1.11, g=9.81),
                         GaitParams(v_d=0.0),
                         swing_foot=(0.0, 0.0))
        assert plan.p_n == 0.0
        assert plan.x_fe == 0.0

    def test_placements_converge_to_fixed_point(self):
        state = LipmState(-0.02, 0.35)
        gaps = []
        prev = None
        for i in range(8):
            plan = plan_step(state, PARAMS, GAIT, step_index=i)
            if prev is not None:
                gaps.append(abs(plan.p_n - prev))
            prev = plan.p_n
            state = LipmState(-plan.p_n, plan.xdot_s_next)
        assert gaps[-1] < 1e-12
        assert prev == pytest.approx(foot_placement(0.6, 0.6, PARAMS, GAIT), abs=1e-9)

    def test_fixed_point_from_any_start_velocity(self):
        p_star = foot_placement(0.6, 0.6, PARAMS, GAIT)
        for v0 in (0.1, 0.4, 0.8, 1.2):
            state = LipmState(0.0, v0)
            for i in range(6):
                plan = plan_step(state, PARAMS, GAIT, step_index=i)
                state = LipmState(-plan.p_n, plan.xdot_s_next)
            assert plan.p_n == pytest.approx(p_star, abs=1e-9)

    def test_absurd_target_velocity_out_of_reach(self):
        fast = GaitParams(v_d=100.0)
        with pytest.raises(ReachError):
            plan_step(LipmState(0.0, 0.5), PARAMS, fast, max_leg=1.1172)

    def test_world_frame_target(self):
        plan = plan_step(LipmState(-0.1, 0.6), PARAMS, GAIT,
                         swing_foot=(2.0, 0.0), support_x=2.3)
        com_end = 2.3 + evolve(LipmState(-0.1, 0.6), PARAMS, 0.4).x
        assert plan.x_fs == 2.0
        assert plan.x_fe == pytest.approx(com_end + plan.p_n)

    def test_apex_must_clear_endpoints(self):
        from simbiped.gait import StepPlan
        with pytest.raises(ValueError):
            StepPlan(x_fs=0.0, x_fe=0.2, z_fs=0.3, z_fe=0.0, z_fm=0.1,
                     p_n=0.1, xdot_s_next=0.6, xdot_e_next=0.6)


class TestSwingCubics:
    PLAN = plan_step(LipmState(-0.1076, 0.6), PARAMS, GAIT,
                     swing_foot=(-0.05, 0.0))

    def test_boundary_values_exact(self):
        assert foot_x(0.0, self.PLAN, GAIT) == pytest.approx(self.PLAN.x_fs, abs=1e-12)
        assert foot_x(GAIT.t_step, self.PLAN, GAIT) == pytest.approx(
            self.PLAN.x_fe, abs=1e-12
        )
        assert foot_z(0.0, self.PLAN, GAIT) == pytest.approx(self.PLAN.z_fs, abs=1e-12)
        assert foot_z(GAIT.t_m, self.PLAN, GAIT) == pytest.approx(
            self.PLAN.z_fm, abs=1e-12
        )
        assert foot_z(GAIT.t_step, self.PLAN, GAIT) == pytest.approx(
            self.PLAN.z_fe, abs=1e-12
        )

    def test_midpoint_symmetry(self):
        mid = foot_x(GAIT.t_step / 2, self.PLAN, GAIT)
        assert mid == pytest.approx((self.PLAN.x_fs + self.PLAN.x_fe) / 2, abs=1e-12)

    def test_zero_endpoint_velocities(self):
        for t in (0.0, GAIT.t_step):
            vx, vz = foot_velocity(t, self.PLAN, GAIT)
            assert vx == 0.0 and vz == 0.0
        # apex arrival is also flat
        assert foot_velocity(GAIT.t_m, self.PLAN, GAIT)[1] == pytest.approx(0.0, abs=1e-12)

    def test_c1_continuity_at_apex(self):
        h = 1e-9
        before = foot_velocity(GAIT.t_m - h, self.PLAN, GAIT)
        after = foot_velocity(GAIT.t_m + h, self.PLAN, GAIT)
        assert before[0] == pytest.approx(after[0], abs=1e-6)
        assert before[1] == pytest.approx(after[1], abs=1e-6)

    def test_derivative_matches_finite_difference(self):
        h = 1e-6
        for t in np.linspace(2 * h, GAIT.t_step - 2 * h, 41):
            vx, vz = foot_velocity(t, self.PLAN, GAIT)
            fx = (foot_x(t + h, self.PLAN, GAIT) - foot_x(t - h, self.PLAN, GAIT)) / (2 * h)
            fz = (foot_z(t + h, self.PLAN, GAIT) - foot_z(t - h, self.PLAN, GAIT)) / (2 * h)
            assert vx == pytest.approx(fx, abs=1e-6)
            assert vz == pytest.approx(fz, abs=1e-6)

    def test_apex_is_global_maximum(self):
        for t in np.linspace(0.0, GAIT.t_step, 401):
            assert foot_z(t, self.PLAN, GAIT) <= self.PLAN.z_fm + 1e-12

    def test_out_of_range_phase_rejected(self):
        with pytest.raises(ValueError):
            foot_x(-0.01, self.PLAN, GAIT)
        with pytest.raises(ValueError):
            foot_z(GAIT.t_step + 0.01, self.PLAN, GAIT)
        with pytest.raises(ValueError):
            foot_velocity(1.0, self.PLAN, GAIT)
