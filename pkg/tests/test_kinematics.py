"""Leg kinematics tests: the FK oracle arbitrates every convention."""

import math

import numpy as np
import pytest

from simbiped.errors import GeometryError, ReachError
from simbiped.kinematics import (
    JointLimits, LegAngles, RobotGeometry, clamp_joint_limits, fk_leg,
    ik_support, ik_swing, level_swing_xi,
)

GEOM = RobotGeometry()


class TestSupportLeg:
    def test_reference_pose(self):
        # frozen root-find: hip directly above the ankle, 1.08 m up
        geom = RobotGeometry(h_c=1.08 + GEOM.h_f)
        a = ik_support(0.0, geom)
        assert a.theta == pytest.approx(2.4898267391477162, abs=1e-12)
        assert a.gamma == pytest.approx(0.32588295722103844, abs=1e-12)
        assert a.xi == pytest.approx(0.9776488716631153, abs=1e-12)

    def test_right_angle_knee(self):
        l_v = GEOM.leg * math.sqrt(2.0)
        geom = RobotGeometry(h_c=l_v + GEOM.h_f)
        assert ik_support(0.0, geom).theta == pytest.approx(math.pi / 2, abs=1e-12)

    def test_straight_knee_limit(self):
        # theta grows monotonically toward pi as the leg extends; the
        # reach margin stops it at acos(1 - 2 * 0.98^2)
        thetas = []
        for frac in (0.7, 0.8, 0.9, 0.979999):
            l_v = 2.0 * GEOM.leg * frac
            geom = RobotGeometry(h_c=l_v + GEOM.h_f)
            thetas.append(ik_support(0.0, geom).theta)
        assert thetas == sorted(thetas)
        assert thetas[-1] == pytest.approx(math.acos(1 - 2 * 0.98 ** 2), abs=1e-4)
        assert thetas[-1] < math.pi

    def test_out_of_reach(self):
        with pytest.raises(ReachError):
            ik_support(0.6, GEOM)

    def test_bad_geometry(self):
        geom = RobotGeometry(h_c=0.05)
        with pytest.raises(GeometryError):
            ik_support(0.0, geom)

    def test_ankle_simplification_matches_nested_form(self):
        # the printed nested expression pi/2 - (pi/2 - (pi - theta) - gamma)
        for x_t in np.linspace(-0.3, 0.3, 13):
            a = ik_support(x_t, GEOM)
            nested = math.pi / 2 - (math.pi / 2 - (math.pi - a.theta) - a.gamma)
            assert a.xi == pytest.approx(nested, abs=1e-15)

    def test_hip_height_contract(self):
        # FK places the hip h_c - h_f above the ankle, h_c above the sole
        for x_t in np.linspace(-0.3, 0.3, 13):
            a = ik_support(x_t, GEOM)
            _, ankle, sole = fk_leg(a, GEOM, hip=(0.0, 0.0))
            assert -ankle[1] == pytest.approx(GEOM.h_c - GEOM.h_f, abs=1e-12)
            assert -sole[1] == pytest.approx(GEOM.h_c, abs=1e-12)

    def test_fk_round_trip_sole(self):
        for x_t in np.linspace(-0.3, 0.3, 25):
            a = ik_support(x_t, GEOM)
            _, _, sole = fk_leg(a, GEOM, hip=(0.0, 0.0))
            assert sole[0] == pytest.approx(-x_t, abs=1e-9)
            assert sole[1] == pytest.approx(-GEOM.h_c, abs=1e-9)


class TestSwingLeg:
    def test_agrees_with_support_when_foot_below_hip(self):
        sup = ik_support(0.0, GEOM)
        swi = ik_swing(0.3, (0.3, GEOM.h_f), GEOM)
        assert swi.theta == pytest.approx(sup.theta, abs=1e-12)
        assert swi.gamma == pytest.approx(sup.gamma, abs=1e-12)

    def test_fk_round_trip_ankle(self):
        rng = np.random.default_rng(30)
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
            assert ankle[0] == pytest.approx(x_t + dx, abs=1e-9)
            assert ankle[1] == pytest.approx(z_ft, abs=1e-9)

    def test_knee_more_flexed_at_apex(self):
        apex = ik_swing(0.0, (0.0, 0.222), GEOM)
        down = ik_swing(0.0, (0.0, 0.0), GEOM)
        assert apex.theta < down.theta

    def test_reach_and_geometry_errors(self):
        with pytest.raises(ReachError):
            ik_swing(0.0, (1.0, 0.5), GEOM)
        with pytest.raises(GeometryError):
            ik_swing(0.0, (0.0, GEOM.h_c + 0.1), GEOM)

    def test_swing_hip_angle_mirrors_printed_form(self):
        # The printed swing hip formula subtracts the foot-ahead angle;
        # under this package's frame (x forward, counterclockwise
        # positive, knee bending forward) the FK round trip forces the
        # plus sign.  The two forms coincide exactly when the foot is
        # directly below the hip and mirror each other elsewhere.
        for dx in np.linspace(-0.3, 0.3, 7):
            a = ik_swing(0.0, (dx, 0.1), GEOM)
            drop = GEOM.h_c - 0.1
            printed = 0.5 * (math.pi - a.theta) - math.atan(dx / drop)
            ours = a.gamma
            assert ours - 0.5 * (math.pi - a.theta) == pytest.approx(
                -(printed - 0.5 * (math.pi - a.theta)), abs=1e-12
            )

    def test_swing_ankle_formula_vs_level_sole(self):
        # xi from the swing formula carries a different offset convention
        # from the support-leg one; level_swing_xi is the level-sole target
        # in the support convention.  Document the gap at a mid-swing pose.
        a = ik_swing(0.0, (0.0, 0.222), GEOM)
        level = level_swing_xi(a)
        assert level == pytest.approx((math.pi - a.theta) + a.gamma, abs=1e-15)
        assert abs(a.xi - level) > 0.5  # conventions genuinely differ


class TestFkLeg:
    def test_straight_vertical_leg(self):
        a = LegAngles(gamma=0.0, theta=math.pi, xi=math.pi)
        knee, ankle, _ = fk_leg(a, GEOM, hip=(0.0, 0.0))
        assert knee[0] == pytest.approx(0.0, abs=1e-12)
        assert ankle[0] == pytest.approx(0.0, abs=1e-12)
        assert ankle[1] == pytest.approx(-2 * GEOM.leg, abs=1e-12)

    def test_torso_pitch_rotates_chain(self):
        a = ik_support(0.1, GEOM)
        _, ankle0, _ = fk_leg(a, GEOM, hip=(0.0, 0.0), torso_pitch=0.0)
        _, ankle1, _ = fk_leg(a, GEOM, hip=(0.0, 0.0), torso_pitch=0.2)
        r0 = math.hypot(*ankle0)
        r1 = math.hypot(*ankle1)
        assert r0 == pytest.approx(r1, abs=1e-12)
        assert ankle1 != ankle0

    def test_ik_continuity(self):
        for x_t in np.linspace(-0.25, 0.25, 11):
            a = ik_support(x_t, GEOM)
            b = ik_support(x_t + 1e-6, GEOM)
            assert abs(b.gamma - a.gamma) < 1e-3
            assert abs(b.theta - a.theta) < 1e-3
            assert abs(b.xi - a.xi) < 1e-3


class TestClampJointLimits:
    def test_knee_never_passes_pi(self):
        a = LegAngles(gamma=0.0, theta=math.pi + 0.1, xi=0.0)
        assert clamp_joint_limits(a).theta == pytest.approx(math.pi)

    def test_in_range_untouched(self):
        a = LegAngles(gamma=0.2, theta=2.0, xi=0.5)
        assert clamp_joint_limits(a) == a

    def test_idempotent(self):
        a = LegAngles(gamma=3.0, theta=-1.0, xi=-9.0)
        once = clamp_joint_limits(a)
        assert clamp_joint_limits(once) == once

    def test_configured_ranges(self):
        limits = JointLimits(hip=(-0.1, 0.1), knee=(1.0, 2.0), ankle=(0.0, 1.0))
        a = clamp_joint_limits(LegAngles(0.5, 2.5, -0.5), limits)
        assert a == LegAngles(0.1, 2.0, 0.0)

    def test_knee_clamp_fuzz(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            a = LegAngles(*rng.uniform(-6, 6, size=3))
            assert clamp_joint_limits(a).theta <= math.pi


class TestGeometry:
    def test_unequal_segments_rejected(self):
        with pytest.raises(GeometryError):
            RobotGeometry(l_thigh=0.5, l_shin=0.6)

    def test_height_rule_exact(self):
        assert GEOM.h_c == pytest.approx(
            0.9 * (GEOM.l_thigh + GEOM.l_shin + GEOM.h_f), abs=1e-12
        )

    def test_point_feet_variant(self):
        pf = RobotGeometry.point_feet()
        assert pf.h_f == 0.0
        assert pf.h_c == pytest.approx(0.9 * 2 * 0.57)

    def test_overlong_height_rejected(self):
        with pytest.raises(GeometryError):
            RobotGeometry(h_c=1.3)
