"""Scenario orchestration: walking runs and tuning rigs end to end."""

from __future__ import annotations

import math

import numpy as np

from ..control import LowPassState, PdController, PdGains, pd_torque
from ..errors import InstabilityError
from ..kinematics import RobotGeometry
from ..physics.robot import build_robot
from .config import ScenarioConfig
from .rigs import TRANSIENT, build_rig
from .telemetry import RunSummary, TelemetryRecord, write_telemetry
from .walker import advance_time, detect_fall, make_walker, walker_tick

DT = 1.0 / 60.0

FEET_MODE = {
    "walk_point_feet": "none",
    "walk_no_ankle": "passive",
    "walk_full": "actuated",
}


def _apply_jitter(robot, seed):
    """Tiny deterministic pose perturbation for robustness studies."""
    rng = np.random.default_rng(seed)
    for body in robot.world.bodies:
        if body.static:
            continue
        body.x += float(rng.uniform(-1e-3, 1e-3))
        body.z += float(rng.uniform(-1e-3, 1e-3))
        body.angle += float(rng.uniform(-1e-3, 1e-3))


def _record(t, robot, joint_names, desired, step_index):
    cx, cz, cvx, cvz = robot.com()
    joints = {}
    for name in joint_names:
        q, qd = robot.world.joint_readout(name)
        torque = robot.world.joint(name).applied_torque
        joints[name] = (desired.get(name, q), q, qd, torque)
    legs = sorted(robot.foot_bodies)
    return TelemetryRecord(
        t=t, com_x=cx, com_z=cz, com_vx=cvx, com_vz=cvz,
        torso_pitch=robot.torso.angle, joints=joints,
        contact_a=robot.foot_on_ground(legs[0]),
        contact_b=robot.foot_on_ground(legs[1]),
        step_index=step_index,
    )


def _geometry_for(scenario: str) -> RobotGeometry:
    if scenario == "walk_point_feet":
        return RobotGeometry.point_feet()
    return RobotGeometry()


def _run_walk(config: ScenarioConfig):
    geom = _geometry_for(config.scenario)
    robot = build_robot(
        geom, feet=FEET_MODE[config.scenario], x_init=config.x_init,
        ankle_lock=config.ankle_lock,
    )
    if config.seed is not None:
        _apply_jitter(robot, config.seed)
    walker = make_walker(
        robot, config.gains, config.theta_d, gait=config.gait, dt=DT,
        dual_hip_gains=config.dual_hip_gains,
    )

    records = []
    fell = unstable = False
    n_ticks = round(config.duration / DT)
    err_sq = {name: 0.0 for name in robot.joint_names}
    for k in range(n_ticks):
        commands, desired = walker_tick(walker, robot)
        records.append(_record(k * DT, robot, robot.joint_names, desired,
                               walker.step_index))
        try:
            robot.world.step(commands)
        except InstabilityError:
            unstable = True
            break
        for name in robot.joint_names:
            q, _ = robot.world.joint_readout(name)
            err_sq[name] += (desired[name] - q) ** 2
        advance_time(walker, DT)
        if detect_fall(robot):
            fell = True
            break

    ticks = len(records)
    vxs = [r.com_vx for r in records]
    rms = math.sqrt(sum(err_sq.values()) / (len(err_sq) * max(ticks, 1)))
    summary = RunSummary(
        scenario=config.scenario,
        steps=walker.step_index,
        distance=records[-1].com_x - records[0].com_x if records else 0.0,
        mean_velocity=sum(vxs) / len(vxs) if vxs else 0.0,
        max_velocity=max(vxs) if vxs else 0.0,
        fell=fell, unstable=unstable,
        rms_tracking_error=rms,
        duration=config.duration, ticks=ticks,
        reach_errors=walker.reach_errors,
        early_contacts=walker.early_contacts,
    )
    return records, summary, robot.joint_names


def _run_rig(config: ScenarioConfig):
    rig = build_rig(config.scenario)
    robot = rig.robot
    if config.seed is not None:
        _apply_jitter(robot, config.seed)

    joint_type = rig.measured.rsplit("_", 1)[0]
    kp, kd = config.gains_for(joint_type)
    pds = {}
    for name in robot.joint_names:
        jt = name.rsplit("_", 1)[0]
        jkp, jkd = (kp, kd) if name in rig.driven else config.gains_for(jt)
        angle, _ = robot.world.joint_readout(name)
        pds[name] = PdController(gains=PdGains(jkp, jkd), target=angle,
                                 filter=LowPassState())

    records = []
    unstable = False
    n_ticks = round(config.duration / DT)
    err_sq = tracked = 0
    for k in range(n_ticks):
        t = k * DT
        desired = {}
        commands = {}
        for name in robot.joint_names:
            q, q_dot = robot.world.joint_readout(name)
            if name in rig.free:
                desired[name] = q
                commands[name] = 0.0
                continue
            ctrl = pds[name]
            if name in rig.driven:
                ctrl.target = rig.target(name, t)
            desired[name] = ctrl.target
            commands[name] = pd_torque(ctrl, q, q_dot)
        records.append(_record(t, robot, robot.joint_names, desired, 0))
        try:
            robot.world.step(commands)
        except InstabilityError:
            unstable = True
            break
        if t >= TRANSIENT:
            q, _ = robot.world.joint_readout(rig.measured)
            err_sq += (desired[rig.measured] - q) ** 2
            tracked += 1

    rms = math.sqrt(err_sq / tracked) if tracked else float("nan")
    summary = RunSummary(
        scenario=config.scenario, steps=0,
        distance=0.0, mean_velocity=0.0, max_velocity=0.0,
        fell=False, unstable=unstable,
        rms_tracking_error=rms,
        duration=config.duration, ticks=len(records),
    )
    return records, summary, robot.joint_names


def run_scenario(config: ScenarioConfig):
    """Run a scenario; returns (records, summary).  Writes telemetry when
    the config names an output path, including on aborted runs."""
    if config.scenario.startswith("walk"):
        records, summary, joint_names = _run_walk(config)
    else:
        records, summary, joint_names = _run_rig(config)
    if config.output:
        write_telemetry(records, config.output, joint_names)
    return records, summary
