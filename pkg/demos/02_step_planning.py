"""Step-to-step planning: foot placement and the swing-foot cubics.

Forward speed is controlled by where the swing foot lands.  Given the
velocity a step starts with and the velocity the next step should end
with, the placement formula gives the touchdown point; iterating the plan
converges to a fixed point after a single step.  The swing foot itself
follows piecewise cubics with zero endpoint velocities.

Run:  python demos/02_step_planning.py
"""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from simbiped import (
    GaitParams, LipmParams, LipmState, foot_placement, foot_velocity,
    foot_x, foot_z, plan_step,
)

params = LipmParams(z_c=1.11)
gait = GaitParams(t_step=0.4, t_m=0.2, z_fm=0.222, v_d=0.6)

# iterate the planner from a standing start: placements settle immediately
state = LipmState(0.173, 0.0)
print("step   start x   start v   placement")
for i in range(6):
    plan = plan_step(state, params, gait, step_index=i)
    print(f"{i:4d}  {state.x:+.4f}  {state.x_dot:+.4f}   {plan.p_n:+.5f}")
    state = LipmState(-plan.p_n, plan.xdot_s_next)
p_star = foot_placement(gait.v_d, gait.v_d, params, gait)
print(f"steady placement for v_d={gait.v_d}: {p_star:.5f} m")

# the swing trajectory for one steady step
plan = plan_step(LipmState(-p_star, gait.v_d), params, gait,
                 swing_foot=(-2 * p_star, 0.0))
ts = np.linspace(0.0, gait.t_step, 200)
xs = [foot_x(t, plan, gait) for t in ts]
zs = [foot_z(t, plan, gait) for t in ts]
vels = [foot_velocity(t, plan, gait) for t in ts]

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
ax1.plot(xs, zs)
ax1.plot([plan.x_fs, plan.x_fe], [plan.z_fs, plan.z_fe], "ko")
ax1.set_xlabel("x (m)")
ax1.set_ylabel("z (m)")
ax1.set_title("Swing-foot path (apex at t_m)")
ax2.plot(ts, [v[0] for v in vels], label="horizontal")
ax2.plot(ts, [v[1] for v in vels], label="vertical")
ax2.set_xlabel("t (s)")
ax2.set_ylabel("foot velocity (m/s)")
ax2.set_title("Zero lift-off and touchdown speeds")
ax2.legend()

os.makedirs(os.path.join(os.path.dirname(__file__), "output"), exist_ok=True)
out = os.path.join(os.path.dirname(__file__), "output", "step_planning.png")
fig.tight_layout()
fig.savefig(out, dpi=120)
print("wrote", out)
