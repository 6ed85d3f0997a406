"""Tour of the point-mass pendulum model behind the walking controller.

The center of mass rides at a constant height above the support point, so
its horizontal motion obeys xdd = (g / z_c) x: it falls away from the
support point along a cosh/sinh trajectory.  This script evolves a few
initial states, shows that orbital energy is conserved, and maps states to
their ground reference (ZMP) coordinates.

Run:  python demos/01_pendulum_basics.py
"""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from simbiped import (
    LipmParams, LipmState, evolve, orbital_energy, time_constant,
    zmp_from_trajectory, accel_from_zmp,
)

params = LipmParams(z_c=1.11, g=9.81)
print(f"height {params.z_c} m -> time constant {time_constant(params):.5f} s")

# A state starting at rest ahead of the support point falls forward and
# accelerates; one moving toward the support point vaults over it.
fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
ts = np.linspace(0.0, 0.8, 200)
for x0, v0 in [(0.25, 0.0), (-0.11, 0.6), (-0.3, 0.9), (0.05, -0.4)]:
    s0 = LipmState(x0, v0)
    xs = [evolve(s0, params, t).x for t in ts]
    vs = [evolve(s0, params, t).x_dot for t in ts]
    ax1.plot(ts, xs, label=f"x0={x0:+.2f}, v0={v0:+.1f}")
    e = orbital_energy(s0, params)
    drift = max(abs(orbital_energy(evolve(s0, params, t), params) - e)
                for t in ts)
    print(f"({x0:+.2f} m, {v0:+.2f} m/s): orbital energy {e:+.4f}, "
          f"max drift along trajectory {drift:.2e}")
    ax2.plot(xs, vs)

ax1.set_xlabel("t (s)")
ax1.set_ylabel("x (m)")
ax1.set_title("CoM position relative to the support point")
ax1.legend(fontsize=8)
ax2.set_xlabel("x (m)")
ax2.set_ylabel("x_dot (m/s)")
ax2.set_title("Phase portraits (hyperbolae of constant energy)")

# ZMP maps: where would the ground reference point have to be to produce a
# given acceleration, and back.
x, acc = 0.1, 0.5
p = zmp_from_trajectory(x, acc, params)
print(f"x={x}, xdd={acc} -> ground point p={p:+.4f}; "
      f"inverse gives xdd={accel_from_zmp(x, p, params):+.4f}")

os.makedirs(os.path.join(os.path.dirname(__file__), "output"), exist_ok=True)
out = os.path.join(os.path.dirname(__file__), "output", "pendulum_basics.png")
fig.tight_layout()
fig.savefig(out, dpi=120)
print("wrote", out)
