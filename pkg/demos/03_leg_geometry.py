"""Leg geometry: analytic inverse kinematics and its forward check.

Both legs are two equal links plus a foot.  The support leg solves hip,
knee and ankle angles from the CoM position over the ankle; the swing leg
from a foot target.  Forward kinematics re-plants the chain and should
land back on the commanded point to machine precision.

Run:  python demos/03_leg_geometry.py
"""

import math
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from simbiped import RobotGeometry, fk_leg, ik_support, ik_swing

geom = RobotGeometry()
print(f"segments L={geom.leg} m, foot height {geom.h_f:.4f} m, "
      f"CoM height {geom.h_c} m")

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 5))

# support-leg poses across a stance sweep, drawn in the ankle frame
for x_t in np.linspace(-0.3, 0.3, 7):
    a = ik_support(x_t, geom)
    hip = (0.0, geom.h_c)  # ankle frame: hip x_t ahead is drawn via points
    knee, ankle, sole = fk_leg(a, geom, hip=hip)
    xs = [hip[0], knee[0], ankle[0], sole[0]]
    zs = [hip[1], knee[1], ankle[1], sole[1]]
    ax1.plot(xs, zs, "o-", ms=3, label=f"x_t={x_t:+.1f}")
    print(f"x_t={x_t:+.2f}: knee {a.theta:.3f} rad, hip {a.gamma:+.3f} rad, "
          f"sole lands at ({sole[0]:+.4f}, {sole[1]:+.4f}) with hip above origin")
ax1.set_title("Support leg across a stance sweep (hip frame)")
ax1.set_xlabel("x (m)")
ax1.set_ylabel("z (m)")
ax1.axis("equal")

# swing-leg reachable workspace and round-trip residual
rng = np.random.default_rng(0)
errors = []
pts = []
while len(pts) < 3000:
    dx = rng.uniform(-0.6, 0.6)
    z = rng.uniform(0.0, 0.5)
    if math.hypot(dx, geom.h_c - z) > geom.max_reach:
        continue
    a = ik_swing(0.0, (dx, z), geom)
    _, ankle, _ = fk_leg(a, geom, hip=(0.0, geom.h_c))
    errors.append(math.hypot(ankle[0] - dx, ankle[1] - z))
    pts.append((dx, z))
pts = np.array(pts)
sc = ax2.scatter(pts[:, 0], pts[:, 1], c=np.log10(np.array(errors) + 1e-18),
                 s=4, cmap="viridis")
fig.colorbar(sc, ax=ax2, label="log10 round-trip error (m)")
ax2.set_title("Swing-foot workspace, forward-check residual")
ax2.set_xlabel("foot x ahead of CoM (m)")
ax2.set_ylabel("foot height (m)")
print(f"worst forward-check residual over {len(pts)} targets: "
      f"{max(errors):.2e} m")

os.makedirs(os.path.join(os.path.dirname(__file__), "output"), exist_ok=True)
out = os.path.join(os.path.dirname(__file__), "output", "leg_geometry.png")
fig.tight_layout()
fig.savefig(out, dpi=120)
print("wrote", out)
