"""Plot the planar chain in snake mode for a uniform 25-degree bend.

Run:  python3 demos/snake_bend.py
"""

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from scrkit.snake import curvature_profile, midpoint_markers, planar_pose

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

angles = [math.radians(25.0)] * 4
lengths = [0.1] * 4

pose = planar_pose(angles, lengths)
mids = midpoint_markers(pose)
curvatures = curvature_profile(angles, lengths)

end_x, end_y = pose.joint_positions[-1]
print(f"end point: ({end_x * 1000:.2f}, {end_y * 1000:.2f}) mm")
print("per-link curvature (1/m):", [round(k, 4) for k in curvatures.k])

pts = np.asarray(pose.joint_positions) * 1000
mid_pts = np.asarray(mids) * 1000

fig, ax = plt.subplots(figsize=(5, 5))
ax.plot(pts[:, 0], pts[:, 1], "o-", lw=3, ms=8, label="links")
ax.plot(mid_pts[:, 0], mid_pts[:, 1], "r.", ms=10, label="link centers")
ax.plot(0, 0, "y*", ms=16, label="base")
ax.set_xlabel("x (mm)")
ax.set_ylabel("y (mm)")
ax.set_aspect("equal")
ax.legend()
ax.set_title("chain pose, 25 deg between successive links")
fig.tight_layout()
fig.savefig(OUT / "snake_pose.png", dpi=120)
print(f"wrote {OUT / 'snake_pose.png'}")
