"""Sample the manipulator workspace and plot it from four viewpoints.

Sweeps all four joints over 0..90 degrees (20 points each, 160k poses) and
renders the end-effector cloud in isometric, XY, YZ and ZX views.

Run:  python3 demos/workspace_cloud.py
"""

import time
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from scrkit.kinematics import four_module_chain, workspace_sample

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

start = time.perf_counter()
cloud = workspace_sample(four_module_chain(), steps=20)
print(f"sampled {cloud.points.shape[0]} poses in {time.perf_counter() - start:.2f} s")

extents = cloud.extents()
print(
    "reach: "
    f"x up to {extents['x_max'] * 1000:.0f} mm, "
    f"y up to {extents['y_max'] * 1000:.0f} mm, "
    f"z up to {extents['z_max'] * 1000:.0f} mm"
)

# thin the cloud for plotting; the extents come from the full set
pts = cloud.points[::16] * 1000

fig = plt.figure(figsize=(10, 9))
ax = fig.add_subplot(2, 2, 1, projection="3d")
ax.scatter(pts[:, 0], pts[:, 1], pts[:, 2], s=0.2, alpha=0.3)
ax.set_title("isometric")
ax.set_xlabel("x (mm)")
ax.set_ylabel("y (mm)")
ax.set_zlabel("z (mm)")

for index, (a, b, title) in enumerate([(0, 1, "XY"), (1, 2, "YZ"), (2, 0, "ZX")], start=2):
    ax = fig.add_subplot(2, 2, index)
    ax.scatter(pts[:, a], pts[:, b], s=0.2, alpha=0.3)
    ax.set_title(title)
    ax.set_xlabel("xyz"[a] + " (mm)")
    ax.set_ylabel("xyz"[b] + " (mm)")
    ax.set_aspect("equal")

fig.tight_layout()
fig.savefig(OUT / "workspace_views.png", dpi=120)
print(f"wrote {OUT / 'workspace_views.png'}")

cloud_path = OUT / "workspace_cloud.csv"
cloud.write_csv(cloud_path)
print(f"wrote {cloud_path}")
