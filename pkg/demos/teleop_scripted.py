"""Drive the simulator through a scripted maneuver and plot the result.

The script mimics an operator: wind the yaw drive for a second, switch to
snake mode, drive straight, then hold the bend through a turn.  Plots the
base trajectory and the module bend history.

Run:  python3 demos/teleop_scripted.py
"""

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from scrkit.teleop import DriveSwitch, RobotMode, SimConfig, TeleopInput, reset, scm_pose, step

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

config = SimConfig()
dt = 1.0 / config.tick_rate

# (duration s, input) segments of the maneuver
script = [
    (2.0, TeleopInput(mode=RobotMode.SSR, drive_switch=DriveSwitch.FORWARD)),
    (1.0, TeleopInput(joystick_x=1.0, mode=RobotMode.SSR)),
    (4.0, TeleopInput(mode=RobotMode.SSR, drive_switch=DriveSwitch.FORWARD)),
    (1.0, TeleopInput(joystick_x=-1.0, mode=RobotMode.SSR)),
    (2.0, TeleopInput(mode=RobotMode.SSR, drive_switch=DriveSwitch.FORWARD)),
]

state = reset(config)
times, xs, ys, yaw_bends = [], [], [], []
for duration, command in script:
    for _ in range(round(duration / dt)):
        state = step(state, command, config, dt)
        times.append(state.sim_time)
        xs.append(state.ssr_pose[0])
        ys.append(state.ssr_pose[1])
        yaw_bends.append(state.module_bends[0])

x, y, heading = state.ssr_pose
print(f"final base pose: x = {x:.3f} m, y = {y:.3f} m, heading = {math.degrees(heading):.1f} deg")
end_effector, _ = scm_pose(state, config.link_length)
print(f"chain end effector relative to base: {np.round(end_effector, 3)} m")

fig, (ax_path, ax_bend) = plt.subplots(1, 2, figsize=(10, 4))
ax_path.plot(np.array(xs), np.array(ys), lw=2)
ax_path.plot([0], [0], "y*", ms=14, label="start")
ax_path.set_xlabel("x (m)")
ax_path.set_ylabel("y (m)")
ax_path.set_aspect("equal")
ax_path.set_title("base trajectory")
ax_path.legend()

ax_bend.plot(times, np.degrees(yaw_bends), lw=2)
ax_bend.set_xlabel("time (s)")
ax_bend.set_ylabel("module 1 yaw bend (deg)")
ax_bend.set_title("yaw bend history")
fig.tight_layout()
fig.savefig(OUT / "teleop_maneuver.png", dpi=120)
print(f"wrote {OUT / 'teleop_maneuver.png'}")
