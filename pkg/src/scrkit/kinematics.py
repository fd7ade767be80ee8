"""DH forward kinematics of the 4-module chain and workspace sampling.

Convention: each joint transform is a rotation theta about z, a translation
d along z, a translation a along x, then a twist alpha about x, i.e.

    [[ct, -st*ca,  st*sa, a*ct],
     [st,  ct*ca, -ct*sa, a*st],
     [ 0,     sa,     ca,    d],
     [ 0,      0,      0,    1]]

The chain of the physical robot has four rows with d = 0, a = module
length (0.1 m) and alpha = 90 degrees.
"""

import csv
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DHRow",
    "DHChain",
    "four_module_chain",
    "dh_transform",
    "link_frames",
    "forward_kinematics",
    "WorkspaceCloud",
    "workspace_sample",
    "is_rigid_transform",
]

MODULE_LENGTH = 0.1  # m, length of one soft module


@dataclass(frozen=True)
class DHRow:
    """One DH row: joint angle theta (rad), offset d (m), link a (m), twist alpha (rad)."""

    theta: float
    d: float
    a: float
    alpha: float

    def __post_init__(self):
        if self.a < 0:
            raise ValueError(f"link length a must be >= 0, got {self.a}")


@dataclass(frozen=True)
class DHChain:
    """Ordered DH rows.  Any length is accepted; the robot uses four."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) == 0:
            raise ValueError("chain needs at least one row")

    def with_joint_angles(self, thetas) -> "DHChain":
        """Copy of the chain with the joint angles replaced."""
        if len(thetas) != len(self.rows):
            raise ValueError(
                f"expected {len(self.rows)} joint angles, got {len(thetas)}"
            )
        return DHChain(
            tuple(
                DHRow(theta=float(t), d=row.d, a=row.a, alpha=row.alpha)
                for t, row in zip(thetas, self.rows)
            )
        )


def four_module_chain(joint_angles=(0.0, 0.0, 0.0, 0.0), link_lengths=None) -> DHChain:
    """The robot's chain: four joints, d = 0, a = link length, alpha = 90 deg."""
    if link_lengths is None:
        link_lengths = (MODULE_LENGTH,) * 4
    if len(joint_angles) != len(link_lengths):
        raise ValueError("joint_angles and link_lengths must have equal length")
    return DHChain(
        tuple(
            DHRow(theta=float(t), d=0.0, a=float(l), alpha=math.pi / 2.0)
            for t, l in zip(joint_angles, link_lengths)
        )
    )


def dh_transform(row: DHRow) -> np.ndarray:
    """4x4 homogeneous transform of one DH row."""
    ct, st = math.cos(row.theta), math.sin(row.theta)
    ca, sa = math.cos(row.alpha), math.sin(row.alpha)
    return np.array(
        [
            [ct, -st * ca, st * sa, row.a * ct],
            [st, ct * ca, -ct * sa, row.a * st],
            [0.0, sa, ca, row.d],
            [0.0, 0.0, 0.0, 1.0],
        ]
    )


def link_frames(chain: DHChain) -> list:
    """Cumulative transforms base->joint_i, one per row."""
    frames = []
    T = np.eye(4)
    for row in chain.rows:
        T = T @ dh_transform(row)
        frames.append(T)
    return frames


def forward_kinematics(chain: DHChain) -> np.ndarray:
    """Ordered product of the row transforms; position is the last column."""
    return link_frames(chain)[-1]


def is_rigid_transform(T: np.ndarray, tol: float = 1e-9) -> bool:
    """True when T has an orthonormal rotation block and a (0,0,0,1) bottom row."""
    if T.shape != (4, 4):
        return False
    if not np.allclose(T[3], [0.0, 0.0, 0.0, 1.0], atol=tol):
        return False
    R = T[:3, :3]
    return bool(
        np.allclose(R.T @ R, np.eye(3), atol=tol)
        and abs(np.linalg.det(R) - 1.0) <= tol
    )


@dataclass(frozen=True)
class WorkspaceCloud:
    """End-effector positions over the joint grid, in odometer order.

    ``points`` has shape (steps**n_joints, 3); the first joint varies
    slowest.  ``joint_min``/``joint_max`` are the sweep bounds in radians.
    """

    points: np.ndarray
    grid_steps: int
    joint_min: float
    joint_max: float

    def extents(self) -> dict:
        """Axis-aligned min/max of the cloud, in meters."""
        mins = self.points.min(axis=0)
        maxs = self.points.max(axis=0)
        return {
            "x_min": float(mins[0]),
            "x_max": float(maxs[0]),
            "y_min": float(mins[1]),
            "y_max": float(maxs[1]),
            "z_min": float(mins[2]),
            "z_max": float(maxs[2]),
        }

    def summary(self) -> dict:
        """JSON-ready summary: point count, grid shape, sweep bounds, extents."""
        return {
            "points": int(self.points.shape[0]),
            "grid_steps": self.grid_steps,
            "joint_min_rad": self.joint_min,
            "joint_max_rad": self.joint_max,
            "extents_m": self.extents(),
        }

    def write_csv(self, path) -> None:
        """Write the cloud as ``x_m,y_m,z_m`` rows, one point per row."""
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["x_m", "y_m", "z_m"])
            for x, y, z in self.points:
                writer.writerow([repr(float(x)), repr(float(y)), repr(float(z))])


def workspace_sample(
    chain_template: DHChain,
    steps: int = 20,
    theta_lo: float = 0.0,
    theta_hi: float = math.pi / 2.0,
) -> WorkspaceCloud:
    """Sweep every joint over ``steps`` evenly spaced angles and collect positions.

    The grid includes both endpoints (linspace), so the extreme all-lo and
    all-hi configurations are always sampled.  Points come out in odometer
    order with the first joint slowest.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    thetas = np.linspace(theta_lo, theta_hi, steps)
    n = len(chain_template.rows)
    grids = np.meshgrid(*([thetas] * n), indexing="ij")
    flats = [g.reshape(-1) for g in grids]

    T = None
    for joint, row in enumerate(chain_template.rows):
        A = _dh_batch(flats[joint], row.d, row.a, row.alpha)
        T = A if T is None else T @ A
    return WorkspaceCloud(
        points=T[:, :3, 3],
        grid_steps=steps,
        joint_min=float(theta_lo),
        joint_max=float(theta_hi),
    )


def _dh_batch(theta: np.ndarray, d: float, a: float, alpha: float) -> np.ndarray:
    ct, st = np.cos(theta), np.sin(theta)
    ca, sa = math.cos(alpha), math.sin(alpha)
    M = np.zeros((theta.size, 4, 4))
    M[:, 0, 0] = ct
    M[:, 0, 1] = -st * ca
    M[:, 0, 2] = st * sa
    M[:, 0, 3] = a * ct
    M[:, 1, 0] = st
    M[:, 1, 1] = ct * ca
    M[:, 1, 2] = -ct * sa
    M[:, 1, 3] = a * st
    M[:, 2, 1] = sa
    M[:, 2, 2] = ca
    M[:, 2, 3] = d
    M[:, 3, 3] = 1.0
    return M
