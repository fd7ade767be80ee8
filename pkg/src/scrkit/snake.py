"""Planar kinematics of the chain in snake mode.

When the robot rolls on the floor the module chain stays in a plane, so its
shape reduces to relative joint angles and link lengths.  Positions follow
from cumulative-angle sums; per-link curvature is the joint-angle increment
over the link length.
"""

import csv
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PlanarChainPose",
    "CurvatureProfile",
    "planar_pose",
    "curvature_profile",
    "midpoint_markers",
    "pose_payload",
    "write_pose_csv",
]


@dataclass(frozen=True)
class PlanarChainPose:
    """Joint angles, link lengths and the resulting joint coordinates.

    ``joint_angles`` are relative angles between successive links (rad);
    ``cumulative_angles[i]`` is their running sum; ``joint_positions`` holds
    len(links)+1 points starting at the origin.
    """

    joint_angles: tuple
    link_lengths: tuple
    joint_positions: tuple
    cumulative_angles: tuple


@dataclass(frozen=True)
class CurvatureProfile:
    """Per-link curvatures (1/m): joint-angle increment over link length."""

    k: tuple


def planar_pose(joint_angles, link_lengths) -> PlanarChainPose:
    """Chain the links from the origin; link i points along the cumulative angle."""
    angles, lengths = _validated(joint_angles, link_lengths)
    cumulative = tuple(float(c) for c in np.cumsum(angles))
    positions = [(0.0, 0.0)]
    for length, total in zip(lengths, cumulative):
        px, py = positions[-1]
        positions.append((px + length * math.cos(total), py + length * math.sin(total)))
    return PlanarChainPose(
        joint_angles=angles,
        link_lengths=lengths,
        joint_positions=tuple(positions),
        cumulative_angles=cumulative,
    )


def curvature_profile(joint_angles, link_lengths) -> CurvatureProfile:
    """k[i] = (angle_i - angle_{i-1}) / length_i, with a zero angle before the chain."""
    angles, lengths = _validated(joint_angles, link_lengths)
    previous = (0.0,) + angles[:-1]
    return CurvatureProfile(
        k=tuple((a - p) / l for a, p, l in zip(angles, previous, lengths))
    )


def midpoint_markers(pose: PlanarChainPose) -> list:
    """Per-link midpoints, used as the plotted center markers."""
    points = pose.joint_positions
    return [
        ((ax + bx) / 2.0, (ay + by) / 2.0)
        for (ax, ay), (bx, by) in zip(points, points[1:])
    ]


def pose_payload(pose: PlanarChainPose) -> dict:
    """JSON-ready dict: joints, midpoints and curvatures, SI units."""
    curvatures = curvature_profile(pose.joint_angles, pose.link_lengths)
    return {
        "joints": [{"x": x, "y": y} for x, y in pose.joint_positions],
        "midpoints": [{"x": x, "y": y} for x, y in midpoint_markers(pose)],
        "curvatures": list(curvatures.k),
    }


def write_pose_csv(pose: PlanarChainPose, path) -> None:
    """One row per joint: index, x_m, y_m."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["joint", "x_m", "y_m"])
        for i, (x, y) in enumerate(pose.joint_positions):
            writer.writerow([i, repr(x), repr(y)])


def _scratch_terms(joint_angles, link_lengths) -> dict:
    """Extra chain quantities kept for reference behind a debug flag.

    These reproduce a set of intermediate arrays (pairwise sum/difference
    maps over the joint vector, the pseudoinverse of the difference map,
    segment-angle estimates recovered by atan2, per-link curvature) whose
    downstream use is undefined; they feed no public output and no emitted
    figure quantity.  Exposed only through the CLI ``--debug-terms`` flag.
    """
    angles, lengths = _validated(joint_angles, link_lengths)
    n = len(angles)
    pose = planar_pose(angles, lengths)
    pts = np.asarray(pose.joint_positions)
    deltas = np.diff(pts, axis=0)
    segment_angles = np.arctan2(deltas[:, 1], deltas[:, 0])

    sum_map = np.zeros((1, n))
    sum_map[0, :2] = 1.0
    diff_map = np.zeros((1, n))
    diff_map[0, 0] = 1.0
    diff_map[0, 1] = -1.0
    return {
        "sum_map": sum_map,
        "diff_map": diff_map,
        "diff_map_pinv": np.linalg.pinv(diff_map),
        "ones": np.ones(n),
        "segment_angles": segment_angles,
        "curvatures": np.asarray(curvature_profile(angles, lengths).k),
        "averaged_positions": np.asarray(midpoint_markers(pose)),
    }


def _validated(joint_angles, link_lengths):
    angles = tuple(float(a) for a in joint_angles)
    lengths = tuple(float(l) for l in link_lengths)
    if len(angles) != len(lengths):
        raise ValueError(
            f"got {len(angles)} joint angles but {len(lengths)} link lengths"
        )
    if len(angles) == 0:
        raise ValueError("chain needs at least one link")
    if any(l <= 0 for l in lengths):
        raise ValueError("link lengths must be strictly positive")
    return angles, lengths
