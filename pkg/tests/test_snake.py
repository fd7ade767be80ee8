import cmath
import csv
import math

import numpy as np
import pytest

from scrkit.snake import (
    _scratch_terms,
    curvature_profile,
    midpoint_markers,
    planar_pose,
    pose_payload,
    write_pose_csv,
)

DEG25 = math.radians(25.0)


def _complex_chain_oracle(angles, lengths):
    # rotation composition via complex multiplication, nothing shared with
    # the implementation under test
    heading = complex(1.0, 0.0)
    z = complex(0.0, 0.0)
    points = [(0.0, 0.0)]
    for angle, length in zip(angles, lengths):
        heading *= cmath.exp(1j * angle)
        z += length * heading
        points.append((z.real, z.imag))
    return points


def test_planar_pose_straight_chain():
    pose = planar_pose([0.0] * 4, [0.1] * 4)
    assert pose.joint_positions == (
        (0.0, 0.0),
        (0.1, 0.0),
        (0.2, 0.0),
        (0.30000000000000004, 0.0),
        (0.4, 0.0),
    )
    assert pose.cumulative_angles == (0.0, 0.0, 0.0, 0.0)


def test_planar_pose_uniform_25_degree_bend():
    pose = planar_pose([DEG25] * 4, [0.1] * 4)
    end_x, end_y = pose.joint_positions[-1]
    # 0.1 * sum(cos(25 i deg)), 0.1 * sum(sin(25 i deg)) for i = 1..4
    assert end_x == pytest.approx(0.16342662641587800, abs=1e-12)
    assert end_y == pytest.approx(0.31393962841609540, abs=1e-12)


def test_planar_pose_right_angle_first_joint():
    pose = planar_pose([math.pi / 2.0, 0.0, 0.0, 0.0], [0.1] * 4)
    end_x, end_y = pose.joint_positions[-1]
    assert end_x == pytest.approx(0.0, abs=1e-12)
    assert end_y == pytest.approx(0.4, rel=1e-12)


def test_planar_pose_matches_complex_oracle():
    rng = np.random.default_rng(77)
    for _ in range(1000):
        angles = rng.uniform(-math.pi, math.pi, size=4)
        lengths = rng.uniform(0.01, 0.5, size=4)
        pose = planar_pose(angles, lengths)
        for (x, y), (ox, oy) in zip(pose.joint_positions, _complex_chain_oracle(angles, lengths)):
            assert x == pytest.approx(ox, abs=1e-12)
            assert y == pytest.approx(oy, abs=1e-12)


def test_planar_pose_preserves_link_lengths():
    rng = np.random.default_rng(13)
    for _ in range(200):
        angles = rng.uniform(-math.pi, math.pi, size=4)
        lengths = rng.uniform(0.01, 0.5, size=4)
        pose = planar_pose(angles, lengths)
        pts = np.asarray(pose.joint_positions)
        segment_lengths = np.linalg.norm(np.diff(pts, axis=0), axis=1)
        assert segment_lengths.sum() == pytest.approx(lengths.sum(), abs=1e-9)
        assert np.allclose(segment_lengths, lengths, atol=1e-9)


def test_planar_pose_mirror_symmetry():
    rng = np.random.default_rng(99)
    for _ in range(200):
        angles = rng.uniform(-math.pi, math.pi, size=4)
        lengths = rng.uniform(0.01, 0.5, size=4)
        pose = planar_pose(angles, lengths)
        mirrored = planar_pose(-angles, lengths)
        for (x, y), (mx, my) in zip(pose.joint_positions, mirrored.joint_positions):
            assert mx == pytest.approx(x, abs=1e-12)
            assert my == pytest.approx(-y, abs=1e-12)


def test_curvature_profile_uniform_angles():
    profile = curvature_profile([DEG25] * 4, [0.1] * 4)
    assert profile.k[0] == pytest.approx(DEG25 / 0.1, rel=1e-12)
    assert profile.k[1:] == (0.0, 0.0, 0.0)


def test_curvature_profile_zero_chain():
    assert curvature_profile([0.0] * 4, [0.1] * 4).k == (0.0, 0.0, 0.0, 0.0)


def test_curvature_profile_constant_increment():
    angles = [math.radians(a) for a in (10.0, 20.0, 30.0, 40.0)]
    profile = curvature_profile(angles, [0.1] * 4)
    expected = math.radians(10.0) / 0.1
    for k in profile.k:
        assert k == pytest.approx(expected, rel=1e-12)


def test_midpoint_markers_straight_chain():
    pose = planar_pose([0.0] * 4, [0.1] * 4)
    mids = midpoint_markers(pose)
    assert [round(x, 12) for x, _ in mids] == [0.05, 0.15, 0.25, 0.35]
    assert all(y == 0.0 for _, y in mids)


def test_midpoint_markers_first_link_at_half_joint_position():
    pose = planar_pose([DEG25] * 4, [0.1] * 4)
    mx, my = midpoint_markers(pose)[0]
    jx, jy = pose.joint_positions[1]
    assert mx == pytest.approx(jx / 2.0, rel=1e-12)
    assert my == pytest.approx(jy / 2.0, rel=1e-12)
    assert mx == pytest.approx(0.04532, abs=5e-6)
    assert my == pytest.approx(0.02113, abs=5e-6)


def test_midpoint_markers_single_link():
    pose = planar_pose([0.4], [0.2])
    assert len(midpoint_markers(pose)) == 1


def test_pose_payload_shapes():
    payload = pose_payload(planar_pose([DEG25] * 4, [0.1] * 4))
    assert len(payload["joints"]) == 5
    assert len(payload["midpoints"]) == 4
    assert len(payload["curvatures"]) == 4
    assert payload["joints"][0] == {"x": 0.0, "y": 0.0}


def test_pose_csv_round_trip(tmp_path):
    pose = planar_pose([DEG25] * 4, [0.1] * 4)
    path = tmp_path / "pose.csv"
    write_pose_csv(pose, path)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["joint", "x_m", "y_m"]
    assert len(rows) == 6
    recovered = [(float(x), float(y)) for _, x, y in rows[1:]]
    assert recovered == list(pose.joint_positions)


def test_validation_errors():
    with pytest.raises(ValueError):
        planar_pose([0.1, 0.2], [0.1])
    with pytest.raises(ValueError):
        planar_pose([], [])
    with pytest.raises(ValueError):
        planar_pose([0.1], [0.0])


def test_scratch_terms_do_not_disturb_public_outputs():
    angles = [DEG25] * 4
    lengths = [0.1] * 4
    terms = _scratch_terms(angles, lengths)
    assert terms["diff_map_pinv"].shape == (4, 1)
    # segment angles recovered by atan2 equal the cumulative joint angles
    assert np.allclose(
        terms["segment_angles"], np.cumsum(angles), atol=1e-12
    )
    assert np.allclose(
        terms["averaged_positions"],
        np.asarray(midpoint_markers(planar_pose(angles, lengths))),
        atol=1e-15,
    )
