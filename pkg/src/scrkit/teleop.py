"""Discrete-time simulator of the dual-mode robot.

Two antagonistic cable drives bend the module chain: the yaw drive acts on
modules 1 and 3, the pitch drive on modules 2 and 4 (the modules alternate
bending axes along the chain).  Winding a drive lengthens one cable of its
pair and shortens the other by the same amount, so each pair's total length
is conserved.  In manipulator (SCM) mode the chain bends in place; in snake
(SSR) mode a wheel pushes the base along the floor and a held yaw bend
steers it, modeled as a unicycle whose heading rate is proportional to
forward speed times the total yaw bend.

Stepping is purely functional: ``step`` maps an immutable state to a new
immutable state, so trajectories are exactly reproducible.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from scrkit.kinematics import four_module_chain, link_frames

__all__ = [
    "DriveSwitch",
    "RobotMode",
    "DriveState",
    "TeleopInput",
    "TeleopState",
    "SimConfig",
    "reset",
    "step",
    "scm_pose",
]


class DriveSwitch(Enum):
    FORWARD = "fwd"
    OFF = "off"
    REVERSE = "rev"


class RobotMode(Enum):
    SCM = "scm"  # handheld manipulator: chain bends, base stays put
    SSR = "ssr"  # mobile snake: wheel drives the base, yaw bend steers


@dataclass(frozen=True)
class SimConfig:
    """Simulator constants.

    ``wheel_rpm`` and ``wheel_radius`` reflect the physical drivetrain
    (60 RPM, 35 mm).  The servo speed, pulley radius, cable-to-bend gain and
    turn gain are simulator defaults chosen so a full-stick wind of 2 s
    saturates a module at 90 degrees; they are not measured values.
    """

    servo_max_speed: float = 2.0 * math.pi / 3.0  # rad/s at full stick
    pulley_radius: float = 0.01  # m
    bend_per_cable_delta: float = 75.0  # rad of axis bend per m of cable differential
    wheel_rpm: float = 60.0
    wheel_radius: float = 0.035  # m
    turn_gain: float = 1.0  # 1/m, heading rate per (speed * yaw bend)
    tick_rate: float = 50.0  # Hz
    cable_length: float = 0.4  # m, each cable of a pair at rest
    link_length: float = 0.1  # m, one module

    def __post_init__(self):
        for name in (
            "servo_max_speed",
            "pulley_radius",
            "bend_per_cable_delta",
            "wheel_rpm",
            "wheel_radius",
            "turn_gain",
            "tick_rate",
            "cable_length",
            "link_length",
        ):
            if not (getattr(self, name) > 0):
                raise ValueError(f"{name} must be strictly positive")


@dataclass(frozen=True)
class DriveState:
    """One differential drive: shaft angle and its antagonistic cable pair."""

    shaft_angle: float
    pulley_radius: float
    cable_a_len: float
    cable_b_len: float

    @property
    def cable_difference(self) -> float:
        return self.cable_a_len - self.cable_b_len


@dataclass(frozen=True)
class TeleopInput:
    """Operator input: 2-axis joystick, drive switch, mode selector.

    Joystick components are clamped into [-1, 1] at construction;
    non-finite values are rejected.
    """

    joystick_x: float = 0.0
    joystick_y: float = 0.0
    drive_switch: DriveSwitch = DriveSwitch.OFF
    mode: RobotMode = RobotMode.SCM

    def __post_init__(self):
        for name in ("joystick_x", "joystick_y"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, min(1.0, max(-1.0, float(value))))


@dataclass(frozen=True)
class TeleopState:
    """Simulator state snapshot; immutable, safe to hand out."""

    yaw_drive: DriveState
    pitch_drive: DriveState
    module_bends: tuple  # 4 angles (rad): modules 1,3 yaw; 2,4 pitch
    ssr_pose: tuple  # (x m, y m, heading rad), heading in (-pi, pi]
    wheel_speed: float  # m/s commanded during the last step
    sim_time: float
    clamped: bool = False  # a bend or windup limit engaged during the last step


def reset(config: SimConfig) -> TeleopState:
    """Initial state: straight chain, equalized cables, base at the origin."""
    drive = DriveState(
        shaft_angle=0.0,
        pulley_radius=config.pulley_radius,
        cable_a_len=config.cable_length,
        cable_b_len=config.cable_length,
    )
    return TeleopState(
        yaw_drive=drive,
        pitch_drive=drive,
        module_bends=(0.0, 0.0, 0.0, 0.0),
        ssr_pose=(0.0, 0.0, 0.0),
        wheel_speed=0.0,
        sim_time=0.0,
        clamped=False,
    )


def step(
    state: TeleopState, command: TeleopInput, config: SimConfig, dt: float
) -> TeleopState:
    """Advance the simulation by dt seconds under a held input.

    Order per tick: servo shafts advance, cable pairs follow the pulleys,
    module bends follow the cable differentials (clamped to +/- 90 degrees
    per module), then in SSR mode the base integrates unicycle kinematics.
    In SCM mode the base pose is frozen.
    """
    if not (dt > 0):
        raise ValueError(f"dt must be > 0, got {dt}")
    max_tick_bend = dt * config.servo_max_speed * config.pulley_radius * config.bend_per_cable_delta
    if not (max_tick_bend < math.pi):
        raise ValueError(
            f"single-tick bend {max_tick_bend} rad not bounded below pi; "
            "reduce dt or the drive gains"
        )

    yaw_drive, yaw_windup = _advance_drive(state.yaw_drive, command.joystick_x, config, dt)
    pitch_drive, pitch_windup = _advance_drive(state.pitch_drive, command.joystick_y, config, dt)

    yaw_bend, yaw_hit = _module_bend(yaw_drive, config)
    pitch_bend, pitch_hit = _module_bend(pitch_drive, config)
    bends = (yaw_bend, pitch_bend, yaw_bend, pitch_bend)

    if command.mode is RobotMode.SSR:
        speed = _switch_sign(command.drive_switch) * config.wheel_rpm / 60.0 * math.tau * config.wheel_radius
        x, y, heading = state.ssr_pose
        total_yaw = bends[0] + bends[2]
        x += speed * math.cos(heading) * dt
        y += speed * math.sin(heading) * dt
        heading = _wrap_angle(heading + config.turn_gain * speed * total_yaw * dt)
        pose = (x, y, heading)
    else:
        speed = 0.0
        pose = state.ssr_pose

    return TeleopState(
        yaw_drive=yaw_drive,
        pitch_drive=pitch_drive,
        module_bends=bends,
        ssr_pose=pose,
        wheel_speed=speed,
        sim_time=state.sim_time + dt,
        clamped=yaw_windup or pitch_windup or yaw_hit or pitch_hit,
    )


def scm_pose(state: TeleopState, link_length: float = 0.1):
    """Spatial pose of the chain for the current bends.

    The four module bends map one-to-one onto the joint angles of the DH
    chain (the orthogonal module offsets are the chain's 90-degree twists).
    Returns (end-effector position, list of per-joint 4x4 frames).
    """
    chain = four_module_chain(
        joint_angles=state.module_bends, link_lengths=(link_length,) * 4
    )
    frames = link_frames(chain)
    return np.array(frames[-1][:3, 3]), frames


def _advance_drive(drive: DriveState, stick: float, config: SimConfig, dt: float):
    # Winding stops where a cable would run out, so lengths stay in
    # [0, 2 * cable_length] and the pair sum is conserved by construction.
    limit = config.cable_length / config.pulley_radius
    raw = drive.shaft_angle + config.servo_max_speed * stick * dt
    shaft = min(limit, max(-limit, raw))
    return (
        DriveState(
            shaft_angle=shaft,
            pulley_radius=config.pulley_radius,
            cable_a_len=config.cable_length + config.pulley_radius * shaft,
            cable_b_len=config.cable_length - config.pulley_radius * shaft,
        ),
        shaft != raw,
    )


def _module_bend(drive: DriveState, config: SimConfig):
    # Cable differential maps linearly to the axis bend, split equally
    # between the two modules of that axis, each limited to +/- 90 degrees.
    axis_bend = config.bend_per_cable_delta * drive.cable_difference / 2.0
    per_module = axis_bend / 2.0
    clamped = min(math.pi / 2.0, max(-math.pi / 2.0, per_module))
    return clamped, clamped != per_module


def _switch_sign(switch: DriveSwitch) -> float:
    if switch is DriveSwitch.FORWARD:
        return 1.0
    if switch is DriveSwitch.REVERSE:
        return -1.0
    return 0.0


def _wrap_angle(angle: float) -> float:
    wrapped = math.remainder(angle, math.tau)
    if wrapped <= -math.pi:
        wrapped += math.tau
    return wrapped
