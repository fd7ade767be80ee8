"""scrkit - toolkit for a cable-driven dual soft continuum robot.

Modules
-------
::

 geometry    -- module geometry: fringe areas, fringe count, bend angles
 design      -- thickness solve, grey relational grid search, design loop
 kinematics  -- DH transforms, forward kinematics, workspace sampling
 snake       -- planar chain pose, curvature profile, link midpoints
 evaluation  -- locomotion ratios and low/medium/high classification
 teleop      -- discrete-time simulator of the joystick-driven robot
 service     -- websocket/HTTP host around the simulator
 cli         -- command line entry point (``scrkit``)

All quantities are SI (meters, radians, seconds) unless a name says
otherwise; the CLI converts to millimeters and degrees at its boundary.
"""

from scrkit.geometry import (
    ChordGeometry,
    ModuleSpec,
    annulus_quarter_area,
    bend_angle_equal_radii,
    bend_angle_unequal_radii,
    fringe_base,
    fringe_count,
    triangular_fringe_area,
)
from scrkit.design import (
    DesignReport,
    GRAResult,
    GRASearchSpace,
    MaterialLoadParams,
    design_pipeline,
    gra_fitness,
    grey_relational_analysis,
    optimal_thickness,
)
from scrkit.kinematics import (
    DHChain,
    DHRow,
    WorkspaceCloud,
    dh_transform,
    forward_kinematics,
    four_module_chain,
    link_frames,
    workspace_sample,
)
from scrkit.snake import (
    CurvatureProfile,
    PlanarChainPose,
    curvature_profile,
    midpoint_markers,
    planar_pose,
)
from scrkit.evaluation import (
    EvaluationReport,
    RangeThresholds,
    Rating,
    RobotMetrics,
    classify,
    obstacle_ratio,
    speed_ratio,
    step_ratio,
)
from scrkit.teleop import (
    DriveState,
    DriveSwitch,
    RobotMode,
    SimConfig,
    TeleopInput,
    TeleopState,
    reset,
    scm_pose,
    step,
)

__version__ = "0.1.0"
