"""Score measured locomotion capabilities against the default range bands.

The metric values are recorded measurements of the physical robot; the
toolkit turns them into ratio criteria and rates each one low/medium/high.

Run:  python3 demos/locomotion_scorecard.py
"""

from scrkit.evaluation import RangeThresholds, RobotMetrics, classify

measured = RobotMetrics(
    max_speed=0.37,  # m/s over a 0.5 m course
    body_length=0.700,
    body_height=0.120,
    max_step_height=0.030,
    max_obstacle_radius=0.055,  # semicircular profile
    max_slope_deg=66.0,
    wheel_radius=0.035,
)

report = classify(measured, RangeThresholds.default())
print(report.to_table())
print()
print(
    "wheel-limited speed for reference: 60 RPM * 2*pi * 35 mm "
    f"= {60 / 60 * 2 * 3.141592653589793 * measured.wheel_radius:.3f} m/s"
)
