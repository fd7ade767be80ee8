"""Locomotion scorecard: measured metrics -> ratio criteria -> range classes.

The four criteria are speed over body length (1/s), step height over body
height, semicircular-obstacle radius over body height, and maximum climbable
slope (deg).  Ratio values come straight from measurements; the low/medium/
high boundaries are configurable and the shipped defaults are engineering
choices, not measured constants.
"""

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib

__all__ = [
    "RobotMetrics",
    "CriterionBounds",
    "RangeThresholds",
    "Rating",
    "EvaluationReport",
    "speed_ratio",
    "step_ratio",
    "obstacle_ratio",
    "classify",
]

CRITERIA = ("speed", "step", "obstacle", "slope")

FEATURE_LABELS = {
    "speed": "Maximum speed",
    "step": "Step/stair climbing",
    "obstacle": "Obstacle crossing",
    "slope": "Slope climbing",
}


class Rating(str, Enum):
    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"


@dataclass(frozen=True)
class RobotMetrics:
    """Measured capabilities of the robot (SI units, slope in degrees).

    Body dimensions and wheel radius must be strictly positive since they
    act as denominators; performance measures may be zero (a robot that
    cannot cross anything still classifies, as Low).
    """

    max_speed: float
    body_length: float
    body_height: float
    max_step_height: float
    max_obstacle_radius: float
    max_slope_deg: float
    wheel_radius: float

    def __post_init__(self):
        for name in ("body_length", "body_height", "wheel_radius"):
            if not (getattr(self, name) > 0):
                raise ValueError(f"{name} must be strictly positive")
        for name in ("max_speed", "max_step_height", "max_obstacle_radius"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if not (0.0 <= self.max_slope_deg < 90.0):
            raise ValueError(
                f"max_slope_deg must lie in [0, 90), got {self.max_slope_deg}"
            )


@dataclass(frozen=True)
class CriterionBounds:
    """Upper bound of the low band and of the medium band for one criterion."""

    low_upper: float
    medium_upper: float

    def __post_init__(self):
        if not (self.low_upper < self.medium_upper):
            raise ValueError(
                f"low_upper must be < medium_upper, got "
                f"{self.low_upper} >= {self.medium_upper}"
            )

    def rate(self, value: float) -> Rating:
        if value < self.low_upper:
            return Rating.LOW
        if value <= self.medium_upper:
            return Rating.MEDIUM
        return Rating.HIGH


@dataclass(frozen=True)
class RangeThresholds:
    """Per-criterion band boundaries; slope bounds are in degrees."""

    speed: CriterionBounds
    step: CriterionBounds
    obstacle: CriterionBounds
    slope: CriterionBounds

    @classmethod
    def default(cls) -> "RangeThresholds":
        return cls(
            speed=CriterionBounds(0.3, 1.0),
            step=CriterionBounds(0.2, 1.0),
            obstacle=CriterionBounds(0.2, 1.0),
            slope=CriterionBounds(30.0, 60.0),
        )

    @classmethod
    def from_file(cls, path) -> "RangeThresholds":
        """Load bounds from a TOML or JSON file (picked by extension)."""
        path = Path(path)
        if path.suffix.lower() == ".toml":
            with open(path, "rb") as fh:
                raw = tomllib.load(fh)
        else:
            with open(path) as fh:
                raw = json.load(fh)
        try:
            return cls(
                **{
                    name: CriterionBounds(
                        low_upper=float(raw[name]["low_upper"]),
                        medium_upper=float(raw[name]["medium_upper"]),
                    )
                    for name in CRITERIA
                }
            )
        except KeyError as exc:
            raise ValueError(f"thresholds file {path} is missing key {exc}") from exc


def speed_ratio(metrics: RobotMetrics) -> float:
    """Maximum speed over body length (1/s)."""
    return metrics.max_speed / metrics.body_length


def step_ratio(metrics: RobotMetrics) -> float:
    """Maximum crossable step height over body height."""
    return metrics.max_step_height / metrics.body_height


def obstacle_ratio(metrics: RobotMetrics) -> float:
    """Maximum crossable semicircular-obstacle radius over body height."""
    return metrics.max_obstacle_radius / metrics.body_height


@dataclass(frozen=True)
class EvaluationReport:
    """Per-criterion value and rating."""

    entries: tuple  # ((criterion, value, Rating), ...) in CRITERIA order

    def to_dict(self) -> dict:
        return {
            "criteria": {
                name: {"value": value, "rating": rating.value}
                for name, value, rating in self.entries
            }
        }

    def to_table(self) -> str:
        """Aligned three-column text table: feature, criteria value, inference."""
        rows = [("Feature", "Criteria value", "Inference")]
        for name, value, rating in self.entries:
            unit = {"speed": " 1/s", "slope": " deg"}.get(name, "")
            rows.append((FEATURE_LABELS[name], f"{value:.4f}{unit}", f"{rating.value} range"))
        widths = [max(len(row[col]) for row in rows) for col in range(3)]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines)


def classify(metrics: RobotMetrics, thresholds: RangeThresholds | None = None) -> EvaluationReport:
    """Rate each criterion against its band boundaries.

    The slope criterion is classified on raw degrees; the other three on
    their dimensionless (or 1/s) ratios.
    """
    if thresholds is None:
        thresholds = RangeThresholds.default()
    values = {
        "speed": speed_ratio(metrics),
        "step": step_ratio(metrics),
        "obstacle": obstacle_ratio(metrics),
        "slope": metrics.max_slope_deg,
    }
    return EvaluationReport(
        entries=tuple(
            (name, values[name], getattr(thresholds, name).rate(values[name]))
            for name in CRITERIA
        )
    )
