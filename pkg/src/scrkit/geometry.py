"""Closed-form geometry of one soft module.

A module is a foam cuboid with triangular notches ("fringes") cut into the
sides.  Closing the fringes bends the module about one axis.  The functions
here relate the fringe layout (count N, base b, height h) to the bending
band (inner radius r, outer radius R) and give the bend angle of a module
from a measured chord.
"""

import math
from dataclasses import dataclass

__all__ = [
    "ModuleSpec",
    "ChordGeometry",
    "annulus_quarter_area",
    "triangular_fringe_area",
    "fringe_count",
    "fringe_base",
    "bend_angle_equal_radii",
    "bend_angle_unequal_radii",
]

_REL_TOL = 1e-9


@dataclass(frozen=True)
class ModuleSpec:
    """Full geometric parameter set of one module (SI units).

    Construction enforces the coupling equations R = r + h and b = L/N to
    1e-9 relative, so a ModuleSpec is always internally consistent.
    """

    length_L: float
    width_W: float
    thickness_T: float
    fringe_base_b: float
    fringe_height_h: float
    inner_radius_r: float
    outer_radius_R: float
    fringe_count_N: int
    turn_angle_theta: float

    def __post_init__(self):
        lengths = {
            "length_L": self.length_L,
            "width_W": self.width_W,
            "thickness_T": self.thickness_T,
            "fringe_base_b": self.fringe_base_b,
            "fringe_height_h": self.fringe_height_h,
            "inner_radius_r": self.inner_radius_r,
            "outer_radius_R": self.outer_radius_R,
        }
        for name, value in lengths.items():
            if not (value > 0):
                raise ValueError(f"{name} must be strictly positive, got {value}")
        if self.fringe_count_N < 1:
            raise ValueError(f"fringe_count_N must be >= 1, got {self.fringe_count_N}")
        if not math.isclose(
            self.outer_radius_R,
            self.inner_radius_r + self.fringe_height_h,
            rel_tol=_REL_TOL,
        ):
            raise ValueError(
                "outer radius must equal inner radius plus fringe height: "
                f"R={self.outer_radius_R} != r+h="
                f"{self.inner_radius_r + self.fringe_height_h}"
            )
        if not math.isclose(
            self.fringe_base_b,
            self.length_L / self.fringe_count_N,
            rel_tol=_REL_TOL,
        ):
            raise ValueError(
                "fringe base must equal module length over fringe count: "
                f"b={self.fringe_base_b} != L/N="
                f"{self.length_L / self.fringe_count_N}"
            )
        if not (0.0 <= self.turn_angle_theta <= math.pi):
            raise ValueError(
                f"turn_angle_theta must lie in [0, pi], got {self.turn_angle_theta}"
            )


@dataclass(frozen=True)
class ChordGeometry:
    """Measured chord C_l (m) across a bent module and its arc radii (m)."""

    chord_Cl: float
    radius_r1: float
    radius_r2: float

    def __post_init__(self):
        if self.chord_Cl < 0:
            raise ValueError(f"chord_Cl must be >= 0, got {self.chord_Cl}")
        if self.radius_r1 <= 0 or self.radius_r2 <= 0:
            raise ValueError("radii must be strictly positive")


def annulus_quarter_area(R: float, r: float) -> float:
    """Quarter-annulus area pi*(R^2 - r^2)/4 (m^2) occupied by the fringe band."""
    _check_band(R, r)
    return math.pi * (R * R - r * r) / 4.0


def triangular_fringe_area(N: int, b: float, h: float) -> float:
    """Total area N*b*h/2 (m^2) of N triangular fringes of base b, height h."""
    if N < 1:
        raise ValueError(f"fringe count must be >= 1, got {N}")
    if b <= 0 or h <= 0:
        raise ValueError("fringe base and height must be strictly positive")
    return N * b * h / 2.0


def fringe_count(R: float, r: float, b: float, h: float) -> float:
    """Fringe count pi*(R^2 - r^2)/(2*b*h) that equates band and triangle areas.

    Real-valued on purpose: rounding to an integer module layout is the
    design loop's job, and the equation rarely lands on an integer.
    """
    _check_band(R, r)
    if b <= 0 or h <= 0:
        raise ValueError("fringe base and height must be strictly positive")
    return math.pi * (R * R - r * r) / (2.0 * b * h)


def fringe_base(L: float, N: int) -> float:
    """Fringe base b = L/N (m) when N fringes tile a module of length L."""
    if L <= 0:
        raise ValueError(f"module length must be strictly positive, got {L}")
    if N < 1:
        raise ValueError(f"fringe count must be >= 1, got {N}")
    return L / N


def bend_angle_equal_radii(chord: ChordGeometry) -> float:
    """Bend angle 2*arcsin(C_l/(2r)) in [0, pi] for equal arc radii."""
    if chord.radius_r1 != chord.radius_r2:
        raise ValueError(
            "equal-radii bend angle needs r1 == r2; "
            f"got r1={chord.radius_r1}, r2={chord.radius_r2}"
        )
    r = chord.radius_r1
    if chord.chord_Cl > 2.0 * r:
        raise ValueError(
            f"chord {chord.chord_Cl} exceeds diameter {2.0 * r}; no such arc"
        )
    return 2.0 * math.asin(chord.chord_Cl / (2.0 * r))


def bend_angle_unequal_radii(chord: ChordGeometry) -> float:
    """Bend angle 2*arcsin(C_l/(r1*r2)) for unequal arc radii.

    Note: the ratio C_l/(r1*r2) carries units of 1/length, so this relation
    is not scale invariant.  It is kept in this exact form deliberately and
    surfaced only behind an expert flag at the CLI; prefer
    :func:`bend_angle_equal_radii` whenever r1 == r2.
    """
    arg = chord.chord_Cl / (chord.radius_r1 * chord.radius_r2)
    if not -1.0 <= arg <= 1.0:
        raise ValueError(
            f"C_l/(r1*r2) = {arg} lies outside [-1, 1]; arcsin undefined"
        )
    return 2.0 * math.asin(arg)


def _check_band(R: float, r: float) -> None:
    if r <= 0:
        raise ValueError(f"inner radius must be strictly positive, got {r}")
    if R <= r:
        raise ValueError(
            f"outer radius must exceed inner radius, got R={R} <= r={r}"
        )
