"""Optimal module design: thickness solve, grey relational grid search, loop.

The design pipeline fixes the module cross section first (a one-variable
geometric program over the thickness, with the bending-stress constraint
active at the optimum) and then searches the (inner radius, fringe height)
grid with grey relational grades.  An outer loop raises the fringe count
until the module can close through at least a quarter turn.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from scrkit.geometry import ModuleSpec, fringe_count

__all__ = [
    "MaterialLoadParams",
    "GRASearchSpace",
    "GRAResult",
    "DesignReport",
    "optimal_thickness",
    "gra_fitness",
    "grey_relational_analysis",
    "closing_angle",
    "design_pipeline",
    "report_to_dict",
    "report_from_dict",
]


@dataclass(frozen=True)
class MaterialLoadParams:
    """Material density (kg/m^3), applied force (N), allowable bending stress (N/m^2)."""

    density_D: float
    force_F: float
    max_bending_stress_sigma: float

    def __post_init__(self):
        for name in ("density_D", "force_F", "max_bending_stress_sigma"):
            if not (getattr(self, name) > 0):
                raise ValueError(f"{name} must be strictly positive")


@dataclass(frozen=True)
class GRASearchSpace:
    """Grid over inner radius r and fringe height h (m), at fixed base b and count N."""

    r_range: tuple
    h_range: tuple
    base_b: float
    fringe_count_N: int

    def __post_init__(self):
        object.__setattr__(self, "r_range", tuple(float(r) for r in self.r_range))
        object.__setattr__(self, "h_range", tuple(float(h) for h in self.h_range))
        for name, rng in (("r_range", self.r_range), ("h_range", self.h_range)):
            if len(rng) == 0:
                raise ValueError(f"{name} must be non-empty")
            if rng[0] <= 0:
                raise ValueError(f"{name} values must be strictly positive")
            if any(b <= a for a, b in zip(rng, rng[1:])):
                raise ValueError(f"{name} must be strictly increasing")
        if self.base_b <= 0:
            raise ValueError("base_b must be strictly positive")
        if self.fringe_count_N < 1:
            raise ValueError("fringe_count_N must be >= 1")


@dataclass(frozen=True)
class GRAResult:
    """Grade surface over the (r, h) grid and the maximum-grade cell."""

    grade_matrix: np.ndarray  # shape (len(r_range), len(h_range)), values in [0, 1]
    optimal_r: float
    optimal_h: float
    optimal_R: float
    space: GRASearchSpace


@dataclass(frozen=True)
class DesignReport:
    """Outcome of the design loop, including the full iteration trace.

    ``fringe_equation_value`` is the real-valued fringe count the area
    equation yields for the final geometry; ``fringe_count_mismatch`` is set
    when that value disagrees with the integer N actually used (it is
    reported, never silently reconciled).
    """

    module: ModuleSpec
    thickness_objective_value: float  # density * L * W * T, the mass proxy
    gra: GRAResult
    iterations: tuple  # ((N, theta_rad), ...) in loop order
    loop_limit_reached: bool
    fringe_equation_value: float
    fringe_count_mismatch: bool


def optimal_thickness(
    L: float, W: float, params: MaterialLoadParams, method: str = "closed_form"
) -> float:
    """Thickness T (m) minimizing D*L*W*T subject to 6*F*L/(sigma*W*T^2) <= 1.

    The objective increases with T while feasibility needs T large, so the
    stress constraint is active and T* = sqrt(6*F*L/(sigma*W)).
    ``method="bisection"`` solves the same active constraint by monotone
    bisection instead; both routes agree to 1e-9 relative.
    """
    if L <= 0 or W <= 0:
        raise ValueError("module length and width must be strictly positive")
    ratio = 6.0 * params.force_F * L / (params.max_bending_stress_sigma * W)
    if method == "closed_form":
        return math.sqrt(ratio)
    if method == "bisection":
        return _bisect_active_constraint(ratio)
    raise ValueError(f"unknown method {method!r}")


def _bisect_active_constraint(ratio: float, rel_tol: float = 1e-12) -> float:
    # Smallest feasible T solves g(T) = ratio/T^2 = 1; g is strictly decreasing.
    lo, hi = 0.0, 1.0
    while ratio / (hi * hi) > 1.0:
        hi *= 2.0
    while hi - lo > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        if ratio / (mid * mid) > 1.0:
            lo = mid
        else:
            hi = mid
    return hi


def gra_fitness(r: float, h: float, b: float, N: int) -> float:
    """Fringe-count fitness at a grid cell: pi*((r+h)^2 - r^2)/(2*b*h).

    Algebraically equal to pi*(h + 2r)/(2b).  Lower is better: the grid
    search prefers geometries that need fewer fringes for the same band.
    N does not enter the expression; it is accepted so the fitness callable
    matches the grid-search inputs.
    """
    if r <= 0 or h <= 0 or b <= 0:
        raise ValueError("r, h and b must be strictly positive")
    return fringe_count(r + h, r, b, h)


def grey_relational_analysis(space: GRASearchSpace) -> GRAResult:
    """Grade every (r, h) cell and pick the maximum-grade one.

    Grades are (max - fitness)/(max - min), so the minimum-fitness cell
    grades exactly 1 and the maximum-fitness cell exactly 0.  On a
    degenerate grid where all fitness values coincide every grade is
    defined as 1 and the first cell wins.  Ties break toward the smallest
    r, then the smallest h.
    """
    fitness = np.array(
        [
            [gra_fitness(r, h, space.base_b, space.fringe_count_N) for h in space.h_range]
            for r in space.r_range
        ]
    )
    lo, hi = fitness.min(), fitness.max()
    if hi == lo:
        grades = np.ones_like(fitness)
    else:
        grades = (hi - fitness) / (hi - lo)
    # argwhere is row-major, so the first maximal entry is already the
    # lexicographically smallest (r, h) pair.
    i, j = np.argwhere(grades == grades.max())[0]
    r_opt = space.r_range[i]
    h_opt = space.h_range[j]
    return GRAResult(
        grade_matrix=grades,
        optimal_r=r_opt,
        optimal_h=h_opt,
        optimal_R=r_opt + h_opt,
        space=space,
    )


def closing_angle(N: int, b: float, h: float) -> float:
    """Maximum bend angle (rad) of a module whose N notches close fully.

    Each triangular notch of base b and height h can close by at most its
    apex angle 2*atan(b/(2h)); a module of N fringes therefore bends by up
    to N times that, capped at pi.  This is the computable termination
    criterion the design loop uses; a chord-measured bend angle (see
    :mod:`scrkit.geometry`) replaces it once a physical module exists.
    """
    if N < 1:
        raise ValueError(f"fringe count must be >= 1, got {N}")
    if b <= 0 or h <= 0:
        raise ValueError("fringe base and height must be strictly positive")
    return min(math.pi, N * 2.0 * math.atan(b / (2.0 * h)))


def design_pipeline(
    L: float,
    W: float,
    params: MaterialLoadParams,
    r_range: Sequence[float],
    h_range: Sequence[float],
    max_N: int,
    pinned_N: int | None = None,
) -> DesignReport:
    """Run the full design loop and return a DesignReport.

    For N = 1, 2, ..., max_N: set b = L/N, solve the thickness program, run
    the grey relational grid search, and evaluate the closing angle; stop at
    the first N whose angle reaches pi/2.  If none qualifies the report
    carries the best angle seen and ``loop_limit_reached`` is set.
    ``pinned_N`` bypasses the loop and evaluates that single N, for
    reproducing a fixed published layout.
    """
    if max_N < 1:
        raise ValueError(f"max_N must be >= 1, got {max_N}")
    if pinned_N is not None and pinned_N < 1:
        raise ValueError(f"pinned_N must be >= 1, got {pinned_N}")

    candidates = [pinned_N] if pinned_N is not None else range(1, max_N + 1)
    iterations = []
    evaluated = []  # (N, theta, T, gra) per iteration
    qualified = False
    for N in candidates:
        b = L / N
        T = optimal_thickness(L, W, params)
        gra = grey_relational_analysis(
            GRASearchSpace(tuple(r_range), tuple(h_range), b, N)
        )
        theta = closing_angle(N, b, gra.optimal_h)
        iterations.append((N, theta))
        evaluated.append((N, theta, T, gra))
        if theta >= math.pi / 2.0:
            qualified = True
            break

    if qualified or pinned_N is not None:
        N, theta, T, gra = evaluated[-1]
        loop_limit = not qualified
    else:
        N, theta, T, gra = max(evaluated, key=lambda item: item[1])
        loop_limit = True

    b = L / N
    module = ModuleSpec(
        length_L=L,
        width_W=W,
        thickness_T=T,
        fringe_base_b=b,
        fringe_height_h=gra.optimal_h,
        inner_radius_r=gra.optimal_r,
        outer_radius_R=gra.optimal_R,
        fringe_count_N=N,
        turn_angle_theta=theta,
    )
    equation_N = fringe_count(gra.optimal_R, gra.optimal_r, b, gra.optimal_h)
    return DesignReport(
        module=module,
        thickness_objective_value=params.density_D * L * W * T,
        gra=gra,
        iterations=tuple(iterations),
        loop_limit_reached=loop_limit,
        fringe_equation_value=equation_N,
        fringe_count_mismatch=abs(equation_N - N) > 0.5,
    )


def report_to_dict(report: DesignReport) -> dict:
    """JSON-ready dict for a DesignReport (SI units, _m/_rad suffixes)."""
    module = report.module
    space = report.gra.space
    return {
        "module": {
            "length_L_m": module.length_L,
            "width_W_m": module.width_W,
            "thickness_T_m": module.thickness_T,
            "fringe_base_b_m": module.fringe_base_b,
            "fringe_height_h_m": module.fringe_height_h,
            "inner_radius_r_m": module.inner_radius_r,
            "outer_radius_R_m": module.outer_radius_R,
            "fringe_count_N": module.fringe_count_N,
            "turn_angle_theta_rad": module.turn_angle_theta,
        },
        "thickness_objective_value": report.thickness_objective_value,
        "gra": {
            "r_range_m": list(space.r_range),
            "h_range_m": list(space.h_range),
            "base_b_m": space.base_b,
            "fringe_count_N": space.fringe_count_N,
            "grade_matrix": report.gra.grade_matrix.tolist(),
            "optimal_r_m": report.gra.optimal_r,
            "optimal_h_m": report.gra.optimal_h,
            "optimal_R_m": report.gra.optimal_R,
        },
        "iterations": [
            {"fringe_count_N": n, "turn_angle_theta_rad": theta}
            for n, theta in report.iterations
        ],
        "loop_limit_reached": report.loop_limit_reached,
        "fringe_equation_value": report.fringe_equation_value,
        "fringe_count_mismatch": report.fringe_count_mismatch,
    }


def report_from_dict(raw: dict) -> DesignReport:
    """Inverse of :func:`report_to_dict`."""
    module = raw["module"]
    gra_raw = raw["gra"]
    space = GRASearchSpace(
        r_range=tuple(gra_raw["r_range_m"]),
        h_range=tuple(gra_raw["h_range_m"]),
        base_b=gra_raw["base_b_m"],
        fringe_count_N=gra_raw["fringe_count_N"],
    )
    return DesignReport(
        module=ModuleSpec(
            length_L=module["length_L_m"],
            width_W=module["width_W_m"],
            thickness_T=module["thickness_T_m"],
            fringe_base_b=module["fringe_base_b_m"],
            fringe_height_h=module["fringe_height_h_m"],
            inner_radius_r=module["inner_radius_r_m"],
            outer_radius_R=module["outer_radius_R_m"],
            fringe_count_N=module["fringe_count_N"],
            turn_angle_theta=module["turn_angle_theta_rad"],
        ),
        thickness_objective_value=raw["thickness_objective_value"],
        gra=GRAResult(
            grade_matrix=np.array(gra_raw["grade_matrix"]),
            optimal_r=gra_raw["optimal_r_m"],
            optimal_h=gra_raw["optimal_h_m"],
            optimal_R=gra_raw["optimal_R_m"],
            space=space,
        ),
        iterations=tuple(
            (item["fringe_count_N"], item["turn_angle_theta_rad"])
            for item in raw["iterations"]
        ),
        loop_limit_reached=raw["loop_limit_reached"],
        fringe_equation_value=raw["fringe_equation_value"],
        fringe_count_mismatch=raw["fringe_count_mismatch"],
    )
