"""Slewing-bearing life pipeline.

basic rating -> oscillation correction -> equivalent axial load -> L10 ->
standard modified rating life -> raceway stress cycles -> calendar years.

Ball diameter D_r and raceway center diameter d_m follow the rolling-
bearing rating convention and are carried in millimeters; loads are N and
moments N·m. The rating-factor f_cm is caller input (for the bearing used
here the groove conformity is 0.53; the corresponding f_cm comes from the
rating tables, not from this module).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError

BALL_EXPONENT = 3.0  # load-life exponent p for ball bearings
ROLLER_EXPONENT = 10.0 / 3.0

OSCILLATIONS = "oscillations"
RACEWAY_CYCLES = "raceway_cycles"
DAYS_PER_YEAR = 365.0


@dataclass(frozen=True)
class SlewingBearingGeometry:
    groove_factor_fcm: float
    rows_i: int
    ball_count_Z: int
    ball_diameter_Dr: float  # mm
    contact_angle_alpha: float  # deg
    raceway_center_diameter_dm: float  # mm

    def __post_init__(self):
        if not self.groove_factor_fcm > 0:
            raise ValidationError("groove_factor_fcm must be positive")
        if self.rows_i < 1 or self.ball_count_Z < 1:
            raise ValidationError("rows_i and ball_count_Z must be >= 1")
        if not 0 < self.contact_angle_alpha < 90:
            raise ValidationError(
                f"contact angle must lie in (0, 90) deg, got {self.contact_angle_alpha}"
            )
        if not 0 < self.ball_diameter_Dr < self.raceway_center_diameter_dm:
            raise ValidationError(
                "ball diameter must be positive and smaller than the raceway "
                "center diameter"
            )


@dataclass(frozen=True)
class BearingLoads:
    radial_Fr: float  # N
    axial_Fa: float  # N
    moment_M: float  # N·m

    def __post_init__(self):
        for name in ("radial_Fr", "axial_Fa", "moment_M"):
            if getattr(self, name) < 0:
                raise ValidationError(f"{name} must be >= 0")


@dataclass(frozen=True)
class LifeModFactors:
    """Rating-life corrections: a1 reliability, a2 material, a3 lubrication,
    a4 supporting-structure flexibility."""

    a1: float
    a2: float
    a3: float
    a4: float

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4"):
            value = getattr(self, name)
            if not 0 < value <= 2:
                raise ValidationError(f"life factor {name}={value} outside (0, 2]")

    def product(self) -> float:
        return self.a1 * self.a2 * self.a3 * self.a4


def basic_dynamic_axial_rating(g: SlewingBearingGeometry) -> float:
    """C_a = f_cm * (i cos alpha)^0.7 * Z^(2/3) * D_r^1.8 * tan alpha."""
    alpha = math.radians(g.contact_angle_alpha)
    return (
        g.groove_factor_fcm
        * (g.rows_i * math.cos(alpha)) ** 0.7
        * g.ball_count_Z ** (2.0 / 3.0)
        * g.ball_diameter_Dr**1.8
        * math.tan(alpha)
    )


def oscillating_rating(ca: float, theta_deg: float, p: float = BALL_EXPONENT) -> float:
    """Rating uplift C_a * (180/theta)^(1/p) for a bearing dithering over
    an arc of half-amplitude theta instead of rotating."""
    if not 0 < theta_deg <= 180:
        raise ValidationError(
            f"oscillation half-arc must lie in (0, 180] deg, got {theta_deg}"
        )
    return ca * (180.0 / theta_deg) ** (1.0 / p)


def equivalent_axial_load(loads: BearingLoads, dm: float) -> float:
    """P_ea = 0.75 F_r + F_a + 2 M / d_m, with M and d_m in consistent units."""
    if not dm > 0:
        raise ValidationError(f"raceway center diameter must be positive, got {dm}")
    return 0.75 * loads.radial_Fr + loads.axial_Fa + 2.0 * loads.moment_M / dm


def l10_life(ca_osc: float, pea: float) -> float:
    """L10 = (C_a,osc / P_ea)³, a cycle count on the rating's oscillation basis."""
    if not pea > 0:
        raise ValidationError(f"equivalent load must be positive, got {pea}")
    return (ca_osc / pea) ** 3


def modified_life(l10: float, f: LifeModFactors) -> float:
    """Standard modified rating life L_nm = a1 a2 a3 a4 L10."""
    if l10 < 0:
        raise ValidationError(f"L10 must be >= 0, got {l10}")
    return f.product() * l10


def raceway_stress_cycles(lnm: float, ball_count_z: int) -> float:
    """Raceway stress cycles: each oscillation loads every ball once."""
    if ball_count_z < 1:
        raise ValidationError(f"ball count must be >= 1, got {ball_count_z}")
    return lnm * ball_count_z


def bearing_calendar_life(cycles: float, oscillations_per_day: float, basis: str) -> float:
    """Calendar years for a cycle count at a daily oscillation rate.

    basis records which count is being divided: "oscillations" (L_nm
    itself) or "raceway_cycles" (L_nm * Z). The two differ by the ball
    count; both are legitimate readings of a yaw-bearing life and neither
    is preferred here.
    """
    if basis not in (OSCILLATIONS, RACEWAY_CYCLES):
        raise ValidationError(
            f"basis must be '{OSCILLATIONS}' or '{RACEWAY_CYCLES}', got {basis!r}"
        )
    if not oscillations_per_day > 0:
        raise ValidationError("oscillation rate must be positive")
    return cycles / (oscillations_per_day * DAYS_PER_YEAR)


def life_summary(
    geometry: SlewingBearingGeometry,
    loads: BearingLoads,
    theta_deg: float,
    factors: LifeModFactors,
    oscillations_per_day: float,
    p: float = BALL_EXPONENT,
) -> dict:
    """Run the full pipeline; returns every intermediate plus both calendar
    bases. Moment loads are converted to N·mm to match d_m in mm."""
    ca = basic_dynamic_axial_rating(geometry)
    ca_osc = oscillating_rating(ca, theta_deg, p)
    loads_mm = BearingLoads(loads.radial_Fr, loads.axial_Fa, loads.moment_M * 1000.0)
    pea = equivalent_axial_load(loads_mm, geometry.raceway_center_diameter_dm)
    l10 = l10_life(ca_osc, pea)
    lnm = modified_life(l10, factors)
    raceway = raceway_stress_cycles(lnm, geometry.ball_count_Z)
    return {
        "basic_rating_Ca": ca,
        "oscillating_rating_Ca_osc": ca_osc,
        "equivalent_axial_load_Pea": pea,
        "l10_oscillations": l10,
        "modified_life_oscillations": lnm,
        "raceway_stress_cycles": raceway,
        "years_oscillation_basis": bearing_calendar_life(
            lnm, oscillations_per_day, OSCILLATIONS
        ),
        "years_raceway_basis": bearing_calendar_life(
            raceway, oscillations_per_day, RACEWAY_CYCLES
        ),
    }
