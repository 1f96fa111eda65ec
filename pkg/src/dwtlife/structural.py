"""Ballast sizing, secant column mechanics, and blade section stresses.

The column relations are the classic eccentric-compression set: midspan
deflection delta = e*(sec(sqrt(P/EI)*l/2) - 1) and the implicit allowable
load P/A = S_yc / (1 + (ec/k²) sec((l/2k) sqrt(P/AE))), solved here by
bisection below the elastic stability bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BucklingError, NumericError, ValidationError
from .model import ColumnSpec, Material, RectSection
from .units import GRAVITY

FLAT = "flat"  # bending about the wide axis: I = b t³/12, y = t/2
UPRIGHT = "upright"  # bending about the narrow axis: I = t b³/12, y = b/2


@dataclass(frozen=True)
class BallastSpec:
    """Gravity-base ballast parameters for the tower moment balance."""

    turbine_thrust: float  # N
    nacelle_diameter: float  # m
    safety_factor: float
    base_diameter: float  # m
    base_area: float  # m²
    ballast_mass_density: float  # kg/m³

    def __post_init__(self):
        for name in (
            "turbine_thrust",
            "nacelle_diameter",
            "base_diameter",
            "base_area",
            "ballast_mass_density",
        ):
            if not getattr(self, name) > 0:
                raise ValidationError(f"{name} must be positive")
        if self.safety_factor < 1:
            raise ValidationError(
                f"safety_factor must be >= 1, got {self.safety_factor}"
            )


@dataclass(frozen=True)
class BladeSpec:
    """Blade idealized as a rectangular cantilever mounted at angle phi."""

    section: RectSection
    material: Material
    mount_angle_phi: float  # deg, in [0, 90]
    mass: float  # kg

    def __post_init__(self):
        if not self.mass > 0:
            raise ValidationError(f"blade mass must be positive, got {self.mass}")
        if not 0 <= self.mount_angle_phi <= 90:
            raise ValidationError(
                f"mount_angle_phi must be in [0, 90] deg, got {self.mount_angle_phi}"
            )


def ballast_required_weight(spec: BallastSpec) -> float:
    """Ballast weight (N) balancing the turbine tipping moment with margin."""
    return (
        spec.turbine_thrust
        * spec.nacelle_diameter
        * spec.safety_factor
        / spec.base_diameter
    )


def ballast_height_for_weight(weight: float, spec: BallastSpec) -> float:
    """Fill height (m) of ballast material providing the given weight.

    Linear in the weight: h = W / (rho * g * A_base).
    """
    if not weight > 0:
        raise ValidationError(f"weight must be positive, got {weight}")
    return weight / (spec.ballast_mass_density * GRAVITY * spec.base_area)


def _secant_argument(load: float, col: ColumnSpec, elastic_modulus: float) -> float:
    return math.sqrt(load / (elastic_modulus * col.moment_I)) * col.height_l / 2.0


def secant_deflection(col: ColumnSpec, elastic_modulus: float) -> float:
    """Midspan deflection of a pinned eccentric column.

    Raises BucklingError once sqrt(P/EI)*l/2 reaches pi/2, where the secant
    diverges.
    """
    if col.eccentricity_e == 0:
        return 0.0
    arg = _secant_argument(col.load_P, col, elastic_modulus)
    if arg >= math.pi / 2:
        raise BucklingError(
            f"load {col.load_P} N is at or beyond the elastic buckling bound "
            f"(secant argument {arg:.4f} >= pi/2)"
        )
    return col.eccentricity_e * (1.0 / math.cos(arg) - 1.0)


def secant_allowable_load(col: ColumnSpec, material: Material) -> float:
    """Largest axial load (N) at which the extreme-fiber stress reaches S_yc.

    Solves the implicit secant-column equation for P by bisection on
    (0, P_buckle) to 1e-9 relative tolerance. With zero eccentricity ratio
    the equation degenerates to P = A * S_yc.
    """
    if material.yield_strength_compressive is None:
        raise ValidationError(f"{material.name}: compressive yield strength required")
    if material.elastic_modulus is None:
        raise ValidationError(f"{material.name}: elastic modulus required")
    s_yc = material.yield_strength_compressive
    modulus = material.elastic_modulus
    ratio = col.eccentricity_ratio
    if ratio == 0:
        return col.area_A * s_yc

    # Secant argument (l/2k)*sqrt(P/AE) reaches pi/2 at the Euler load.
    p_buckle = col.area_A * modulus * (math.pi * col.gyration_k / col.height_l) ** 2

    def residual(load: float) -> float:
        arg = (col.height_l / (2 * col.gyration_k)) * math.sqrt(
            load / (col.area_A * modulus)
        )
        return load / col.area_A * (1 + ratio / math.cos(arg)) - s_yc

    lo = p_buckle * 1e-15
    hi = p_buckle * (1 - 1e-12)
    if residual(lo) >= 0 or residual(hi) <= 0:
        raise NumericError(
            "column unstable: no yield-limited load below the buckling bound"
        )
    while (hi - lo) > 1e-9 * hi:
        mid = 0.5 * (lo + hi)
        if residual(mid) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def blade_root_bending_moment(blade: BladeSpec) -> float:
    """Root bending moment (N·m) from blade self-weight.

    The distributed weight resolves to m*g acting at mid-span of the
    cantilever, so M = m * g * L/2.
    """
    return blade.mass * GRAVITY * blade.section.span_L / 2.0


def rect_bending_stress(moment: float, s: RectSection, orientation: str) -> float:
    """Extreme-fiber bending stress y*M/I for a rectangular section.

    orientation "flat" bends about the wide (b) axis, "upright" about the
    narrow (t) axis.
    """
    if moment < 0:
        raise ValidationError(f"moment must be >= 0, got {moment}")
    if orientation == FLAT:
        inertia = s.width_b * s.thickness_t**3 / 12.0
        y = s.thickness_t / 2.0
    elif orientation == UPRIGHT:
        inertia = s.thickness_t * s.width_b**3 / 12.0
        y = s.width_b / 2.0
    else:
        raise ValidationError(f"orientation must be 'flat' or 'upright', got {orientation!r}")
    return y * moment / inertia


def rect_torsion_max_shear(torque: float, s: RectSection) -> float:
    """Peak torsional shear of a thin rectangle: T*(3 + 1.8 t/b)/(b t²).

    Consistent SI units throughout (torque N·m, section m, result Pa).
    """
    if torque < 0:
        raise ValidationError(f"torque must be >= 0, got {torque}")
    b, t = s.width_b, s.thickness_t
    return torque * (3.0 + 1.8 * t / b) / (b * t**2)
