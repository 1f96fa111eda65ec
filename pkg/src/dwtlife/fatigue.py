"""Marin-modified endurance limits and S-N finite-life estimation.

The high-cycle life model is the power law sigma = a * N**b fitted between
the 10³-cycle strength f*S_ut and the modified endurance limit S_e at 10⁶
cycles, which gives

    a = (f*S_ut)² / S_e
    b = -(1/3) * log10(f*S_ut / S_e)
    N = (sigma / a)**(1/b)

All stresses are in Pa and refer to fully reversed loading.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError
from .model import Material

DAYS_PER_YEAR = 365.0


@dataclass(frozen=True)
class MarinFactors:
    """Multiplicative endurance-limit corrections.

    ka surface, kb size, kc load, kd temperature, ke reliability,
    kf miscellaneous. Each must lie in (0, 1.5].
    """

    ka: float
    kb: float
    kc: float
    kd: float
    ke: float
    kf: float

    def __post_init__(self):
        for name in ("ka", "kb", "kc", "kd", "ke", "kf"):
            value = getattr(self, name)
            if not 0 < value <= 1.5:
                raise ValidationError(f"Marin factor {name}={value} outside (0, 1.5]")

    def product(self) -> float:
        return self.ka * self.kb * self.kc * self.kd * self.ke * self.kf


@dataclass(frozen=True)
class SnConstants:
    """Fitted S-N curve sigma = a * N**b with fatigue strength fraction f."""

    a: float  # Pa
    b: float  # dimensionless, negative
    f: float  # fatigue strength fraction in (0, 1]

    def __post_init__(self):
        if not self.a > 0:
            raise ValidationError(f"S-N intercept a must be positive, got {self.a}")
        if not self.b < 0:
            raise ValidationError(f"S-N exponent b must be negative, got {self.b}")
        if not 0 < self.f <= 1:
            raise ValidationError(f"fatigue strength fraction f={self.f} outside (0, 1]")

    @property
    def low_cycle_stress(self) -> float:
        """f*S_ut recovered from the fit: a * 10**(3b)."""
        return self.a * 10 ** (3 * self.b)

    @property
    def endurance_stress(self) -> float:
        """S_e recovered from the fit: a * 10**(6b)."""
        return self.a * 10 ** (6 * self.b)


@dataclass(frozen=True)
class CycleLife:
    """Cycle count plus advisory validity flags for the S-N evaluation."""

    cycles: float
    flags: tuple[str, ...] = ()

    def __float__(self) -> float:
        return self.cycles


def endurance_limit_unmodified(material: Material) -> float:
    """Unmodified endurance limit: half the ultimate tensile strength."""
    return 0.5 * material.ultimate_tensile_strength


def marin_modified_endurance(se_prime: float, k: MarinFactors) -> float:
    """Apply the six Marin corrections to an unmodified endurance limit."""
    if not se_prime > 0:
        raise ValidationError(f"endurance limit must be positive, got {se_prime}")
    return k.product() * se_prime


def sn_constants(s_ut: float, s_e: float, f: float = 0.9) -> SnConstants:
    """Fit the finite-life constants a, b from S_ut, S_e, and f.

    Requires f*S_ut > S_e > 0, otherwise the log10 slope is undefined.
    """
    if not s_e > 0:
        raise ValidationError(f"endurance limit must be positive, got {s_e}")
    if not f * s_ut > s_e:
        raise ValidationError(
            f"f*S_ut = {f * s_ut} must exceed S_e = {s_e} for a finite-life fit"
        )
    a = (f * s_ut) ** 2 / s_e
    b = -math.log10(f * s_ut / s_e) / 3.0
    return SnConstants(a=a, b=b, f=f)


def cycles_to_failure(sigma_rev: float, c: SnConstants) -> CycleLife:
    """Cycles to failure N = (sigma/a)**(1/b) for a fully reversed stress.

    Stresses below the endurance limit are still evaluated (aluminum has no
    endurance knee) but the result is flagged "below_endurance_extrapolation";
    stresses above f*S_ut are flagged "low_cycle".
    """
    if not sigma_rev > 0:
        raise ValidationError(f"stress must be positive, got {sigma_rev}")
    cycles = (sigma_rev / c.a) ** (1.0 / c.b)
    flags = []
    if sigma_rev < c.endurance_stress:
        flags.append("below_endurance_extrapolation")
    if sigma_rev > c.low_cycle_stress:
        flags.append("low_cycle")
    return CycleLife(cycles=cycles, flags=tuple(flags))


def cycles_to_calendar(n_cycles: float, cycles_per_day: float) -> float:
    """Convert a cycle count to years at a constant daily usage rate."""
    if not cycles_per_day > 0:
        raise ValidationError(f"cycles_per_day must be positive, got {cycles_per_day}")
    return n_cycles / (cycles_per_day * DAYS_PER_YEAR)
