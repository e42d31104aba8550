"""Plain value types shared across the package."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Geometry",
    "MomentumMoments",
    "Coupling",
    "GeometryFactors",
    "ShiftResult",
]


@dataclass(frozen=True)
class Geometry:
    """Electron at distance d > 0 in front of the surface (at z = -d)."""

    d: float

    def __post_init__(self):
        if not (self.d > 0.0 and math.isfinite(self.d)):
            raise ValueError(f"distance must be positive, got {self.d}")

    @property
    def z(self):
        return -self.d


@dataclass(frozen=True)
class MomentumMoments:
    """Second moments of the electron momentum.

    p2_par is the full in-plane moment <p_x^2 + p_y^2>, assumed
    isotropic in the plane; p2_perp is <p_z^2>.
    """

    p2_par: float = 1.0
    p2_perp: float = 1.0

    def __post_init__(self):
        if self.p2_par < 0.0 or self.p2_perp < 0.0:
            raise ValueError("momentum second moments cannot be negative")


@dataclass(frozen=True)
class Coupling:
    """Squared charge and mass entering the shift prefactors."""

    e2: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if not (self.e2 > 0.0 and self.mass > 0.0):
            raise ValueError("coupling constants must be positive")


@dataclass(frozen=True)
class GeometryFactors:
    """Distance-dependent factors multiplying the momentum moments.

    The energy shift is assembled as

        delta_e = e2 * p2_par / (32 pi m^2) * g_par
                + e2 * p2_perp / (16 pi m^2) * g_perp

    so both factors carry dimension 1/length.
    """

    g_par: float
    g_perp: float


@dataclass(frozen=True)
class ShiftResult:
    """Full output of one shift evaluation."""

    delta_e: float
    g_par: float
    g_perp: float
    ratio_par: float
    ratio_perp: float
    method: str
    est_error: float
