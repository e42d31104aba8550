"""Electron self-energy shift near dielectric and conducting half-spaces.

The shift of a slow electron held at distance d in front of a planar
surface is written as two geometry factors, one per momentum direction,
times universal prefactors.  This package evaluates those factors for a
perfect mirror, a non-dispersive dielectric, an undamped plasma and a
single-resonance dielectric, by three mutually checking routes: closed
forms, adaptive quadrature of the underlying reflection-coefficient
integrals, and (for the non-dispersive case) a brute-force summation
over interface modes.  Natural units throughout: hbar = c = eps0 = 1.
"""

__version__ = "0.1.0"

from .errors import (
    BranchAmbiguityError,
    EvanescentBranchError,
    IllDefinedModelError,
    MasshiftError,
    NonVanishingImaginaryPartError,
    NotEvanescentError,
    OscillatoryDivergenceError,
    PoleAtFrequencyError,
    SingularDenominatorError,
    SingularPointError,
    ToleranceNotMetError,
    UnsupportedModelError,
)
from .materials import (
    DampedDrude,
    DielectricModel,
    Lorentz,
    ModeBasisClass,
    NonDispersive,
    PerfectMirror,
    Plasma,
    classify,
    epsilon_at_kz,
    epsilon_at_omega,
    model_from_params,
    model_param_names,
    static_susceptibility,
)
from .types import Coupling, Geometry, GeometryFactors, MomentumMoments, ShiftResult
from .dual import Dual, derivative
from .fresnel import (
    ResidueData,
    WaveVectors,
    kz_medium,
    r_te,
    r_tm,
    residue_data,
    transmission_right,
    wave_vectors,
)
from .shift import (
    energy_shift,
    geometry_factors_quadrature,
    lorentz_closed,
    lorentz_perp_chi,
    nondisp_closed,
    plasma_delta,
    plasma_factors,
    pm_closed,
)
from .modesum import ModeSpec, PolarizationBasis, boundary_intensity, boundary_mode_sum
from .analysis import (
    LimitReport,
    PeakReport,
    RatioCurve,
    critical_threshold,
    find_peak,
    limit_noncommutation_report,
    mirror_ratio_lorentz,
    mirror_ratio_nondisp,
    plasma_mirror_ratios,
    ratio_curve_chi0,
)

__all__ = [
    "__version__",
    "MasshiftError",
    "UnsupportedModelError",
    "PoleAtFrequencyError",
    "SingularPointError",
    "BranchAmbiguityError",
    "SingularDenominatorError",
    "IllDefinedModelError",
    "ToleranceNotMetError",
    "NonVanishingImaginaryPartError",
    "EvanescentBranchError",
    "NotEvanescentError",
    "OscillatoryDivergenceError",
    "DielectricModel",
    "PerfectMirror",
    "NonDispersive",
    "Plasma",
    "Lorentz",
    "DampedDrude",
    "ModeBasisClass",
    "classify",
    "epsilon_at_omega",
    "epsilon_at_kz",
    "static_susceptibility",
    "model_param_names",
    "model_from_params",
    "Geometry",
    "MomentumMoments",
    "Coupling",
    "GeometryFactors",
    "ShiftResult",
    "Dual",
    "derivative",
    "WaveVectors",
    "ResidueData",
    "kz_medium",
    "wave_vectors",
    "r_te",
    "r_tm",
    "transmission_right",
    "residue_data",
    "geometry_factors_quadrature",
    "pm_closed",
    "nondisp_closed",
    "lorentz_closed",
    "lorentz_perp_chi",
    "plasma_delta",
    "plasma_factors",
    "energy_shift",
    "PolarizationBasis",
    "ModeSpec",
    "boundary_intensity",
    "boundary_mode_sum",
    "RatioCurve",
    "PeakReport",
    "LimitReport",
    "mirror_ratio_nondisp",
    "mirror_ratio_lorentz",
    "ratio_curve_chi0",
    "plasma_mirror_ratios",
    "find_peak",
    "critical_threshold",
    "limit_noncommutation_report",
]
