"""Ratio curves and limit studies built on the closed-form factors.

Everything here is phrased in terms of the shift relative to a perfect
mirror at the same distance, which removes the overall 1/d scale and
leaves dimensionless curves.  Two dimensionless knobs remain: the
static susceptibility chi0 = eps(0) - 1 and the resonance scale
omega_t * d.  The perpendicular ratio develops a peak in chi0 when the
resonance is slow on the scale of the distance, and the peak escapes
to infinity at a critical omega_t * d; locating that peak and that
threshold is the job of this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .shift import plasma_delta

__all__ = [
    "RatioCurve",
    "PeakReport",
    "LimitReport",
    "mirror_ratio_nondisp",
    "mirror_ratio_lorentz",
    "ratio_curve_chi0",
    "plasma_mirror_ratios",
    "lorentz_mirror_ratios_vs_omega_p",
    "find_peak",
    "critical_threshold",
    "limit_noncommutation_report",
]


def mirror_ratio_nondisp(chi0):
    """(ratio_par, ratio_perp) for the non-dispersive medium.

    chi0 = n^2 - 1 may be a scalar or an array.  The parallel ratio is
    negative (the non-dispersive shift has the opposite sign to the
    mirror's) and tends to -1 as chi0 grows; the perpendicular one
    tends to 2.
    """
    chi0 = np.asarray(chi0, dtype=float)
    den = (2.0 + chi0) ** 2
    r_par = -(1.0 + chi0) * chi0 / den
    r_perp = chi0 * (3.0 + 2.0 * chi0) / den
    return r_par, r_perp


def mirror_ratio_lorentz(chi0, omega_t_d):
    """(ratio_par, ratio_perp) for the resonant medium.

    Parametrised by the static susceptibility chi0 = (omega_p/omega_t)^2
    and the dimensionless resonance scale omega_t * d.  For
    omega_t * d -> infinity at fixed chi0 these approach the
    non-dispersive curves; for omega_t * d -> 0 they blow up as
    1/(omega_t d)^2, which is the source of the peak structure.
    """
    chi0 = np.asarray(chi0, dtype=float)
    a = omega_t_d * omega_t_d
    den = a * (2.0 + chi0) ** 2
    r_par = -chi0 * (1.0 + a * (1.0 + chi0)) / den
    r_perp = chi0 * (1.0 + a * (3.0 + 2.0 * chi0)) / den
    return r_par, r_perp


@dataclass(frozen=True)
class RatioCurve:
    """Shift-over-mirror ratios sampled on a chi0 grid."""

    chi0: np.ndarray
    omega_t_d: float
    nondisp_par: np.ndarray
    nondisp_perp: np.ndarray
    lorentz_par: np.ndarray
    lorentz_perp: np.ndarray


def ratio_curve_chi0(omega_t_d, chi0_grid):
    """Sample both media against the mirror over a chi0 grid."""
    chi0 = np.asarray(chi0_grid, dtype=float)
    if np.any(chi0 <= 0.0):
        raise ValueError("chi0 grid must be positive")
    nd_par, nd_perp = mirror_ratio_nondisp(chi0)
    lz_par, lz_perp = mirror_ratio_lorentz(chi0, omega_t_d)
    return RatioCurve(chi0=chi0, omega_t_d=omega_t_d,
                      nondisp_par=nd_par, nondisp_perp=nd_perp,
                      lorentz_par=lz_par, lorentz_perp=lz_perp)


def plasma_mirror_ratios(omega_p_d, tol=1e-10):
    """(ratio_par, ratio_perp) for the plasma as arrays over omega_p * d.

    Computed as mirror-plus-correction at unit distance; the ratios
    depend on omega_p and d only through the product.
    """
    grid = np.atleast_1d(np.asarray(omega_p_d, dtype=float))
    r_par = np.empty_like(grid)
    r_perp = np.empty_like(grid)
    for i, wpd in enumerate(grid):
        d_par, d_perp = plasma_delta(wpd, 1.0, tol=tol)
        r_par[i] = 1.0 + d_par
        r_perp[i] = 1.0 - d_perp
    return r_par, r_perp


def lorentz_mirror_ratios_vs_omega_p(omega_p_d, omega_t_d):
    """Resonant-medium ratios over an omega_p * d grid at fixed omega_t * d."""
    grid = np.asarray(omega_p_d, dtype=float)
    chi0 = (grid / omega_t_d) ** 2
    return mirror_ratio_lorentz(chi0, omega_t_d)


@dataclass(frozen=True)
class PeakReport:
    """Result of searching the perpendicular ratio for an interior peak."""

    exists: bool
    omega_t_d: float
    chi0_star: float | None = None
    height: float | None = None


def _perp_ratio(log_chi0, a):
    chi0 = math.exp(log_chi0)
    return chi0 * (1.0 + a * (3.0 + 2.0 * chi0)) / (a * (2.0 + chi0) ** 2)


def find_peak(omega_t_d, bounds=(1e-3, 1e6)):
    """Locate the interior maximum of the perpendicular ratio in chi0.

    Scans a log grid over bounds; if the maximum sits in the interior
    it is refined by golden-section search in log chi0.  If the curve
    is still rising at the upper bound there is no interior peak (the
    ratio then climbs monotonically to its large-chi0 limit) and the
    report comes back with exists=False.
    """
    if not omega_t_d > 0.0:
        raise ValueError("omega_t_d must be positive")
    lo, hi = bounds
    if not 0.0 < lo < hi:
        raise ValueError(f"bad bounds {bounds}")
    a = omega_t_d * omega_t_d
    grid = np.linspace(math.log(lo), math.log(hi), 512)
    chi0 = np.exp(grid)
    vals = chi0 * (1.0 + a * (3.0 + 2.0 * chi0)) / (a * (2.0 + chi0) ** 2)
    i = int(np.argmax(vals))
    if i >= grid.size - 2:
        return PeakReport(exists=False, omega_t_d=omega_t_d)
    if i == 0:
        raise ValueError("ratio decreasing from the lower bound on; widen bounds")

    # Golden-section maximisation on [grid[i-1], grid[i+1]].
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    xa, xb = grid[i - 1], grid[i + 1]
    xc = xb - inv_phi * (xb - xa)
    xd = xa + inv_phi * (xb - xa)
    fc, fd = _perp_ratio(xc, a), _perp_ratio(xd, a)
    while xb - xa > 1e-12:
        if fc > fd:
            xb, xd, fd = xd, xc, fc
            xc = xb - inv_phi * (xb - xa)
            fc = _perp_ratio(xc, a)
        else:
            xa, xc, fc = xc, xd, fd
            xd = xa + inv_phi * (xb - xa)
            fd = _perp_ratio(xd, a)
    x_star = 0.5 * (xa + xb)
    return PeakReport(exists=True, omega_t_d=omega_t_d,
                      chi0_star=math.exp(x_star),
                      height=_perp_ratio(x_star, a))


def critical_threshold(tol=1e-6):
    """The omega_t * d above which the perpendicular peak disappears.

    Bisection on peak existence; the peak position diverges on
    approach, so the existence check uses a wide chi0 window.
    """
    if not 0.0 < tol <= 1e-2:
        raise ValueError(f"tol must lie in (0, 1e-2], got {tol}")
    wide = (1e-2, 1e9)
    lo, hi = 0.3, 0.6
    if not find_peak(lo, bounds=wide).exists:
        raise RuntimeError("expected a peak at omega_t_d = 0.3")
    if find_peak(hi, bounds=wide).exists:
        raise RuntimeError("expected no peak at omega_t_d = 0.6")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if find_peak(mid, bounds=wide).exists:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class LimitReport:
    """Numbers behind the statement that the static and mirror limits clash.

    Taking eps -> infinity first (a mirror) and taking the static
    response of a strong dielectric do not agree: the non-dispersive
    ratios saturate at (-1, 2) rather than (1, 1), the resonant medium
    detaches from the plasma as its resonance slows even though both
    share eps(0) = infinity in that corner, and the plasma's own
    mirror corrections grow without bound as omega_p * d shrinks.
    """

    nondisp_n: tuple = ()
    nondisp_ratio_par: tuple = ()
    nondisp_ratio_perp: tuple = ()
    lorentz_omega_t_d: tuple = ()
    lorentz_ratio_perp: tuple = ()
    plasma_ratio_perp_at_unit: float = 0.0
    plasma_omega_p_d: tuple = ()
    plasma_abs_d_perp: tuple = ()
    notes: tuple = field(default=())


def limit_noncommutation_report():
    """Collect the standard demonstration of limit non-commutation."""
    n_values = (10.0, 1e2, 1e3, 1e4)
    chi0 = np.array([n * n - 1.0 for n in n_values])
    nd_par, nd_perp = mirror_ratio_nondisp(chi0)

    wtd_values = (1e-1, 1e-2, 1e-3)
    lz_perp = []
    for wtd in wtd_values:
        chi = 1.0 / (wtd * wtd)
        _, rp = mirror_ratio_lorentz(np.array([chi]), wtd)
        lz_perp.append(float(rp[0]))
    _, plasma_perp = plasma_mirror_ratios(np.array([1.0]))

    wpd_values = (1.0, 0.1, 0.01)
    abs_dperp = []
    for wpd in wpd_values:
        _, d_perp = plasma_delta(wpd, 1.0)
        abs_dperp.append(abs(d_perp))

    notes = (
        "nondisp ratios tend to (-1, 2), not the mirror's (1, 1)",
        "lorentz at omega_p*d = 1 departs from the plasma as omega_t*d -> 0",
        "plasma mirror corrections grow as omega_p*d -> 0",
    )
    return LimitReport(
        nondisp_n=n_values,
        nondisp_ratio_par=tuple(float(v) for v in nd_par),
        nondisp_ratio_perp=tuple(float(v) for v in nd_perp),
        lorentz_omega_t_d=wtd_values,
        lorentz_ratio_perp=tuple(lz_perp),
        plasma_ratio_perp_at_unit=float(plasma_perp[0]),
        plasma_omega_p_d=wpd_values,
        plasma_abs_d_perp=tuple(abs_dperp),
        notes=notes,
    )
