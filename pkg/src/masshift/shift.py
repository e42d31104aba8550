"""Distance-dependent self-energy of an electron in front of a surface.

The boundary-dependent part of the shift reduces to two wavenumber
integrals over reflection data at the zero-frequency point kz = i*k:

    g_par  = int_0^inf dk e^{-2kd} [ -2 r_te + i k r_tm' + r_tm (1 - 2kd) ]
    g_perp = int_0^inf dk e^{-2kd} [ i k r_tm' - r_tm (1 + 2kd) ]

with r_tm' = d r_tm / d kz at that point.  Closed forms exist for the
perfect mirror, the non-dispersive dielectric and the single-resonance
model; the plasma model reduces to mirror values plus two explicit
correction integrals.  The quadrature route below works for all
admissible models and is the cross-check for every closed form.
"""

from __future__ import annotations

import math

from scipy.integrate import quad

from .errors import (
    IllDefinedModelError,
    NonVanishingImaginaryPartError,
    ToleranceNotMetError,
    UnsupportedModelError,
)
from .fresnel import residue_data
from .materials import (
    DampedDrude,
    Lorentz,
    NonDispersive,
    PerfectMirror,
    Plasma,
)
from .types import Coupling, Geometry, GeometryFactors, MomentumMoments, ShiftResult

__all__ = [
    "geometry_factors_quadrature",
    "pm_closed",
    "nondisp_closed",
    "lorentz_closed",
    "lorentz_perp_chi",
    "plasma_delta",
    "plasma_factors",
    "energy_shift",
]

# Upper cut for the u = 2*k*d integration variable.  The integrand is
# exp(-u) times a low-order polynomial in u, so anything beyond this is
# far below every tolerance the interface accepts.
_U_CUT = 120.0


def _reject_ill_defined(model):
    if isinstance(model, DampedDrude):
        raise IllDefinedModelError(
            "no shift can be evaluated for the damped Drude model: its "
            "response has branch points at kz = +/- i*k_par, on top of "
            "the points the distance integrals sample")


def _check_tol(tol):
    if not (0.0 < tol <= 1e-3):
        raise ValueError(f"tolerance must lie in (0, 1e-3], got {tol}")


def geometry_factors_quadrature(model, geometry, tol=1e-10):
    """Evaluate g_par and g_perp by adaptive quadrature.

    Substituting u = 2*k*d maps both integrals onto exp(-u) times a
    smooth bracket built from the zero-frequency reflection data.  The
    brackets are real for every admissible model; their imaginary parts
    are carried along and checked pointwise as a sanity condition.
    """
    _reject_ill_defined(model)
    _check_tol(tol)
    d = geometry.d
    peak = [0.0]

    def bracket(u, which):
        k = u / (2.0 * d)
        rd = residue_data(model, k)
        ikd = 1j * k * rd.dr_tm_dkz
        if which == 0:
            val = -2.0 * rd.r_te + ikd + rd.r_tm * (1.0 - u)
        else:
            val = ikd - rd.r_tm * (1.0 + u)
        peak[0] = max(peak[0], abs(val.real))
        if abs(val.imag) > max(tol, 1e-12) * (abs(val) + peak[0]):
            raise NonVanishingImaginaryPartError(
                f"integrand developed an imaginary part {val.imag:.3e} at "
                f"k = {k:.6g} (bracket magnitude {abs(val):.3e})")
        return math.exp(-u) * val.real

    # points where the bracket changes character, to help the subdivider
    interior = []
    if isinstance(model, Plasma):
        interior.append(2.0 * model.omega_p * d)
    if isinstance(model, Lorentz):
        interior.extend([2.0 * model.omega_t * d, 2.0 * model.omega_p * d])
    pts = sorted({p for p in interior if 0.0 < p < _U_CUT}) or None

    vals = []
    errs = []
    for which in (0, 1):
        v, e = quad(bracket, 0.0, _U_CUT, args=(which,), epsabs=0.0,
                    epsrel=0.1 * tol, limit=300, points=pts)
        vals.append(v / (2.0 * d))
        errs.append(e / (2.0 * d))

    scale = 0.5 * (abs(vals[0]) + abs(vals[1]))
    rel = max(e / max(abs(v), 0.1 * scale) for v, e in zip(vals, errs))
    if rel > tol:
        raise ToleranceNotMetError(
            f"quadrature error estimate {rel:.3e} exceeds requested {tol:.3e}")
    return GeometryFactors(g_par=vals[0], g_perp=vals[1])


def pm_closed(d):
    """Perfect mirror: g_par = 1/d, g_perp = -1/d."""
    return GeometryFactors(g_par=1.0 / d, g_perp=-1.0 / d)


def nondisp_closed(n, d):
    """Non-dispersive dielectric with index n at distance d."""
    n2 = n * n
    return GeometryFactors(
        g_par=-n2 * (n2 - 1.0) / ((1.0 + n2) ** 2 * d),
        g_perp=-(2.0 * n2 * n2 - n2 - 1.0) / ((n2 + 1.0) ** 2 * d),
    )


def lorentz_closed(omega_p, omega_t, d):
    """Single-resonance dielectric, evaluated at z = -d.

    g_par  = wp^2/(wp^2+2wt^2)^2 * (1/z^3 + (wp^2 + wt^2)/z)
    g_perp = wp^2/(wp^2+2wt^2)^2 * (1/z^3 + (2wp^2 + 3wt^2)/z)
    """
    z = -d
    wp2 = omega_p * omega_p
    wt2 = omega_t * omega_t
    pre = wp2 / (wp2 + 2.0 * wt2) ** 2
    cube = 1.0 / z**3
    return GeometryFactors(
        g_par=pre * (cube + (wp2 + wt2) / z),
        g_perp=pre * (cube + (2.0 * wp2 + 3.0 * wt2) / z),
    )


def lorentz_perp_chi(chi0, omega_t, d):
    """Perpendicular factor in terms of the static susceptibility chi0.

    Algebraically identical to lorentz_closed with wp^2 = chi0 * wt^2;
    this parametrisation is what the ratio-curve analysis plots against.
    """
    z = -d
    wtz2 = (omega_t * z) ** 2
    return (chi0 / z) * (1.0 + wtz2 * (3.0 + 2.0 * chi0)) / (wtz2 * (2.0 + chi0) ** 2)


def plasma_delta(omega_p, d, tol=1e-10):
    """Corrections to the mirror factors for the plasma model.

    Returns (delta_par, delta_perp) where, with s(k) = sqrt(k^2 + wp^2),

        delta_perp = -(4/wp^2) int_0^inf k s(k) e^{-2kd} dk
        delta_par  = -(8/wp^2) int_0^inf k (s(k) - k/2) e^{-2kd} dk

    Both are negative and vanish in the mirror limit wp*d -> inf; for
    wp -> 0 they diverge, so the mirror is not recovered by switching
    the plasma response off.
    """
    _check_tol(tol)
    wp2 = omega_p * omega_p

    def integrand(u, half):
        k = u / (2.0 * d)
        s = math.sqrt(k * k + wp2)
        if half:
            s -= 0.5 * k
        return k * s * math.exp(-u)

    perp, e_perp = quad(integrand, 0.0, _U_CUT, args=(False,), epsabs=0.0,
                        epsrel=0.1 * tol, limit=300)
    par, e_par = quad(integrand, 0.0, _U_CUT, args=(True,), epsabs=0.0,
                      epsrel=0.1 * tol, limit=300)
    scale = 1.0 / (2.0 * d)
    d_perp = -4.0 / wp2 * perp * scale
    d_par = -8.0 / wp2 * par * scale
    rel = max(e_perp / max(perp, 1e-300), e_par / max(par, 1e-300))
    if rel > tol:
        raise ToleranceNotMetError(
            f"correction quadrature error {rel:.3e} exceeds requested {tol:.3e}")
    return d_par, d_perp


def plasma_factors(omega_p, d, tol=1e-10):
    """Mirror factors plus the plasma corrections."""
    d_par, d_perp = plasma_delta(omega_p, d, tol)
    base = pm_closed(d)
    return GeometryFactors(g_par=base.g_par + d_par, g_perp=base.g_perp + d_perp)


def _closed_factors(model, geometry):
    if isinstance(model, PerfectMirror):
        return pm_closed(geometry.d)
    if isinstance(model, NonDispersive):
        return nondisp_closed(model.n, geometry.d)
    if isinstance(model, Lorentz):
        return lorentz_closed(model.omega_p, model.omega_t, geometry.d)
    raise UnsupportedModelError(
        f"no closed form is available for {type(model).__name__}")


def energy_shift(model, geometry, moments=None, coupling=None, tol=1e-10,
                 method="auto"):
    """Boundary-dependent energy shift for one configuration.

    method selects the evaluation route: "closed" (mirror,
    non-dispersive, single-resonance), "pm_plus_corrections" (plasma),
    "quadrature" (any admissible model), or "auto" which picks the
    cheapest exact route for the model.
    """
    _reject_ill_defined(model)
    _check_tol(tol)
    moments = moments or MomentumMoments()
    coupling = coupling or Coupling()

    if method == "auto":
        method = "pm_plus_corrections" if isinstance(model, Plasma) else "closed"

    if method == "closed":
        factors = _closed_factors(model, geometry)
        est = 0.0
    elif method == "pm_plus_corrections":
        if not isinstance(model, Plasma):
            raise UnsupportedModelError(
                "mirror-plus-corrections applies to the plasma model only")
        factors = plasma_factors(model.omega_p, geometry.d, tol)
        est = tol
    elif method == "quadrature":
        factors = geometry_factors_quadrature(model, geometry, tol)
        est = tol
    else:
        raise ValueError(f"unknown method {method!r}")

    mirror = pm_closed(geometry.d)
    pre = coupling.e2 / (math.pi * coupling.mass**2)
    delta_e = (pre / 32.0 * moments.p2_par * factors.g_par
               + pre / 16.0 * moments.p2_perp * factors.g_perp)
    return ShiftResult(
        delta_e=delta_e,
        g_par=factors.g_par,
        g_perp=factors.g_perp,
        ratio_par=factors.g_par / mirror.g_par,
        ratio_perp=factors.g_perp / mirror.g_perp,
        method=method,
        est_error=est,
    )
