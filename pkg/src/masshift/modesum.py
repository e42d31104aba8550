"""Independent cross-check of the shift via an explicit mode summation.

For the non-dispersive dielectric a complete set of interface modes is
known in closed form, so the boundary-dependent part of the shift can
be assembled directly: sum the photon modes, keep the pieces that know
about the surface, and integrate.  Per polarisation and per Cartesian
component the boundary part of the squared mode amplitude at depth
z < 0 is

  left modes   2 Re[ r (e(kbar).x_i) (e(k).x_i)* exp(-2 i kz z) ]
  right modes  (1/n^2) |t|^2 |e(k).x_i|^2 exp(2 kappa z)   (evanescent)

where kbar is the reflected wavevector and the right-incidence channel
contributes only through modes whose transmitted vacuum wave is
evanescent; traveling right modes reproduce free space and drop out.
The geometry factors follow as

  g = -(2/pi) int dk_par k_par [ int dkz (..)/omega^2 + int dkz_d (..)/omega^2 ]

in the same normalisation as the shift engine.  Everything here is
deliberately self-contained: the reflection and transmission
coefficients are re-derived from tangential field continuity, and no
code from the residue-based route is imported, so agreement between
the two is a genuine check and not a shared convention.

The kz integral oscillates as cos(2 d kz) without decay in the
coefficient part, so it is done with panel-wise Filon quadrature on a
geometric panel sequence up to kz = 40/d, plus an integration-by-parts
estimate of the remaining tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import (
    IllDefinedModelError,
    NotEvanescentError,
    OscillatoryDivergenceError,
    UnsupportedModelError,
)
from .materials import DampedDrude, NonDispersive
from .types import GeometryFactors

__all__ = [
    "PolarizationBasis",
    "ModeSpec",
    "left_coefficients",
    "right_coefficients",
    "boundary_intensity",
    "boundary_mode_sum",
]


class PolarizationBasis:
    """Explicit polarisation vectors in the plane-of-incidence frame.

    The parallel wavevector is taken along x, the surface normal along
    z.  TE is perpendicular to the plane of incidence; TM lies in it
    and is transverse to the wavevector.  For complex kz (evanescent
    waves) the TM vector is the analytic continuation, normalised by
    the frequency rather than by its own length.
    """

    @staticmethod
    def wavevector(k_par, kz):
        return np.array([k_par, 0.0, kz], dtype=complex)

    @staticmethod
    def te(k_par, kz):
        return np.array([0.0, -1.0, 0.0], dtype=complex)

    @staticmethod
    def tm(k_par, kz, omega):
        return np.array([kz, 0.0, -k_par], dtype=complex) / omega


@dataclass(frozen=True)
class ModeSpec:
    """One interface mode.

    incidence is "left" (from vacuum, k_normal = kz > 0) or "right"
    (from the medium, k_normal = kz_d < 0); polarization is "te" or
    "tm".
    """

    incidence: str
    polarization: str
    k_par: float
    k_normal: float

    def __post_init__(self):
        if self.incidence not in ("left", "right"):
            raise ValueError(f"incidence must be left or right, got {self.incidence!r}")
        if self.polarization not in ("te", "tm"):
            raise ValueError(f"polarization must be te or tm, got {self.polarization!r}")
        if not self.k_par > 0.0:
            raise ValueError("k_par must be positive")
        if self.incidence == "left" and not self.k_normal > 0.0:
            raise ValueError("left incidence needs kz > 0")
        if self.incidence == "right" and not self.k_normal < 0.0:
            raise ValueError("right incidence needs kz_d < 0")

    def is_evanescent(self, n):
        """Whether the transmitted vacuum wave of a right mode decays."""
        if self.incidence != "right":
            return False
        return self.k_normal**2 < (n * n - 1.0) * self.k_par**2


def left_coefficients(n, k_par, kz):
    """(r_te, r_tm) for vacuum-side incidence, from tangential continuity.

    Accepts scalars or numpy arrays.  Inside the medium
    kz_d = sqrt(n^2 (kz^2 + k_par^2) - k_par^2), which is real and
    positive for every propagating vacuum wave.
    """
    w2 = kz * kz + k_par * k_par
    kzd = np.sqrt(n * n * w2 - k_par * k_par)
    return (kz - kzd) / (kz + kzd), (n * n * kz - kzd) / (n * n * kz + kzd)


def left_transmission(n, k_par, kz):
    """(t_te, t_tm) companions of left_coefficients."""
    rte, rtm = left_coefficients(n, k_par, kz)
    return 1.0 + rte, (1.0 + rtm) / n


def right_coefficients(n, k_par, kz_d):
    """(t_te, t_tm, r_te, r_tm) for incidence from inside the medium.

    kz_d < 0 (toward the interface).  The transmitted vacuum wave has
    kz = -sqrt(omega^2 - k_par^2) when traveling and kz = -i*kappa when
    omega < k_par, the branch that decays away from the surface.
    Accepts scalars or numpy arrays.
    """
    kz_d = np.asarray(kz_d, dtype=float)
    gap = (n * n - 1.0) * k_par * k_par - kz_d * kz_d
    kz = np.where(gap > 0.0,
                  -1j * np.sqrt(np.maximum(gap, 0.0)) / n,
                  -np.sqrt(np.maximum(-gap, 0.0)) / n + 0.0j)
    den_te = kz_d + kz
    den_tm = kz_d + n * n * kz
    t_te = 2.0 * kz_d / den_te
    r_te = (kz_d - kz) / den_te
    t_tm = 2.0 * n * kz_d / den_tm
    r_tm = (kz_d - n * n * kz) / den_tm
    if kz_d.ndim == 0:
        return complex(t_te), complex(t_tm), complex(r_te), complex(r_tm)
    return t_te, t_tm, r_te, r_tm


def boundary_intensity(n, mode, z):
    """Boundary-dependent part of the squared mode amplitude at depth z.

    Returns (i_par, i_perp): the in-plane components summed over x and
    y, and the z component, both stripped of the overall mode
    normalisation (a factor 1/((2 pi)^3 2 omega)).  For right modes the
    transmitted wave must be evanescent; traveling right modes carry no
    boundary dependence on the vacuum side and raise NotEvanescentError.
    """
    if not z < 0.0:
        raise ValueError("the observation point must sit on the vacuum side, z < 0")
    basis = PolarizationBasis
    k_par = mode.k_par
    if mode.incidence == "left":
        kz = mode.k_normal
        omega = math.hypot(k_par, kz)
        rte, rtm = left_coefficients(n, k_par, kz)
        if mode.polarization == "te":
            r = rte
            e_inc = basis.te(k_par, kz)
            e_ref = basis.te(k_par, -kz)
        else:
            r = rtm
            e_inc = basis.tm(k_par, kz, omega)
            e_ref = basis.tm(k_par, -kz, omega)
        phase = np.exp(-2j * kz * z)
        terms = 2.0 * np.real(r * e_ref * np.conj(e_inc) * phase)
        return terms[0] + terms[1], terms[2]

    if not mode.is_evanescent(n):
        raise NotEvanescentError(
            "traveling right modes are free-space-like on the vacuum side; "
            "only evanescent ones contribute boundary intensity")
    kz_d = mode.k_normal
    omega = math.hypot(k_par, kz_d) / n
    kappa = math.sqrt(k_par * k_par - omega * omega)
    t_te, t_tm, _, _ = right_coefficients(n, k_par, kz_d)
    if mode.polarization == "te":
        t = t_te
        e_vac = basis.te(k_par, -1j * kappa)
    else:
        t = t_tm
        e_vac = basis.tm(k_par, -1j * kappa, omega)
    weight = abs(t) ** 2 * math.exp(2.0 * kappa * z) / (n * n)
    comps = np.abs(e_vac) ** 2
    return weight * (comps[0] + comps[1]), weight * comps[2]


# ----------------------------------------------------------------------
# Filon quadrature for the oscillatory kz integral.

def _filon_weights(theta):
    """Classic Filon coefficients, with a series branch for small theta."""
    if theta > 1.0 / 6.0:
        s, c = math.sin(theta), math.cos(theta)
        t3 = theta**3
        alpha = (theta * theta + theta * s * c - 2.0 * s * s) / t3
        beta = (2.0 * theta + 2.0 * theta * c * c - 4.0 * s * c) / t3
        gamma = 4.0 * (s - theta * c) / t3
    else:
        t2 = theta * theta
        alpha = theta * t2 * (2.0 / 45 + t2 * (-2.0 / 315 + t2 * (2.0 / 4725)))
        beta = 2.0 / 3 + t2 * (2.0 / 15 + t2 * (-4.0 / 105 + t2 * (2.0 / 567)))
        gamma = 4.0 / 3 + t2 * (-2.0 / 15 + t2 * (1.0 / 210 + t2 * (-1.0 / 11340)))
    return alpha, beta, gamma


def _filon_cos(envelope, a, b, w, m):
    """Integral of envelope(x) * cos(w x) over [a, b] with 2m+1 nodes.

    envelope returns an array of shape (c, npts) and the result has
    shape (c,), so several channels share one set of nodes.
    """
    x = np.linspace(a, b, 2 * m + 1)
    h = (b - a) / (2 * m)
    y = envelope(x)
    alpha, beta, gamma = _filon_weights(w * h)
    cwx = np.cos(w * x)
    even = y[:, ::2] * cwx[::2]
    c_even = even.sum(axis=1) - 0.5 * (even[:, 0] + even[:, -1])
    c_odd = (y[:, 1::2] * cwx[1::2]).sum(axis=1)
    swx_a, swx_b = math.sin(w * a), math.sin(w * b)
    return h * (alpha * (y[:, -1] * swx_b - y[:, 0] * swx_a)
                + beta * c_even + gamma * c_odd)


def _filon_panel(envelope, a, b, w, rtol, ref):
    """One panel, refined by node doubling until self-consistent."""
    prev = _filon_cos(envelope, a, b, w, 8)
    m = 16
    while m <= 4096:
        cur = _filon_cos(envelope, a, b, w, m)
        bound = rtol * np.maximum(np.abs(cur), ref)
        if np.all(np.abs(cur - prev) <= bound + 1e-300):
            return cur
        prev = cur
        m *= 2
    raise OscillatoryDivergenceError(
        f"oscillatory panel [{a:.6g}, {b:.6g}] did not converge "
        f"(last change {np.max(np.abs(cur - prev)):.3e})")


def _left_envelope(n, k_par, kz):
    """Smooth part of the left-mode boundary integrand, both channels.

    The full integrand is envelope * cos(2 d kz); the envelope collects
    the reflection coefficients, the polarisation components and the
    1/omega^2 measure.
    """
    w2 = kz * kz + k_par * k_par
    rte, rtm = left_coefficients(n, k_par, kz)
    e_par = (2.0 * rte - 2.0 * rtm * kz * kz / w2) / w2
    e_perp = 2.0 * rtm * k_par * k_par / (w2 * w2)
    return np.stack([e_par, e_perp])


def _left_integral(n, k_par, d, kz_cut, rtol):
    """Oscillatory kz integral for one k_par, Filon panels plus tail."""
    w = 2.0 * d

    def env(kz):
        return _left_envelope(n, k_par, kz)

    scale = min(max(k_par, kz_cut * 2.0**-24), kz_cut)
    total = np.zeros(2)
    ref = None
    a, b = 0.0, scale
    while True:
        if ref is None:
            ref = np.maximum(np.abs(_filon_cos(env, a, b, w, 8)), 1e-300)
        val = _filon_panel(env, a, b, w, rtol, ref)
        total += val
        ref = np.maximum(ref, np.abs(val))
        if b >= kz_cut:
            break
        a, b = b, min(2.0 * b, kz_cut)

    # Integration by parts for the tail beyond kz_cut: with E the
    # envelope and s = sin(w K), c = cos(w K),
    #   int_K^inf E cos(w kz) dkz = -E s / w - E' c / w^2 + E'' s / w^3 + ...
    h = 1e-3 * kz_cut
    y = env(np.array([kz_cut - h, kz_cut, kz_cut + h]))
    e0 = y[:, 1]
    e1 = (y[:, 2] - y[:, 0]) / (2.0 * h)
    e2 = (y[:, 2] - 2.0 * y[:, 1] + y[:, 0]) / (h * h)
    s, c = math.sin(w * kz_cut), math.cos(w * kz_cut)
    total += -e0 * s / w - e1 * c / w**2 + e2 * s / w**3
    return total


def _right_integral(n, k_par, z, glnodes):
    """Evanescent right-mode channel for one k_par.

    The integration variable kz_d = -Gamma sin(theta) removes the
    square-root behaviour of kappa at the critical angle, after which
    fixed-order Gauss-Legendre converges quickly.
    """
    big = math.sqrt(n * n - 1.0) * k_par
    theta, wts = glnodes
    kz_d = -big * np.sin(theta)
    w2 = (k_par * k_par + kz_d * kz_d) / (n * n)
    kappa = np.sqrt(k_par * k_par - w2)
    t_te, t_tm, _, _ = right_coefficients(n, k_par, kz_d)
    pre = np.exp(2.0 * kappa * z) / (n * n) / w2
    e_par = pre * (np.abs(t_te) ** 2 + np.abs(t_tm) ** 2 * kappa**2 / w2)
    e_perp = pre * np.abs(t_tm) ** 2 * k_par * k_par / w2
    jac = big * np.cos(theta) * wts
    return np.array([(e_par * jac).sum(), (e_perp * jac).sum()])


def boundary_mode_sum(model, geometry, tol=1e-4):
    """Geometry factors assembled from the explicit mode basis.

    Only the non-dispersive dielectric is supported (it is the one
    model with a textbook complete mode set).  tol is the relative
    target for the final factors; values below 1e-4 are rejected
    because the oracle is meant as a cross-check, not a precision tool.
    """
    if isinstance(model, DampedDrude):
        raise IllDefinedModelError(
            "no shift can be evaluated for the damped Drude model")
    if not isinstance(model, NonDispersive):
        raise UnsupportedModelError(
            "the mode-sum route needs the explicit non-dispersive mode basis")
    if not 1e-4 <= tol <= 1.0:
        raise ValueError(f"tol must lie in [1e-4, 1], got {tol}")
    n = model.n
    d = geometry.d
    z = -d
    kz_cut = 40.0 / d
    kpar_cut = 25.0 / d
    rtol_in = min(1e-7, 1e-3 * tol)
    x, wts = np.polynomial.legendre.leggauss(96)
    glnodes = (0.25 * math.pi * (x + 1.0), 0.25 * math.pi * wts)

    cache = {}

    def channel(k_par, idx):
        if k_par not in cache:
            cache[k_par] = (_left_integral(n, k_par, d, kz_cut, rtol_in)
                            + _right_integral(n, k_par, z, glnodes))
        return k_par * cache[k_par][idx]

    out = np.empty(2)
    for idx in (0, 1):
        val, _ = quad(channel, 0.0, kpar_cut, args=(idx,), epsabs=0.0,
                      epsrel=tol / 20.0, limit=200)
        out[idx] = val
    return GeometryFactors(g_par=-2.0 / math.pi * out[0],
                           g_perp=-2.0 / math.pi * out[1])
