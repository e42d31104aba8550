"""Reflection and transmission coefficients at the vacuum/medium interface.

Conventions.  A wave in vacuum carries (k_par, kz) with frequency
omega^2 = kz^2 + k_par^2; inside the medium the normal component is
kz_d with epsilon * omega^2 = kz_d^2 + k_par^2.  For waves incident
from the vacuum side,

    r_te = (kz - kz_d) / (kz + kz_d)
    r_tm = (eps * kz - kz_d) / (eps * kz + kz_d)

The distance integrals of the shift engine evaluate these at the point
kz = i*k_par, where omega = 0.  Everything here accepts dual scalars so
that d r_tm / d kz comes out of the same code path that produces the
value, with no hand-written derivative anywhere in the package.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import dual
from .errors import (
    BranchAmbiguityError,
    EvanescentBranchError,
    IllDefinedModelError,
    SingularDenominatorError,
    UnsupportedModelError,
)
from .materials import (
    DampedDrude,
    Lorentz,
    NonDispersive,
    PerfectMirror,
    Plasma,
    epsilon_at_kz,
)

__all__ = [
    "WaveVectors",
    "ResidueData",
    "kz_medium",
    "wave_vectors",
    "r_te",
    "r_tm",
    "transmission_right",
    "residue_data",
]


@dataclass(frozen=True)
class WaveVectors:
    """Wavenumber triple for one interface problem."""

    k_par: float
    kz: complex
    kz_d: complex


@dataclass(frozen=True)
class ResidueData:
    """Reflection data at the zero-frequency point kz = i*k_par.

    r_te and r_tm are the coefficients themselves, dr_tm_dkz is the
    derivative of r_tm with respect to kz at that point.  For every
    admissible model r_te and r_tm are real there and dr_tm_dkz is
    purely imaginary.
    """

    r_te: complex
    r_tm: complex
    dr_tm_dkz: complex


def _pick_branch(kz, root):
    """Apply the branch rules to a principal square root.

    For real kz and a real, non-negative radicand the medium wavenumber
    keeps the sign of kz (a transmitted wave runs the same way as the
    incident one).  Everywhere else the decaying/outgoing branch
    Im(kz_d) >= 0 is chosen, tie-broken toward Re(kz_d) >= 0.
    Negating a dual scalar flips value and derivative together, which
    is the correct continuation on the other sheet.
    """
    rv = complex(dual.value_of(root))
    kv = complex(dual.value_of(kz))
    if not cmath.isfinite(rv):
        raise BranchAmbiguityError(f"medium wavenumber is not finite: {rv!r}")
    if kv.imag == 0.0 and rv.imag == 0.0:
        if kv.real < 0.0 and rv.real > 0.0:
            return -root
        return root
    if rv.imag < 0.0 or (rv.imag == 0.0 and rv.real < 0.0):
        return -root
    return root


def kz_medium(model, k_par, kz):
    """Normal wavenumber inside the medium, sqrt(eps*(kz^2+k_par^2) - k_par^2).

    For the plasma model the radicand simplifies exactly:
    (1 - omega_p^2/omega^2) * omega^2 - k_par^2 = kz^2 - omega_p^2,
    which removes the spurious singularity at omega = 0 and is what
    makes the zero-frequency point harmless for this model.
    """
    if isinstance(model, PerfectMirror):
        raise UnsupportedModelError("a perfect mirror has no interior wave")
    if isinstance(model, Plasma):
        radicand = kz * kz - model.omega_p**2
    else:
        eps = epsilon_at_kz(model, k_par, kz)
        radicand = eps * (kz * kz + k_par * k_par) - k_par * k_par
    return _pick_branch(kz, dual.sqrt(radicand))


def wave_vectors(model, k_par, kz):
    """Bundle (k_par, kz, kz_d) with the branch rules applied."""
    return WaveVectors(k_par=k_par, kz=complex(dual.value_of(kz)),
                       kz_d=complex(dual.value_of(kz_medium(model, k_par, kz))))


def r_te(model, k_par, kz):
    """TE (s-polarised) reflection coefficient for vacuum-side incidence."""
    if isinstance(model, PerfectMirror):
        return -1.0
    kzd = kz_medium(model, k_par, kz)
    denom = kz + kzd
    if dual.value_of(denom) == 0:
        raise SingularDenominatorError("r_te denominator kz + kz_d vanished")
    return (kz - kzd) / denom


def r_tm(model, k_par, kz):
    """TM (p-polarised) reflection coefficient for vacuum-side incidence.

    The plasma model is evaluated in cleared-denominator form: numerator
    and denominator are multiplied by omega^2 so that epsilon * omega^2
    becomes the polynomial omega^2 - omega_p^2.  The standard form would
    hit the epsilon pole at omega = 0, which is exactly where the shift
    integrals need this coefficient.
    """
    if isinstance(model, PerfectMirror):
        return 1.0
    kzd = kz_medium(model, k_par, kz)
    if isinstance(model, Plasma):
        w2 = kz * kz + k_par * k_par
        eps_w2 = w2 - model.omega_p**2
        num = eps_w2 * kz - w2 * kzd
        den = eps_w2 * kz + w2 * kzd
    else:
        eps = epsilon_at_kz(model, k_par, kz)
        num = eps * kz - kzd
        den = eps * kz + kzd
    if dual.value_of(den) == 0:
        raise SingularDenominatorError(
            "r_tm denominator vanished (transverse-magnetic surface mode)")
    return num / den


def transmission_right(model, k_par, kz_d):
    """Coefficients for a wave incident from inside the medium.

    The incident wave moves toward the interface, so kz_d < 0.  Returns
    (t_te, t_tm, r_te_right, r_tm_right) with the transmitted vacuum
    wave either traveling (kz < 0) or, for |kz_d| below the critical
    value sqrt(n^2-1)*k_par, evanescent with kz = -i*kappa so that it
    decays away from the surface (as exp(kappa * z) for z < 0).
    """
    if not isinstance(model, NonDispersive):
        raise UnsupportedModelError(
            "right-incidence coefficients are only provided for the "
            "non-dispersive dielectric")
    if not (k_par >= 0.0 and math.isfinite(k_par)):
        raise ValueError(f"k_par must be non-negative, got {k_par}")
    if not (kz_d < 0.0 and math.isfinite(kz_d)):
        raise ValueError(f"incidence from the medium needs kz_d < 0, got {kz_d}")
    n = model.n
    crit2 = (n * n - 1.0) * k_par * k_par
    gap = crit2 - kz_d * kz_d
    if gap > 0.0:
        kappa = math.sqrt(gap) / n
        if not kappa > 0.0:
            raise EvanescentBranchError(
                "no decaying vacuum branch exists for this mode")
        kz = -1j * kappa
    else:
        kz = -math.sqrt(-gap) / n
    den_te = kz_d + kz
    den_tm = kz_d + n * n * kz
    if den_te == 0 or den_tm == 0:
        raise SingularDenominatorError("right-incidence denominator vanished")
    t_te = 2.0 * kz_d / den_te
    r_te_right = (kz_d - kz) / den_te
    t_tm = 2.0 * n * kz_d / den_tm
    r_tm_right = (kz_d - n * n * kz) / den_tm
    return t_te, t_tm, r_te_right, r_tm_right


def residue_data(model, k_par):
    """Reflection data at kz = i*k_par, differentiated by dual scalars.

    This single point carries everything the distance integrals need:
    both coefficients and d r_tm / d kz.  The derivative is obtained by
    seeding kz with a unit dual part and running the ordinary r_tm code.
    """
    if not (k_par > 0.0 and math.isfinite(k_par)):
        raise ValueError(f"k_par must be positive, got {k_par}")
    if isinstance(model, PerfectMirror):
        return ResidueData(r_te=-1.0, r_tm=1.0, dr_tm_dkz=0.0)
    if isinstance(model, DampedDrude):
        raise IllDefinedModelError(
            "the damped Drude response has branch points at kz = +/- i*k_par; "
            "reflection data at the zero-frequency point is meaningless")
    point = 1j * k_par
    te = complex(dual.value_of(r_te(model, k_par, point)))
    tm, dtm = dual.derivative(lambda w: r_tm(model, k_par, w), point)
    return ResidueData(r_te=te, r_tm=complex(tm), dr_tm_dkz=complex(dtm))
