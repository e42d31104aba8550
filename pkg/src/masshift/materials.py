"""Surface response models for a half-space filling z > 0.

The vacuum side (z < 0) is where the electron sits.  Natural units are
used throughout the package: hbar = c = 1 and frequencies, wavenumbers
and inverse distances all carry the same dimension.

Five models are provided.  A perfect mirror has no dielectric function
at all; the others are characterised by epsilon(omega) or, for the
spatially dispersive damped Drude form, by epsilon(k_par, kz).  The
damped Drude model is constructible and can be inspected, but every
shift evaluation refuses it: its dielectric function has branch points
at kz = +/- i*k_par, which is exactly where the shift integrals sample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import dual
from .errors import PoleAtFrequencyError, SingularPointError, UnsupportedModelError

__all__ = [
    "DielectricModel",
    "PerfectMirror",
    "NonDispersive",
    "Plasma",
    "Lorentz",
    "DampedDrude",
    "ModeBasisClass",
    "epsilon_at_omega",
    "epsilon_at_kz",
    "static_susceptibility",
    "classify",
    "model_from_params",
    "model_param_names",
]


class ModeBasisClass(Enum):
    """How far a normal-mode expansion can be trusted for a model.

    HERMITIAN_MODES: a complete set of explicit interface modes exists
    and sums against it are meaningful.  RESPONSE_ONLY: the reflection
    coefficients are well defined but the naive mode basis is not, so
    only response-function routes apply.  ILL_DEFINED: no route gives a
    trustworthy shift.
    """

    HERMITIAN_MODES = "hermitian_modes"
    RESPONSE_ONLY = "response_only"
    ILL_DEFINED = "ill_defined"


@dataclass(frozen=True)
class DielectricModel:
    """Base type for all surface models."""


@dataclass(frozen=True)
class PerfectMirror(DielectricModel):
    """Idealised conductor: reflects everything, has no epsilon."""


@dataclass(frozen=True)
class NonDispersive(DielectricModel):
    """Frequency-independent dielectric with refractive index n > 1."""

    n: float

    def __post_init__(self):
        if not (self.n > 1.0 and math.isfinite(self.n)):
            raise ValueError(f"refractive index must satisfy n > 1, got {self.n}")


@dataclass(frozen=True)
class Plasma(DielectricModel):
    """Undamped plasma, epsilon(omega) = 1 - omega_p^2 / omega^2."""

    omega_p: float

    def __post_init__(self):
        if not (self.omega_p > 0.0 and math.isfinite(self.omega_p)):
            raise ValueError(f"plasma frequency must be positive, got {self.omega_p}")


@dataclass(frozen=True)
class Lorentz(DielectricModel):
    """Single-resonance dielectric with transverse frequency omega_t."""

    omega_p: float
    omega_t: float

    def __post_init__(self):
        if not (self.omega_p > 0.0 and math.isfinite(self.omega_p)):
            raise ValueError(f"oscillator strength must be positive, got {self.omega_p}")
        if not (self.omega_t > 0.0 and math.isfinite(self.omega_t)):
            raise ValueError(f"resonance frequency must be positive, got {self.omega_t}")


@dataclass(frozen=True)
class DampedDrude(DielectricModel):
    """Drude metal with collision rate gamma > 0.

    With omega = sqrt(kz^2 + k_par^2) the response reads
    epsilon = 1 - omega_p^2 / (omega * (omega + i*gamma)), which is no
    longer a function of omega^2 alone.  The square root introduces
    branch points at kz = +/- i*k_par.
    """

    omega_p: float
    gamma: float

    def __post_init__(self):
        if not (self.omega_p > 0.0 and math.isfinite(self.omega_p)):
            raise ValueError(f"plasma frequency must be positive, got {self.omega_p}")
        if not (self.gamma > 0.0 and math.isfinite(self.gamma)):
            raise ValueError(f"collision rate must be positive, got {self.gamma}")


def epsilon_at_omega(model, omega):
    """Dielectric function at (possibly complex) frequency omega."""
    if isinstance(model, PerfectMirror):
        raise UnsupportedModelError("a perfect mirror has no dielectric function")
    if isinstance(model, NonDispersive):
        return model.n * model.n
    if isinstance(model, Plasma):
        w2 = omega * omega
        if w2 == 0:
            raise PoleAtFrequencyError("plasma epsilon has a pole at omega = 0")
        return 1.0 - model.omega_p**2 / w2
    if isinstance(model, Lorentz):
        denom = omega * omega - model.omega_t**2
        if denom == 0:
            raise PoleAtFrequencyError(
                f"lorentz epsilon has a pole at omega = +/-{model.omega_t}")
        return 1.0 - model.omega_p**2 / denom
    if isinstance(model, DampedDrude):
        denom = omega * (omega + 1j * model.gamma)
        if denom == 0:
            raise PoleAtFrequencyError("damped Drude epsilon has a pole at omega = 0")
        return 1.0 - model.omega_p**2 / denom
    raise UnsupportedModelError(f"unknown model {model!r}")


def epsilon_at_kz(model, k_par, kz):
    """Dielectric function evaluated at complex normal wavenumber kz.

    For all models except DampedDrude the response depends only on
    omega^2 = kz^2 + k_par^2, so the continuation off the real axis is
    unambiguous and even in kz.  DampedDrude needs omega itself and
    takes the principal branch of the square root.

    kz may be a float, a complex, or a dual.Dual scalar; the arithmetic
    below is written to support all three.
    """
    if isinstance(model, PerfectMirror):
        raise UnsupportedModelError("a perfect mirror has no dielectric function")
    if isinstance(model, NonDispersive):
        return model.n * model.n
    w2 = kz * kz + k_par * k_par
    if isinstance(model, Plasma):
        if dual.value_of(w2) == 0:
            raise SingularPointError(
                "plasma epsilon is singular where kz^2 + k_par^2 = 0; "
                "the product epsilon * (kz^2 + k_par^2) stays finite "
                "(it equals kz^2 + k_par^2 - omega_p^2), so clear the "
                "denominator instead of evaluating epsilon here",
                k_par=k_par, kz=dual.value_of(kz))
        return 1.0 - model.omega_p**2 / w2
    if isinstance(model, Lorentz):
        denom = w2 - model.omega_t**2
        if dual.value_of(denom) == 0:
            raise PoleAtFrequencyError(
                "lorentz epsilon has a pole where kz^2 + k_par^2 = omega_t^2")
        return 1.0 - model.omega_p**2 / denom
    if isinstance(model, DampedDrude):
        om = dual.sqrt(w2)
        denom = om * (om + 1j * model.gamma)
        if dual.value_of(denom) == 0:
            raise PoleAtFrequencyError("damped Drude epsilon has a pole at omega = 0")
        return 1.0 - model.omega_p**2 / denom
    raise UnsupportedModelError(f"unknown model {model!r}")


def static_susceptibility(model):
    """chi(0) = epsilon(0) - 1.  Infinite for the plasma model."""
    if isinstance(model, NonDispersive):
        return model.n * model.n - 1.0
    if isinstance(model, Lorentz):
        return model.omega_p**2 / model.omega_t**2
    if isinstance(model, Plasma):
        return math.inf
    raise UnsupportedModelError(
        f"static susceptibility is not defined for {type(model).__name__}")


def classify(model):
    """Mode-basis trust class of the model (see ModeBasisClass)."""
    if isinstance(model, (PerfectMirror, NonDispersive, Plasma)):
        return ModeBasisClass.HERMITIAN_MODES
    if isinstance(model, Lorentz):
        return ModeBasisClass.RESPONSE_ONLY
    if isinstance(model, DampedDrude):
        return ModeBasisClass.ILL_DEFINED
    raise UnsupportedModelError(f"unknown model {model!r}")


_MODEL_PARAMS = {
    "mirror": (PerfectMirror, ()),
    "nondisp": (NonDispersive, ("n",)),
    "plasma": (Plasma, ("omega_p",)),
    "lorentz": (Lorentz, ("omega_p", "omega_t")),
    "damped_drude": (DampedDrude, ("omega_p", "gamma")),
}


def model_param_names(name):
    """Parameter names required to build the named model."""
    try:
        return _MODEL_PARAMS[name][1]
    except KeyError:
        raise ValueError(f"unknown model name {name!r}; "
                         f"expected one of {sorted(_MODEL_PARAMS)}") from None


def model_from_params(name, params):
    """Build a model from its name and a {param: value} mapping.

    This is the programmatic end of the key=value grammar the command
    line uses.  Unknown names, missing parameters and extra parameters
    all raise ValueError.
    """
    cls, wanted = _MODEL_PARAMS.get(name, (None, None))
    if cls is None:
        raise ValueError(f"unknown model name {name!r}; "
                         f"expected one of {sorted(_MODEL_PARAMS)}")
    extra = set(params) - set(wanted)
    if extra:
        raise ValueError(f"model {name!r} does not take {sorted(extra)}")
    missing = [p for p in wanted if p not in params]
    if missing:
        raise ValueError(f"model {name!r} needs {missing}")
    return cls(**{p: float(params[p]) for p in wanted})
