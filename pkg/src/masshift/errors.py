"""Exception types raised by the masshift package.

Every failure mode that callers may want to distinguish gets its own
class.  All of them derive from MasshiftError so broad handlers (the
command line interface, mainly) can catch package errors without
swallowing genuine bugs.
"""


class MasshiftError(Exception):
    """Base class for all package-specific errors."""


class UnsupportedModelError(MasshiftError):
    """The requested operation is not defined for this surface model."""


class PoleAtFrequencyError(MasshiftError):
    """The dielectric function has a pole at the requested frequency."""


class SingularPointError(MasshiftError):
    """Evaluation requested exactly at a singular point of epsilon.

    Carries ``k_par`` and ``kz`` so callers that clear the singular
    denominator analytically can reconstruct the evaluation point.
    """

    def __init__(self, message, k_par=None, kz=None):
        super().__init__(message)
        self.k_par = k_par
        self.kz = kz


class BranchAmbiguityError(MasshiftError):
    """The branch rules for a square root could not be resolved."""


class SingularDenominatorError(MasshiftError):
    """A reflection-coefficient denominator vanished (surface mode hit)."""


class IllDefinedModelError(MasshiftError):
    """The model admits no meaningful shift evaluation.

    Raised for the damped Drude model: its dielectric function has
    branch points at kz = +/- i*k_par, exactly where the distance
    integrals are evaluated, so no number computed there is trustworthy.
    """


class ToleranceNotMetError(MasshiftError):
    """A quadrature could not reach the requested relative tolerance."""


class NonVanishingImaginaryPartError(MasshiftError):
    """An integrand that must be real carried a non-negligible imaginary part."""


class EvanescentBranchError(MasshiftError):
    """No decaying branch exists for the transmitted evanescent wave."""


class NotEvanescentError(MasshiftError):
    """A boundary-intensity request needs an evanescent mode but got a traveling one."""


class OscillatoryDivergenceError(MasshiftError):
    """An oscillatory integral failed its convergence estimate."""
