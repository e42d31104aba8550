"""Surface models: constructor guards, epsilon evaluation, classification."""

import math

import numpy as np
import pytest

from masshift.errors import (
    PoleAtFrequencyError,
    SingularPointError,
    UnsupportedModelError,
)
from masshift.materials import (
    DampedDrude,
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


@pytest.mark.parametrize("bad", [1.0, 0.9, 0.0, -2.0])
def test_nondisp_requires_index_above_one(bad):
    with pytest.raises(ValueError):
        NonDispersive(n=bad)


def test_parameter_positivity():
    with pytest.raises(ValueError):
        Plasma(omega_p=0.0)
    with pytest.raises(ValueError):
        Lorentz(omega_p=-1.0, omega_t=1.0)
    with pytest.raises(ValueError):
        Lorentz(omega_p=1.0, omega_t=0.0)
    with pytest.raises(ValueError):
        DampedDrude(omega_p=1.0, gamma=0.0)
    # constructible; only evaluation is refused later
    DampedDrude(omega_p=1.0, gamma=0.1)


def test_epsilon_at_omega_values():
    assert epsilon_at_omega(NonDispersive(n=2.0), 0.37) == 4.0
    assert epsilon_at_omega(Plasma(omega_p=2.0), 1.0) == pytest.approx(-3.0)
    lz = Lorentz(omega_p=1.0, omega_t=0.5)
    assert epsilon_at_omega(lz, 1.0) == pytest.approx(1.0 - 1.0 / 0.75)
    dd = DampedDrude(omega_p=1.0, gamma=0.5)
    val = epsilon_at_omega(dd, 1.0)
    assert val == pytest.approx(1.0 - 1.0 / (1.0 + 0.5j))


def test_epsilon_poles_and_mirror_rejection():
    with pytest.raises(UnsupportedModelError):
        epsilon_at_omega(PerfectMirror(), 1.0)
    with pytest.raises(PoleAtFrequencyError):
        epsilon_at_omega(Plasma(omega_p=1.0), 0.0)
    with pytest.raises(PoleAtFrequencyError):
        epsilon_at_omega(Lorentz(omega_p=1.0, omega_t=0.5), 0.5)
    with pytest.raises(PoleAtFrequencyError):
        epsilon_at_omega(DampedDrude(omega_p=1.0, gamma=0.5), 0.0)
    with pytest.raises(UnsupportedModelError):
        epsilon_at_kz(PerfectMirror(), 1.0, 1.0)


def test_epsilon_at_kz_matches_epsilon_at_omega_on_shell():
    """For real propagating waves the two parametrisations agree."""
    rng = np.random.default_rng(11)
    models = [NonDispersive(n=1.7), Plasma(omega_p=0.8),
              Lorentz(omega_p=1.2, omega_t=0.9),
              DampedDrude(omega_p=1.1, gamma=0.3)]
    for model in models:
        for _ in range(20):
            k_par = rng.uniform(0.1, 3.0)
            kz = rng.uniform(0.1, 3.0)
            omega = math.hypot(k_par, kz)
            assert epsilon_at_kz(model, k_par, kz) == pytest.approx(
                epsilon_at_omega(model, omega), rel=1e-13)


def test_epsilon_at_kz_is_even_in_kz():
    rng = np.random.default_rng(12)
    models = [NonDispersive(n=1.7), Plasma(omega_p=0.8),
              Lorentz(omega_p=1.2, omega_t=0.9),
              DampedDrude(omega_p=1.1, gamma=0.3)]
    for model in models:
        for _ in range(10):
            k_par = rng.uniform(0.1, 3.0)
            kz = complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))
            assert epsilon_at_kz(model, k_par, kz) == pytest.approx(
                epsilon_at_kz(model, k_par, -kz), rel=1e-13)


def test_lorentz_epsilon_at_residue_point_is_static_plus_chi():
    # At kz = i*k_par the frequency vanishes, so epsilon = 1 + chi(0).
    lz = Lorentz(omega_p=1.5, omega_t=0.5)
    val = epsilon_at_kz(lz, 0.7, 0.7j)
    assert val == pytest.approx(1.0 + 9.0, rel=1e-14)


def test_plasma_epsilon_singular_at_residue_point():
    with pytest.raises(SingularPointError) as info:
        epsilon_at_kz(Plasma(omega_p=1.0), 0.7, 0.7j)
    assert info.value.k_par == 0.7


def test_static_susceptibility():
    assert static_susceptibility(NonDispersive(n=2.0)) == pytest.approx(3.0)
    assert static_susceptibility(Lorentz(omega_p=1.0, omega_t=0.5)) == pytest.approx(4.0)
    assert static_susceptibility(Plasma(omega_p=1.0)) == math.inf
    with pytest.raises(UnsupportedModelError):
        static_susceptibility(PerfectMirror())
    with pytest.raises(UnsupportedModelError):
        static_susceptibility(DampedDrude(omega_p=1.0, gamma=0.1))


def test_classify():
    assert classify(PerfectMirror()) is ModeBasisClass.HERMITIAN_MODES
    assert classify(NonDispersive(n=2.0)) is ModeBasisClass.HERMITIAN_MODES
    assert classify(Plasma(omega_p=1.0)) is ModeBasisClass.HERMITIAN_MODES
    assert classify(Lorentz(omega_p=1.0, omega_t=1.0)) is ModeBasisClass.RESPONSE_ONLY
    assert classify(DampedDrude(omega_p=1.0, gamma=0.1)) is ModeBasisClass.ILL_DEFINED


def test_model_from_params_round_trip():
    assert model_from_params("mirror", {}) == PerfectMirror()
    assert model_from_params("nondisp", {"n": 2}) == NonDispersive(n=2.0)
    assert model_from_params("lorentz", {"omega_p": 1, "omega_t": 2}) == \
        Lorentz(omega_p=1.0, omega_t=2.0)
    assert model_param_names("plasma") == ("omega_p",)


def test_model_from_params_rejects_bad_input():
    with pytest.raises(ValueError):
        model_from_params("chromium", {})
    with pytest.raises(ValueError):
        model_param_names("chromium")
    with pytest.raises(ValueError):
        model_from_params("mirror", {"n": 2.0})
    with pytest.raises(ValueError):
        model_from_params("lorentz", {"omega_p": 1.0})
