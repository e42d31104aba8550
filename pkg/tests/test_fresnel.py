"""Reflection coefficients, branch choices, and the residue-point data.

The hand-derived oracles here were worked out independently of the
implementation: at kz = i*k_par the medium wavenumber degenerates and
every coefficient collapses to an algebraic expression in the model
parameters.  The dual-number derivative is additionally cross-checked
against central finite differences away from any special point.
"""

import cmath
import math

import numpy as np
import pytest

from masshift.errors import IllDefinedModelError, UnsupportedModelError
from masshift.fresnel import (
    kz_medium,
    r_te,
    r_tm,
    residue_data,
    transmission_right,
    wave_vectors,
)
from masshift.materials import (
    DampedDrude,
    Lorentz,
    NonDispersive,
    PerfectMirror,
    Plasma,
)


# ----------------------------------------------------------------------
# branch selection


def test_branch_real_propagating_follows_incident_sign():
    model = NonDispersive(n=2.0)
    up = kz_medium(model, 1.0, 1.0)
    down = kz_medium(model, 1.0, -1.0)
    assert up == pytest.approx(math.sqrt(7.0))
    assert down == pytest.approx(-math.sqrt(7.0))


def test_branch_upper_half_plane_for_complex_kz():
    rng = np.random.default_rng(3)
    models = [NonDispersive(n=1.5), Plasma(omega_p=1.0),
              Lorentz(omega_p=1.0, omega_t=0.7)]
    for model in models:
        for _ in range(30):
            kz = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            if kz.imag == 0:
                continue
            kzd = kz_medium(model, rng.uniform(0.1, 2.0), kz)
            assert kzd.imag >= 0.0


def test_branch_evanescent_in_plasma():
    # Below the plasma frequency the interior wave must decay, not grow.
    kzd = kz_medium(Plasma(omega_p=2.0), 0.5, 1.0)
    assert kzd == pytest.approx(1j * math.sqrt(3.0))


def test_kz_medium_rejects_mirror():
    with pytest.raises(UnsupportedModelError):
        kz_medium(PerfectMirror(), 1.0, 1.0)


def test_wave_vectors_bundle():
    wv = wave_vectors(NonDispersive(n=2.0), 1.0, 1.0)
    assert wv.k_par == 1.0
    assert wv.kz == 1.0 + 0.0j
    assert wv.kz_d == pytest.approx(math.sqrt(7.0))


# ----------------------------------------------------------------------
# propagating-regime sanity


def test_reflection_magnitudes_bounded_by_one():
    rng = np.random.default_rng(4)
    models = [NonDispersive(n=1.3), NonDispersive(n=4.0),
              Plasma(omega_p=1.0), Lorentz(omega_p=0.8, omega_t=1.3)]
    for model in models:
        for _ in range(40):
            k_par = rng.uniform(0.05, 3.0)
            kz = rng.uniform(0.05, 3.0)
            try:
                rte = r_te(model, k_par, kz)
                rtm = r_tm(model, k_par, kz)
            except Exception:
                continue
            assert abs(rte) <= 1.0 + 1e-12
            assert abs(rtm) <= 1.0 + 1e-12


def test_energy_conservation_left_incidence():
    """|r|^2 + |t|^2 * kz_d/kz = 1 for traveling transmitted waves."""
    model = NonDispersive(n=2.0)
    rng = np.random.default_rng(5)
    for _ in range(20):
        k_par = rng.uniform(0.1, 2.0)
        kz = rng.uniform(0.1, 2.0)
        kzd = kz_medium(model, k_par, kz)
        rte = r_te(model, k_par, kz)
        rtm = r_tm(model, k_par, kz)
        t_te = 1.0 + rte
        t_tm = 2.0 * model.n * kz / (model.n**2 * kz + kzd)
        assert rte**2 + t_te**2 * kzd / kz == pytest.approx(1.0, rel=1e-12)
        assert rtm**2 + t_tm**2 * kzd / kz == pytest.approx(1.0, rel=1e-12)


def test_mirror_coefficients_are_constant():
    assert r_te(PerfectMirror(), 0.3, 1.7) == -1.0
    assert r_tm(PerfectMirror(), 0.3, 1.7) == 1.0


# ----------------------------------------------------------------------
# right incidence


def test_transmission_right_normal_incidence():
    n = 2.0
    t_te, t_tm, r_te_r, r_tm_r = transmission_right(NonDispersive(n=n), 0.0, -1.0)
    assert t_te == pytest.approx(2.0 * n / (n + 1.0))
    assert t_tm == pytest.approx(2.0 * n / (n + 1.0))
    assert r_te_r == pytest.approx((n - 1.0) / (n + 1.0))


def test_transmission_right_energy_conservation_traveling():
    model = NonDispersive(n=2.0)
    rng = np.random.default_rng(6)
    for _ in range(20):
        k_par = rng.uniform(0.1, 1.0)
        # below the critical angle: |kz_d| > sqrt(n^2-1) * k_par
        kz_d = -rng.uniform(1.01, 3.0) * math.sqrt(3.0) * k_par
        t_te, t_tm, r_te_r, r_tm_r = transmission_right(model, k_par, kz_d)
        kz = -math.sqrt(kz_d**2 - 3.0 * k_par**2) / 2.0
        assert r_te_r**2 + t_te**2 * kz / kz_d == pytest.approx(1.0, rel=1e-12)
        assert r_tm_r**2 + t_tm**2 * kz / kz_d == pytest.approx(1.0, rel=1e-12)


def test_transmission_right_evanescent_branch_decays():
    # Beyond the critical angle the vacuum wave must decay for z < 0,
    # which with exp(i kz z) means kz = -i*kappa.
    t_te, t_tm, r_te_r, r_tm_r = transmission_right(NonDispersive(n=2.0), 1.0, -0.5)
    kappa = math.sqrt(3.0 * 1.0 - 0.25) / 2.0
    assert abs(r_te_r) == pytest.approx(1.0, rel=1e-12)
    assert abs(r_tm_r) == pytest.approx(1.0, rel=1e-12)
    assert t_te == pytest.approx(2.0 * -0.5 / (-0.5 - 1j * kappa))


def test_transmission_right_input_validation():
    model = NonDispersive(n=2.0)
    with pytest.raises(ValueError):
        transmission_right(model, 1.0, 0.5)
    with pytest.raises(ValueError):
        transmission_right(model, -1.0, -0.5)
    with pytest.raises(UnsupportedModelError):
        transmission_right(Plasma(omega_p=1.0), 1.0, -0.5)


# ----------------------------------------------------------------------
# residue-point data


def test_residue_data_mirror():
    rd = residue_data(PerfectMirror(), 0.9)
    assert (rd.r_te, rd.r_tm, rd.dr_tm_dkz) == (-1.0, 1.0, 0.0)


def test_residue_data_nondisp_oracles():
    n = 2.0
    n2 = n * n
    for k_par in (0.01, 0.5, 1.0, 40.0):
        rd = residue_data(NonDispersive(n=n), k_par)
        assert rd.r_te == pytest.approx(0.0, abs=1e-14)
        assert rd.r_tm == pytest.approx((n2 - 1.0) / (n2 + 1.0), rel=1e-13)
        oracle = 2j * n2 * (n2 - 1.0) / ((n2 + 1.0) ** 2 * k_par)
        assert rd.dr_tm_dkz == pytest.approx(oracle, rel=1e-12)


def test_residue_data_plasma_oracles():
    wp = 1.3
    for k_par in (0.02, 0.7, 5.0):
        rd = residue_data(Plasma(omega_p=wp), k_par)
        s = math.sqrt(k_par**2 + wp**2)
        assert rd.r_tm == pytest.approx(1.0, rel=1e-14)
        assert rd.r_te == pytest.approx((k_par - s) / (k_par + s), rel=1e-13)
        assert rd.dr_tm_dkz == pytest.approx(4j * s / wp**2, rel=1e-12)


def test_residue_data_lorentz_oracle():
    """Hand-derived slope for the resonant model.

    With chi0 = (wp/wt)^2 the coefficient at the residue point is
    chi0/(2+chi0) and its kz-slope is
    i*(4 k wp^2 / wt^4 + 2 (1+chi0) chi0 / k) / (2+chi0)^2.
    """
    rng = np.random.default_rng(8)
    for _ in range(30):
        wp = 10.0 ** rng.uniform(-1, 1)
        wt = 10.0 ** rng.uniform(-1, 1)
        k = 10.0 ** rng.uniform(-2, 2)
        chi0 = (wp / wt) ** 2
        rd = residue_data(Lorentz(omega_p=wp, omega_t=wt), k)
        assert rd.r_tm == pytest.approx(chi0 / (2.0 + chi0), rel=1e-12)
        slope = 1j * (4.0 * k * wp**2 / wt**4
                      + 2.0 * (1.0 + chi0) * chi0 / k) / (2.0 + chi0) ** 2
        assert rd.dr_tm_dkz == pytest.approx(slope, rel=1e-10)


def test_residue_slope_against_finite_differences():
    rng = np.random.default_rng(9)
    models = [NonDispersive(n=1.8), Plasma(omega_p=0.6),
              Lorentz(omega_p=1.1, omega_t=0.4)]
    for model in models:
        for _ in range(10):
            k = 10.0 ** rng.uniform(-1, 1)
            rd = residue_data(model, k)
            h = 1e-6 * k
            fd = (r_tm(model, k, 1j * k + h) - r_tm(model, k, 1j * k - h)) / (2 * h)
            assert rd.dr_tm_dkz == pytest.approx(fd, rel=1e-6)


def test_residue_values_real_and_slope_imaginary():
    # These reality properties are what make the shift integrals real.
    for model in [NonDispersive(n=3.0), Plasma(omega_p=0.9),
                  Lorentz(omega_p=0.5, omega_t=1.1)]:
        rd = residue_data(model, 0.8)
        assert abs(complex(rd.r_tm).imag) < 1e-14
        assert abs(complex(rd.r_te).imag) < 1e-14
        assert abs(complex(rd.dr_tm_dkz).real) < 1e-14


def test_residue_data_rejects_damped_drude_and_bad_k():
    with pytest.raises(IllDefinedModelError):
        residue_data(DampedDrude(omega_p=1.0, gamma=0.1), 1.0)
    with pytest.raises(ValueError):
        residue_data(NonDispersive(n=2.0), 0.0)
    with pytest.raises(ValueError):
        residue_data(NonDispersive(n=2.0), -1.0)
