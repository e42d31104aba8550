"""Geometry factors and energy shift: closed forms, quadrature, plasma route."""

import math

import numpy as np
import pytest

from masshift.errors import IllDefinedModelError, UnsupportedModelError
from masshift.materials import (
    DampedDrude,
    Lorentz,
    NonDispersive,
    PerfectMirror,
    Plasma,
)
from masshift.shift import (
    energy_shift,
    geometry_factors_quadrature,
    lorentz_closed,
    lorentz_perp_chi,
    nondisp_closed,
    plasma_delta,
    plasma_factors,
    pm_closed,
)
from masshift.types import Coupling, Geometry, MomentumMoments

GEO = Geometry(d=1.0)


def test_mirror_closed_values():
    f = pm_closed(2.0)
    assert f.g_par == pytest.approx(0.5)
    assert f.g_perp == pytest.approx(-0.5)


def test_nondisp_closed_values():
    f = nondisp_closed(2.0, 1.0)
    assert f.g_par == pytest.approx(-0.48, rel=1e-14)
    assert f.g_perp == pytest.approx(-1.08, rel=1e-14)


def test_lorentz_closed_values():
    f = lorentz_closed(1.0, 1.0, 1.0)
    assert f.g_par == pytest.approx(-1.0 / 3.0, rel=1e-14)
    assert f.g_perp == pytest.approx(-2.0 / 3.0, rel=1e-14)


def test_quadrature_matches_closed_forms():
    cases = [
        (PerfectMirror(), pm_closed(0.7), Geometry(d=0.7)),
        (NonDispersive(n=2.0), nondisp_closed(2.0, 1.0), GEO),
        (NonDispersive(n=1.05), nondisp_closed(1.05, 3.0), Geometry(d=3.0)),
        (Lorentz(omega_p=1.0, omega_t=1.0), lorentz_closed(1.0, 1.0, 1.0), GEO),
        (Lorentz(omega_p=5.0, omega_t=0.1), lorentz_closed(5.0, 0.1, 0.3),
         Geometry(d=0.3)),
    ]
    for model, closed, geo in cases:
        q = geometry_factors_quadrature(model, geo)
        assert q.g_par == pytest.approx(closed.g_par, rel=1e-9)
        assert q.g_perp == pytest.approx(closed.g_perp, rel=1e-9)


def test_scaling_closed_forms():
    """g(s*frequencies, d/s) = s * g(frequencies, d), exactly in the formulas."""
    rng = np.random.default_rng(13)
    for _ in range(20):
        d = 10.0 ** rng.uniform(-1, 1)
        s = 10.0 ** rng.uniform(-1, 1)
        wp = 10.0 ** rng.uniform(-1, 1)
        wt = 10.0 ** rng.uniform(-1, 1)
        a = lorentz_closed(s * wp, s * wt, d / s)
        b = lorentz_closed(wp, wt, d)
        assert a.g_par == pytest.approx(s * b.g_par, rel=1e-12)
        assert a.g_perp == pytest.approx(s * b.g_perp, rel=1e-12)
        pa = plasma_factors(s * wp, d / s)
        pb = plasma_factors(wp, d)
        assert pa.g_par == pytest.approx(s * pb.g_par, rel=1e-9)
        assert pa.g_perp == pytest.approx(s * pb.g_perp, rel=1e-9)


def test_scaling_quadrature():
    q1 = geometry_factors_quadrature(Plasma(omega_p=2.0), Geometry(d=1.5))
    q2 = geometry_factors_quadrature(Plasma(omega_p=6.0), Geometry(d=0.5))
    assert q2.g_par == pytest.approx(3.0 * q1.g_par, rel=1e-9)
    assert q2.g_perp == pytest.approx(3.0 * q1.g_perp, rel=1e-9)


def test_plasma_delta_frozen_values():
    d_par, d_perp = plasma_delta(1.0, 1.0)
    assert d_par == pytest.approx(-1.9739131802702486, rel=1e-12)
    assert d_perp == pytest.approx(-1.4869565901351243, rel=1e-12)


def test_plasma_delta_component_identity():
    """The two corrections differ by exactly 1/(wp^2 d^3).

    Both integrands share the term -4 k s(k) exp(-2kd) / wp^2; the
    parallel one carries it twice plus 4 k^2 exp(-2kd) / wp^2, whose
    integral is elementary.
    """
    rng = np.random.default_rng(14)
    for _ in range(15):
        wp = 10.0 ** rng.uniform(-1, 1.5)
        d = 10.0 ** rng.uniform(-1, 1)
        d_par, d_perp = plasma_delta(wp, d)
        assert d_par == pytest.approx(2.0 * d_perp + 1.0 / (wp**2 * d**3),
                                      rel=1e-9)


def test_plasma_factors_equal_quadrature():
    # The parallel factor crosses zero near omega_p*d = 1.82; the grid
    # stays clear of it so relative comparison is meaningful.
    for wpd in (0.3, 2.5, 12.0):
        q = geometry_factors_quadrature(Plasma(omega_p=wpd), GEO)
        c = plasma_factors(wpd, 1.0)
        assert q.g_par == pytest.approx(c.g_par, rel=1e-8)
        assert q.g_perp == pytest.approx(c.g_perp, rel=1e-8)


def test_lorentz_perp_chi_matches_closed():
    rng = np.random.default_rng(15)
    for _ in range(20):
        wp = 10.0 ** rng.uniform(-1, 1)
        wt = 10.0 ** rng.uniform(-1, 1)
        d = 10.0 ** rng.uniform(-1, 1)
        chi0 = (wp / wt) ** 2
        assert lorentz_perp_chi(chi0, wt, d) == pytest.approx(
            lorentz_closed(wp, wt, d).g_perp, rel=1e-13)


def test_tolerance_validation():
    for bad in (0.0, -1e-6, 2e-3, 1.0):
        with pytest.raises(ValueError):
            geometry_factors_quadrature(NonDispersive(n=2.0), GEO, tol=bad)
        with pytest.raises(ValueError):
            energy_shift(NonDispersive(n=2.0), GEO, tol=bad)
        with pytest.raises(ValueError):
            plasma_delta(1.0, 1.0, tol=bad)


def test_damped_drude_rejected_everywhere():
    dd = DampedDrude(omega_p=1.0, gamma=0.1)
    with pytest.raises(IllDefinedModelError):
        geometry_factors_quadrature(dd, GEO)
    for method in ("auto", "closed", "quadrature", "pm_plus_corrections"):
        with pytest.raises(IllDefinedModelError):
            energy_shift(dd, GEO, method=method)


def test_energy_shift_method_routing():
    closed = energy_shift(NonDispersive(n=2.0), GEO)
    assert closed.method == "closed"
    assert closed.est_error == 0.0
    plasma = energy_shift(Plasma(omega_p=1.0), GEO)
    assert plasma.method == "pm_plus_corrections"
    quad = energy_shift(NonDispersive(n=2.0), GEO, method="quadrature", tol=1e-9)
    assert quad.method == "quadrature"
    assert quad.est_error == 1e-9
    assert quad.g_par == pytest.approx(closed.g_par, rel=1e-9)
    with pytest.raises(ValueError):
        energy_shift(NonDispersive(n=2.0), GEO, method="euler")
    with pytest.raises(UnsupportedModelError):
        energy_shift(NonDispersive(n=2.0), GEO, method="pm_plus_corrections")
    with pytest.raises(UnsupportedModelError):
        energy_shift(Plasma(omega_p=1.0), GEO, method="closed")


def test_energy_shift_assembly_and_ratios():
    moments = MomentumMoments(p2_par=2.0, p2_perp=3.0)
    coupling = Coupling(e2=0.5, mass=2.0)
    res = energy_shift(NonDispersive(n=2.0), GEO, moments=moments,
                       coupling=coupling)
    pre = 0.5 / (math.pi * 4.0)
    expected = pre / 32.0 * 2.0 * res.g_par + pre / 16.0 * 3.0 * res.g_perp
    assert res.delta_e == pytest.approx(expected, rel=1e-14)
    assert res.ratio_par == pytest.approx(-0.48, rel=1e-13)
    assert res.ratio_perp == pytest.approx(1.08, rel=1e-13)


def test_mirror_shift_sign():
    # Attractive in total for an isotropic slow electron.
    res = energy_shift(PerfectMirror(), GEO)
    assert res.delta_e < 0.0
    assert res.g_par == pytest.approx(1.0)
    assert res.g_perp == pytest.approx(-1.0)


def test_geometry_validation():
    with pytest.raises(ValueError):
        Geometry(d=0.0)
    with pytest.raises(ValueError):
        Geometry(d=-1.0)
    assert Geometry(d=2.0).z == -2.0
