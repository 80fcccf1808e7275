import math

import pytest

import westervelt as wv


def test_parse_and_derivative():
    e = wv.parse("f(p)*p_x")
    d = e.total_derivative("t")
    assert str(d) == str(wv.parse("p_x*p_t*f'(p) + f(p)*p_tx"))


def test_euler_annihilates_divergences():
    div = wv.parse("p_t*p_x").total_derivative("x")
    assert not div.is_zero()
    assert div.euler("p").is_zero()


def test_mass_law_certifies():
    sys = wv.system("westervelt")
    r = wv.divergence_residual(
        sys, ["1"], "f'(p)*p_t", "-c^2*p_x - beta*p_tx"
    )
    assert r.is_zero()


def test_mass_law_mutant_fails():
    sys = wv.system("westervelt")
    r = wv.divergence_residual(sys, ["1"], "f'(p)*p_t", "c^2*p_x - beta*p_tx")
    assert not r.is_zero()


def test_multiplier_classification():
    basis = wv.find_multipliers(wv.system("westervelt"))
    assert len(basis) == 4


def test_time_shift_symmetry():
    rs = wv.symmetry_residual(wv.system("westervelt"), {"p": "-p_t"})
    assert all(r.is_zero() for r in rs)


def test_shock_amplitude_and_profile():
    p = wv.ShockParams()
    p.c = 2.0
    assert p.amplitude() == pytest.approx(3.0, abs=1e-12)
    assert wv.shock_profile(40.0, p) == pytest.approx(3.0, abs=1e-8)
    u0 = wv.shock_profile(0.0, p)
    u1 = wv.shock_profile(1.0, p)
    assert u0 == pytest.approx(0.75, abs=1e-12)
    assert wv.shock_xi_difference(u0, u1, p) == pytest.approx(1.0, abs=1e-6)


def test_shock_ode_residual():
    p = wv.ShockParams()
    p.c = 2.0
    xis = [-10 + 0.2 * i for i in range(101)]
    assert wv.shock_ode_residual(p, xis) <= 1e-9


def test_amplitude_n3():
    p = wv.ShockParams()
    p.c = 2.0
    p.n = 3.0
    assert p.amplitude() == pytest.approx(math.sqrt(3.0), abs=1e-12)
