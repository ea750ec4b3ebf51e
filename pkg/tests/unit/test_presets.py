"""Tests for the preset library and its elliptic oracle."""
import math

import numpy as np
import pytest
from scipy import integrate

from attainlab.services.controllability import controllability_report
from attainlab.services.errors import InvalidArgumentError
from attainlab.services.presets import (
    build_preset,
    describe_presets,
    elliptic_solution,
    mean_value,
    neutral_quasipolynomial,
    preset_finite,
    preset_neutral,
    preset_wave,
    sine_projection,
)
from attainlab.services.quasipoly import delta_eval


def couplings_by_eigenvalue(system):
    return {mode.eigenvalue: complex(mode.input_coupling[0, 0]) for mode in system.modes}


def test_wave_preset_spectrum():
    system = preset_wave(1)
    assert [mode.eigenvalue for mode in system.modes] == [0j, -1j, 1j]
    assert all(mode.beta == 1 for mode in system.modes)
    assert system.threshold_time == pytest.approx(2.0 * math.pi)
    assert preset_wave(5).size == 11


def test_wave_couplings_are_conjugate_symmetric():
    couplings = couplings_by_eigenvalue(preset_wave(5))
    for k in range(1, 6):
        assert couplings[-1j * k] == pytest.approx(np.conj(couplings[1j * k]), abs=1e-15)


def test_wave_oscillation_couplings_do_not_depend_on_mu():
    low = couplings_by_eigenvalue(preset_wave(6, mu=0.5))
    high = couplings_by_eigenvalue(preset_wave(6, mu=1.5))
    for eigenvalue, value in low.items():
        if eigenvalue != 0:
            assert high[eigenvalue] == pytest.approx(value, abs=1e-13)
    assert low[0j] != 0 and high[0j] != 0


def test_wave_even_modes_decouple_for_equal_boundary_data():
    couplings = couplings_by_eigenvalue(preset_wave(4))
    assert couplings[2j] == 0 and couplings[-4j] == 0
    assert abs(couplings[1j]) == pytest.approx(2.0 / math.pi)

    antisymmetric = couplings_by_eigenvalue(preset_wave(4, boundary=(1.0, -1.0)))
    assert antisymmetric[0j] == 0
    assert antisymmetric[1j] == 0 and antisymmetric[3j] == 0
    assert antisymmetric[2j] != 0


@pytest.mark.parametrize("mu", [0.5, 1.5])
def test_wave_verdict_is_mu_invariant(mu):
    reference = controllability_report(preset_wave(8, mu=0.5))
    report = controllability_report(preset_wave(8, mu=mu))
    assert report.summary() == reference.summary()
    assert [v.passes for v in report.verdicts] == [v.passes for v in reference.verdicts]


@pytest.mark.parametrize("mu", [0.0, 2j, -3j])
def test_wave_rejects_mu_on_spectrum(mu):
    with pytest.raises(InvalidArgumentError):
        preset_wave(3, mu=mu)


@pytest.mark.parametrize("K", [0, -2, 1.5])
def test_wave_rejects_bad_size(K):
    with pytest.raises(InvalidArgumentError):
        preset_wave(K)


@pytest.mark.parametrize("mu", [0.5, 1.5])
def test_elliptic_solution_boundary_values(mu):
    w = elliptic_solution(mu, (1.0, 0.3))
    assert w(0.0) == pytest.approx(1.0, abs=1e-14)
    assert w(math.pi) == pytest.approx(0.3, abs=1e-14)
    # w'' = mu^2 w by central differences
    theta, h = 1.1, 1e-4
    second = (w(theta + h) - 2.0 * w(theta) + w(theta - h)) / h**2
    assert second == pytest.approx(mu**2 * w(theta), rel=1e-6)


@pytest.mark.parametrize("mu", [0.5, 1.5])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sine_projection_matches_quadrature(mu, k):
    boundary = (1.0, 0.3)
    w = elliptic_solution(mu, boundary)
    oracle = integrate.quad(lambda theta: float((w(theta) * math.sin(k * theta)).real), 0.0, math.pi, epsabs=1e-13)[0]
    assert sine_projection(mu, boundary, k) == pytest.approx(oracle, abs=1e-11)


def test_mean_value_matches_quadrature():
    w = elliptic_solution(0.5, (1.0, 1.0))
    oracle = integrate.quad(lambda theta: float(w(theta).real), 0.0, math.pi, epsabs=1e-13)[0] / math.pi
    assert mean_value(0.5, (1.0, 1.0)) == pytest.approx(oracle, abs=1e-12)


def test_finite_preset():
    system = preset_finite([-2.0, -1.0], [1.0, 0.5])
    assert system.input_dim == 1
    assert [mode.eigenvalue for mode in system.modes] == [-1.0, -2.0]
    assert system.modes[0].input_coupling[0, 0] == 0.5
    assert system.threshold_time == 0.0
    with pytest.raises(InvalidArgumentError):
        preset_finite([-1.0, -2.0], [[1.0]])


def test_neutral_preset_roots():
    q = neutral_quasipolynomial(0.5, -1.0, 0.2, 1.0)
    system = preset_neutral()
    assert system.size >= 2
    assert system.expansion_time == 1.0
    assert system.nu_estimated
    assert 1.0 < system.minimality_interval < 1.2
    eigenvalues = [mode.eigenvalue for mode in system.modes]
    for lam in eigenvalues:
        assert abs(delta_eval(q, lam)) < 1e-9
        assert min(abs(np.conj(lam) - other) for other in eigenvalues) < 1e-8


def test_neutral_preset_rejects_bad_delay():
    with pytest.raises(InvalidArgumentError):
        neutral_quasipolynomial(0.5, -1.0, 0.2, 0.0)


def test_build_preset_dispatch():
    assert build_preset("wave", {"K": 2}).size == 5
    with pytest.raises(InvalidArgumentError):
        build_preset("membrane", {})
    with pytest.raises(InvalidArgumentError):
        build_preset("wave", {"K": 2, "speed": 3.0})


def test_describe_presets():
    listing = describe_presets()
    assert set(listing) == {"wave", "finite", "neutral"}
    assert listing["wave"]["parameters"]["mu"] == 0.5
    assert listing["wave"]["parameters"]["K"] is None
