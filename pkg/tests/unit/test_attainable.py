"""Tests for Gramians, attainable subspaces and the closure experiment."""
import math

import numpy as np
import pytest
from scipy.linalg import qr

from attainlab.services.attainable import (
    attainable_subspace,
    closure_independence_experiment,
    free_motion_gap,
    gramian,
    kalman_subspace,
    realization_exp,
    realize,
    subspace_distance,
    subspace_gap,
)
from attainlab.services.errors import InvalidArgumentError
from attainlab.services.presets import preset_finite, preset_wave
from attainlab.services.spectral import ModalSystem, SpectralMode


def scalar_system(a: complex, b: complex) -> ModalSystem:
    return ModalSystem.from_modes([SpectralMode(eigenvalue=a, chain_lengths=(1,), input_coupling=[[b]])])


def krylov_oracle(A, B):
    """Orthonormal basis of span[B, AB, ..., A^{d-1}B] with A rescaled to unit spectral radius."""
    d = A.shape[0]
    scaled = A / max(1.0, np.max(np.abs(np.diag(A))))
    blocks = [B]
    for _ in range(d - 1):
        blocks.append(scaled @ blocks[-1])
    blocks = [block / max(np.linalg.norm(block), 1e-300) for block in blocks]
    Q, R, _ = qr(np.hstack(blocks), mode="economic", pivoting=True)
    rank = int(np.sum(np.abs(np.diag(R)) > 1e-10 * np.abs(R[0, 0])))
    return Q[:, :rank]


def test_realize_block_layout(two_mode_system):
    real = realize(two_mode_system, 2)
    assert real.state_dim == 3
    expected = np.array([[-1, 0, 0], [0, 2j, 1], [0, 0, 2j]])
    assert np.array_equal(real.A_matrix, expected)
    assert np.array_equal(real.B_matrix, [[1.0], [0.5], [1.0]])
    with pytest.raises(InvalidArgumentError):
        realize(two_mode_system, 3)


def test_realize_wave_preset_dimension():
    assert realize(preset_wave(3), 7).state_dim == 7


def test_realization_exp_matches_blocks(two_mode_system):
    real = realize(two_mode_system, 2)
    E = realization_exp(real, 0.8)
    assert E[0, 0] == pytest.approx(math.exp(-0.8))
    assert E[1, 2] == pytest.approx(0.8 * np.exp(1.6j))
    assert E[0, 1] == 0


@pytest.mark.parametrize("t", [0.5, 1.0, 3.0])
def test_scalar_gramian_closed_form(t):
    G = gramian(realize(scalar_system(-1.0, 1.0), 1), t)
    assert G[0, 0].real == pytest.approx((1.0 - math.exp(-2.0 * t)) / 2.0, abs=1e-12)
    assert G[0, 0].imag == 0


def test_integrator_gramian_is_t():
    G = gramian(realize(scalar_system(0.0, 1.0), 1), 2.5)
    assert G[0, 0].real == pytest.approx(2.5, abs=1e-12)


def test_nilpotent_gramian_against_trapezoid():
    mode = SpectralMode(eigenvalue=0.0, chain_lengths=(2,), input_coupling=[[0.0], [1.0]])
    real = realize(ModalSystem.from_modes([mode]), 1)
    t = 1.5
    G = gramian(real, t)
    # e^{As}B = (s, 1)
    s = np.linspace(0.0, t, 200001)
    integrand = np.stack([np.stack([s * s, s]), np.stack([s, np.ones_like(s)])])
    oracle = np.trapezoid(integrand, s, axis=-1)
    assert np.max(np.abs(G - oracle)) < 1e-9
    assert G[0, 0].real == pytest.approx(t**3 / 3.0, abs=1e-12)


def test_gramian_is_hermitian_psd(random_system, rng):
    for _ in range(10):
        system = random_system(rng, int(rng.integers(2, 9)), inputs=2)
        G = gramian(realize(system, system.size), 1.3)
        assert np.array_equal(G, G.conj().T)
        eigenvalues = np.linalg.eigvalsh(G)
        assert eigenvalues[0] >= -1e-12 * eigenvalues[-1]


def test_gramian_shift_identity(random_system, rng):
    t1, t2 = 0.7, 1.9
    for _ in range(20):
        system = random_system(rng, int(rng.integers(2, 13)), inputs=int(rng.integers(1, 3)))
        real = realize(system, system.size)
        E = realization_exp(real, t2 - t1)
        shifted = gramian(real, t2) - E @ gramian(real, t1) @ E.conj().T
        assert np.max(np.abs(shifted - gramian(real, t2 - t1))) < 1e-9


def test_gramian_shift_identity_with_jordan_chains(random_system, rng):
    t1, t2 = 0.7, 1.9
    for _ in range(20):
        system = random_system(rng, int(rng.integers(2, 5)), inputs=int(rng.integers(1, 3)), max_chain=3)
        real = realize(system, system.size)
        assert real.state_dim <= 12
        E = realization_exp(real, t2 - t1)
        shifted = gramian(real, t2) - E @ gramian(real, t1) @ E.conj().T
        assert np.max(np.abs(shifted - gramian(real, t2 - t1))) < 1e-9


def test_gramian_rejects_nonpositive_horizon(two_mode_system):
    with pytest.raises(InvalidArgumentError):
        gramian(realize(two_mode_system, 2), 0.0)


def test_attainable_subspace_full_and_empty():
    basis = attainable_subspace(realize(scalar_system(0.0, 1.0), 1), 0.3)
    assert basis.dimension == 1

    silent = attainable_subspace(realize(scalar_system(-1.0, 0.0), 1), 1.0)
    assert silent.dimension == 0
    assert silent.basis.shape == (1, 0)


def test_zero_coupling_block_is_excluded():
    system = preset_finite([-1.0, -2.0, -3.0], [[1.0], [0.0], [1.0]])
    basis = attainable_subspace(realize(system, 3), 2.0)
    assert basis.dimension == 2
    assert np.max(np.abs(basis.basis[1, :])) < 1e-12


def test_controllable_realization_full_rank_at_all_horizons(controllable_finite):
    real = realize(controllable_finite, 3)
    assert attainable_subspace(real, 0.1).dimension == 3
    assert attainable_subspace(real, 10.0).dimension == 3
    assert kalman_subspace(real).shape[1] == 3


def test_basis_columns_are_orthonormal(random_system, rng):
    system = random_system(rng, 6, inputs=2)
    basis = attainable_subspace(realize(system, 6), 1.0).basis
    assert np.max(np.abs(basis.conj().T @ basis - np.eye(basis.shape[1]))) < 1e-12


def test_subspace_distance_examples():
    e1 = np.array([[1.0], [0.0]])
    e2 = np.array([[0.0], [1.0]])
    diagonal = np.array([[1.0], [1.0]]) / math.sqrt(2.0)
    assert subspace_distance(e1, e1) == 0.0
    assert subspace_distance(e1, e2) == pytest.approx(1.0)
    assert subspace_distance(e1, diagonal) == pytest.approx(math.sin(math.pi / 4), abs=1e-12)
    assert subspace_gap(e1, np.eye(2)) == (1.0, 1, 2)
    assert subspace_gap(np.zeros((2, 0)), np.zeros((2, 0))) == (0.0, 0, 0)


def test_attainable_subspace_matches_kalman(random_system, rng):
    for _ in range(50):
        system = random_system(rng, int(rng.integers(1, 9)), inputs=int(rng.integers(1, 3)), zero_rate=0.3)
        real = realize(system, system.size)
        oracle = krylov_oracle(np.asarray(real.A_matrix), np.asarray(real.B_matrix))
        basis = attainable_subspace(real, 0.1).basis
        assert basis.shape[1] == oracle.shape[1]
        assert subspace_distance(basis, oracle) <= 1e-8
        assert subspace_distance(kalman_subspace(real), oracle) <= 1e-8


def test_dimension_is_monotone_in_horizon(random_system, rng):
    violations = 0
    for _ in range(50):
        system = random_system(rng, int(rng.integers(1, 11)), zero_rate=0.2)
        report = closure_independence_experiment(system, [0.5, 1.0, 2.0, 4.0], system.size)
        if not report.monotone:
            violations += 1
    assert violations == 0


def test_dimension_is_monotone_with_jordan_chains(random_system, rng):
    violations = 0
    for _ in range(30):
        system = random_system(rng, int(rng.integers(1, 5)), zero_rate=0.2, max_chain=3)
        report = closure_independence_experiment(system, [0.5, 1.0, 2.0, 4.0], system.size)
        if not report.monotone:
            violations += 1
    assert violations == 0


def test_subspace_distance_accepts_subspace_bases():
    real = realize(preset_wave(1), 3)
    basis = attainable_subspace(real, 7.0)
    assert subspace_distance(basis, basis) == pytest.approx(0.0, abs=1e-12)
    assert subspace_gap(basis, basis) == (pytest.approx(0.0, abs=1e-12), 3, 3)
    assert subspace_distance(basis, basis.basis) == pytest.approx(0.0, abs=1e-12)
    assert subspace_distance(attainable_subspace(real, 9.0), kalman_subspace(real)) <= 1e-8


def test_wave_closure_independence():
    system = preset_wave(8)
    assert system.size == 17
    assert system.threshold_time == pytest.approx(2.0 * math.pi)
    report = closure_independence_experiment(system, [7.0, 9.0, 12.0], 17)
    assert report.passed
    assert report.dimensions[0] == report.dimensions[-1]
    assert max(max(row) for row in report.distances) <= 1e-6
    assert all("independent" in verdict for verdict in report.pair_verdicts)
    assert report.kalman_dimension == report.dimensions[0]


def test_finite_system_closure_is_full_space(controllable_finite):
    report = closure_independence_experiment(controllable_finite, [1.0, 2.0], 3)
    assert report.dimensions == [3, 3]
    assert report.distances[0][1] == pytest.approx(0.0, abs=1e-12)
    assert report.passed


def test_distance_matrix_is_symmetric_with_zero_diagonal(wave_system):
    report = closure_independence_experiment(wave_system, [1.0, 3.0, 7.0], 7)
    distances = np.array(report.distances)
    assert np.array_equal(distances, distances.T)
    assert np.all(np.diag(distances) == 0.0)
    assert any("not covered" in verdict for verdict in report.pair_verdicts)
    assert "finite-section evidence" in report.notes[0]


def test_horizons_must_increase(wave_system):
    with pytest.raises(InvalidArgumentError):
        closure_independence_experiment(wave_system, [9.0, 7.0], 7)
    with pytest.raises(InvalidArgumentError):
        closure_independence_experiment(wave_system, [0.0, 7.0], 7)


def test_free_motion_gap(controllable_finite):
    assert free_motion_gap(controllable_finite, 1.0, 3) < 1e-8
    system = preset_finite([-1.0, -2.0], [[1.0], [0.0]])
    assert free_motion_gap(system, 1.0, 2) == pytest.approx(1.0)
