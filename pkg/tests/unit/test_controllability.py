"""Tests for the per-mode controllability criteria and reports."""
import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from attainlab.services.controllability import (
    ModeVerdict,
    adjoint_trivial_solution,
    controllability_report,
    eigen_input_nonvanishing,
    horizon_classification,
    rank_condition,
    resolvent_criterion,
)
from attainlab.services.errors import InvalidArgumentError
from attainlab.services.spectral import ModalSystem, SpectralMode


def random_chains(rng, beta):
    chains = []
    remaining = beta
    while remaining:
        length = int(rng.integers(1, remaining + 1))
        chains.append(length)
        remaining -= length
    return tuple(chains)


def random_mode(rng, single_chain=False):
    beta = int(rng.integers(1, 5))
    inputs = int(rng.integers(1, 4))
    coupling = rng.normal(size=(beta, inputs)) + 1j * rng.normal(size=(beta, inputs))
    coupling[rng.random(size=(beta, inputs)) < 0.5] = 0.0
    chains = (beta,) if single_chain else random_chains(rng, beta)
    eigenvalue = complex(rng.uniform(-3.0, -1.0), rng.uniform(-3.0, 3.0))
    return SpectralMode(eigenvalue=eigenvalue, chain_lengths=chains, input_coupling=coupling)


def test_rank_condition_simple_modes(decaying_mode):
    verdict = rank_condition(decaying_mode)
    assert verdict.passes and verdict.rank_found == 1
    assert verdict.margin == pytest.approx(1.0)

    zero = decaying_mode.with_coupling([[0.0]])
    verdict = rank_condition(zero)
    assert not verdict.passes
    assert verdict.rank_found == 0
    assert verdict.margin == 0.0


def test_rank_condition_jordan_chain_needs_eigenvector_row():
    head_only = SpectralMode(eigenvalue=1j, chain_lengths=(2,), input_coupling=[[1.0], [0.0]])
    tail = SpectralMode(eigenvalue=1j, chain_lengths=(2,), input_coupling=[[0.0], [1.0]])
    assert not rank_condition(head_only).passes
    assert rank_condition(head_only).rank_found == 1
    assert rank_condition(tail).passes
    assert not eigen_input_nonvanishing(head_only)
    assert eigen_input_nonvanishing(tail)


def test_two_chains_need_independent_eigenvector_rows():
    parallel = SpectralMode(eigenvalue=0.0, chain_lengths=(1, 1), input_coupling=[[1.0, 0.0], [2.0, 0.0]])
    independent = SpectralMode(eigenvalue=0.0, chain_lengths=(1, 1), input_coupling=[[1.0, 0.0], [0.0, 1.0]])
    assert eigen_input_nonvanishing(parallel)
    assert not rank_condition(parallel).passes
    assert rank_condition(independent).passes


def test_adjoint_criterion_agrees_with_rank_condition(rng):
    disagreements = 0
    for _ in range(1000):
        mode = random_mode(rng)
        if adjoint_trivial_solution(mode, 1e-9) != rank_condition(mode, 1e-9).passes:
            disagreements += 1
    assert disagreements == 0


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_adjoint_criterion_agrees_on_generated_modes(seed):
    mode = random_mode(np.random.default_rng(seed))
    assert adjoint_trivial_solution(mode) == rank_condition(mode).passes


@settings(max_examples=200, deadline=None)
@given(
    seed=st.integers(0, 2**32 - 1),
    modulus=st.floats(1e-2, 1e2),
    angle=st.floats(-np.pi, np.pi),
)
def test_verdicts_are_invariant_under_coupling_scaling(seed, modulus, angle):
    mode = random_mode(np.random.default_rng(seed))
    scaled = mode.with_coupling(modulus * np.exp(1j * angle) * mode.input_coupling)
    assert rank_condition(scaled).passes == rank_condition(mode).passes
    assert adjoint_trivial_solution(scaled) == adjoint_trivial_solution(mode)
    assert eigen_input_nonvanishing(scaled) == eigen_input_nonvanishing(mode)


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), data=st.data())
def test_verdicts_are_invariant_under_chain_permutation(seed, data):
    mode = random_mode(np.random.default_rng(seed))
    order = data.draw(st.permutations(range(len(mode.chain_lengths))))
    starts = np.cumsum((0,) + mode.chain_lengths)
    rows = [mode.input_coupling[starts[k]:starts[k + 1]] for k in range(len(mode.chain_lengths))]
    permuted = SpectralMode(
        eigenvalue=mode.eigenvalue,
        chain_lengths=tuple(mode.chain_lengths[k] for k in order),
        input_coupling=np.vstack([rows[k] for k in order]),
    )
    assert rank_condition(permuted).passes == rank_condition(mode).passes
    assert rank_condition(permuted).rank_found == rank_condition(mode).rank_found
    assert adjoint_trivial_solution(permuted) == adjoint_trivial_solution(mode)


def test_eigen_input_matches_rank_for_single_chains(rng):
    for _ in range(300):
        mode = random_mode(rng, single_chain=True)
        assert eigen_input_nonvanishing(mode) == rank_condition(mode).passes


@pytest.mark.parametrize("mu", [0.5, 1.5 + 2.0j])
def test_resolvent_criterion_matches_rank_condition(rng, mu):
    for _ in range(200):
        mode = random_mode(rng)
        assert resolvent_criterion(mode, mu).passes == rank_condition(mode).passes


def test_resolvent_criterion_rejects_mu_on_spectrum(decaying_mode):
    with pytest.raises(InvalidArgumentError):
        resolvent_criterion(decaying_mode, -1.0)


@pytest.mark.parametrize("rel_tol", [0.0, 1.0, -1e-3])
def test_rel_tol_must_lie_in_unit_interval(decaying_mode, rel_tol):
    with pytest.raises(InvalidArgumentError):
        rank_condition(decaying_mode, rel_tol)


def test_mode_verdict_consistency_is_enforced():
    with pytest.raises(ValidationError):
        ModeVerdict(mode_index=1, eigenvalue=0j, beta=1, rank_found=0, passes=True, margin=0.5)
    with pytest.raises(ValidationError):
        ModeVerdict(mode_index=1, eigenvalue=0j, beta=1, rank_found=1, passes=True, margin=0.0)


def test_report_passes_up_to_n(two_mode_system):
    report = controllability_report(two_mode_system)
    assert report.passed
    assert report.summary() == "pass-up-to-2"
    assert report.failing_index is None
    assert "first 2 modes" in report.notes[0]
    assert "T + nu = 1" in report.horizon_note


def test_report_fails_at_smallest_index():
    modes = [
        SpectralMode(eigenvalue=lam, chain_lengths=(1,), input_coupling=[[coupling]])
        for lam, coupling in ((-1.0, 1.0), (2j, 0.0), (-3.0, 0.0))
    ]
    report = controllability_report(ModalSystem.from_modes(modes))
    assert report.verdict == "fail-at-j"
    assert report.failing_index == 2
    assert report.summary() == "fail-at-2"
    assert [v.passes for v in report.verdicts] == [True, False, False]


def test_wave_preset_fails_at_first_even_mode(wave_system):
    report = controllability_report(wave_system)
    assert report.failing_index == 4
    assert wave_system.modes[3].eigenvalue == -2j


def test_report_flags_estimated_nu(two_mode_system):
    estimated = two_mode_system.model_copy(update={"nu_estimated": True})
    report = controllability_report(estimated)
    assert any("estimated" in note for note in report.notes)


def test_horizon_classification(two_mode_system):
    assert horizon_classification(two_mode_system, 0.5).startswith("necessary-only")
    assert horizon_classification(two_mode_system, 1.0).startswith("necessary-only")
    assert horizon_classification(two_mode_system, 2.0) == "necessary-and-sufficient"
