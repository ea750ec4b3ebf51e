"""Test configuration and fixtures."""
import json

import numpy as np
import pytest
from click.testing import CliRunner

from attainlab.cli.app import create_cli
from attainlab.services.presets import preset_finite, preset_wave
from attainlab.services.quasipoly import QuasiPolynomial
from attainlab.services.spectral import ModalSystem, SpectralMode


def random_stable_system(
    rng: np.random.Generator,
    modes: int,
    inputs: int = 1,
    zero_rate: float = 0.0,
    spacing: float = 70.0,
    max_chain: int = 1,
) -> ModalSystem:
    """
    Random system with well-separated eigenvalues.

    Imaginary parts are spaced by ``spacing``; with spacing * t > 2 pi the
    Gramian at horizon t stays well conditioned. A fraction ``zero_rate`` of
    coupling blocks is exactly zero. With ``max_chain`` > 1 every mode gets a
    single Jordan chain of random length up to ``max_chain``.
    """
    built = []
    for j in range(modes):
        lam = complex(rng.uniform(-1.0, 0.0), spacing * (j - modes // 2))
        beta = int(rng.integers(1, max_chain + 1)) if max_chain > 1 else 1
        block = rng.normal(size=(beta, inputs)) + 1j * rng.normal(size=(beta, inputs))
        block /= np.linalg.norm(block)
        if rng.random() < zero_rate:
            block = np.zeros((beta, inputs))
        built.append(SpectralMode(eigenvalue=lam, chain_lengths=(beta,), input_coupling=block))
    return ModalSystem.from_modes(built, input_dim=inputs, expansion_time=0.0, minimality_interval=0.0)


@pytest.fixture
def rng():
    """Seeded generator so random acceptance loops are reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def random_system():
    """Factory for random diagonal systems, see random_stable_system."""
    return random_stable_system


@pytest.fixture
def decaying_mode():
    """Simple mode lambda = -1 with unit coupling."""
    return SpectralMode(eigenvalue=-1.0, chain_lengths=(1,), input_coupling=[[1.0]])


@pytest.fixture
def two_mode_system():
    """lambda_1 = -1 simple, lambda_2 = 2i with a chain of length 2."""
    return ModalSystem.from_modes(
        [
            SpectralMode(eigenvalue=-1.0, chain_lengths=(1,), input_coupling=[[1.0]]),
            SpectralMode(eigenvalue=2j, chain_lengths=(2,), input_coupling=[[0.5], [1.0]]),
        ],
        expansion_time=0.0,
        minimality_interval=1.0,
    )


@pytest.fixture
def wave_system():
    """String preset with K=3 (7 modes)."""
    return preset_wave(3)


@pytest.fixture
def controllable_finite():
    """Three-mode finite system with nonzero couplings."""
    return preset_finite([-1.0, -1.0 + 40j, -1.0 - 40j], [[1.0], [1.0], [1.0]])


@pytest.fixture
def lambert_quasipoly():
    """Delta(z) = z - e^{-z}."""
    return QuasiPolynomial.scalar(delays=[0.0, 1.0], neutral=[0.0, 0.0], retarded=[0.0, 1.0])


@pytest.fixture
def runner():
    """Create a CLI runner."""
    return CliRunner()


@pytest.fixture
def cli():
    """Create the command group."""
    return create_cli()


@pytest.fixture
def write_model(tmp_path):
    """Write a model document to a temporary JSON file and return its path."""

    def _write(document, name="model.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)

    return _write
