"""
Domain types for modal spectral data.

A system is described only through its truncated spectrum: each eigenvalue
carries its Jordan chain lengths and the coupling rows B*Psi_j of the input
operator against the (biorthogonally normalized) adjoint chain vectors. The
rows of ``input_coupling`` are stacked chain by chain; inside a chain the last
row belongs to the adjoint eigenvector.
"""
import math
from typing import List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy.linalg import block_diag

from attainlab.services.errors import InvalidArgumentError


def _frozen_array(value) -> np.ndarray:
    array = np.array(value, dtype=np.complex128)
    array.setflags(write=False)
    return array


def spectral_sort_key(eigenvalue: complex) -> Tuple[float, float, float]:
    """
    Ordering key for eigenvalues.

    Non-decreasing modulus, ties broken by the argument taken in (-pi, pi],
    then by the imaginary part.
    """
    eigenvalue = complex(eigenvalue)
    argument = math.atan2(eigenvalue.imag, eigenvalue.real)
    if argument == -math.pi:
        argument = math.pi
    return (abs(eigenvalue), argument, eigenvalue.imag)


class JordanBlockMatrix(BaseModel):
    """Single Jordan block lambda*I + E with E the superdiagonal nilpotent."""

    model_config = ConfigDict(frozen=True)

    eigenvalue: complex
    size: int = Field(..., ge=1)

    @field_validator("eigenvalue", mode="before")
    @classmethod
    def _coerce(cls, value):
        return complex(value)

    @property
    def nilpotent(self) -> np.ndarray:
        return np.eye(self.size, k=1, dtype=np.complex128)

    @property
    def matrix(self) -> np.ndarray:
        return self.eigenvalue * np.eye(self.size, dtype=np.complex128) + self.nilpotent


class SpectralMode(BaseModel):
    """One eigenvalue with its Jordan structure and input coupling block."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eigenvalue: complex
    chain_lengths: Tuple[int, ...]
    input_coupling: np.ndarray
    index: int = Field(1, ge=1)

    @field_validator("chain_lengths", mode="before")
    @classmethod
    def _check_chains(cls, value):
        chains = tuple(int(length) for length in value)
        if not chains:
            raise InvalidArgumentError("a mode needs at least one Jordan chain")
        if any(length < 1 for length in chains):
            raise InvalidArgumentError(f"chain lengths must be >= 1, got {chains}")
        return chains

    @field_validator("input_coupling", mode="before")
    @classmethod
    def _check_coupling(cls, value):
        array = np.array(value, dtype=np.complex128)
        if array.ndim == 1:
            array = array.reshape(-1, 1)
        if array.ndim != 2:
            raise InvalidArgumentError("input_coupling must be a 2-D matrix")
        if not np.all(np.isfinite(array)):
            raise InvalidArgumentError("input_coupling has non-finite entries")
        return _frozen_array(array)

    @field_validator("eigenvalue", mode="before")
    @classmethod
    def _check_eigenvalue(cls, value):
        value = complex(value)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise InvalidArgumentError(f"eigenvalue must be finite, got {value}")
        return value

    @model_validator(mode="after")
    def _check_shapes(self):
        if self.input_coupling.shape[0] != sum(self.chain_lengths):
            raise InvalidArgumentError(
                f"mode {self.index}: coupling has {self.input_coupling.shape[0]} rows, "
                f"chains sum to {sum(self.chain_lengths)}"
            )
        return self

    @property
    def beta(self) -> int:
        """Algebraic multiplicity (sum of chain lengths)."""
        return sum(self.chain_lengths)

    @property
    def input_dim(self) -> int:
        return self.input_coupling.shape[1]

    def eigenvector_rows(self) -> List[int]:
        """Row index of the adjoint eigenvector in each chain (last row of the chain)."""
        rows = []
        offset = 0
        for length in self.chain_lengths:
            offset += length
            rows.append(offset - 1)
        return rows

    def jordan_blocks(self) -> List[JordanBlockMatrix]:
        return [JordanBlockMatrix(eigenvalue=self.eigenvalue, size=length) for length in self.chain_lengths]

    def jordan_matrix(self) -> np.ndarray:
        """Dense Lambda_j: block diagonal of one Jordan block per chain."""
        return block_diag(*[block.matrix for block in self.jordan_blocks()]).astype(np.complex128)

    def with_coupling(self, coupling) -> "SpectralMode":
        return SpectralMode(
            eigenvalue=self.eigenvalue,
            chain_lengths=self.chain_lengths,
            input_coupling=coupling,
            index=self.index,
        )


class ModalSystem(BaseModel):
    """Ordered finite truncation of a system's spectral data."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    modes: Tuple[SpectralMode, ...]
    input_dim: int = Field(..., ge=1)
    expansion_time: float = Field(0.0, ge=0.0)
    minimality_interval: float = Field(0.0, ge=0.0)
    nu_estimated: bool = False

    @model_validator(mode="after")
    def _check_modes(self):
        keys = [spectral_sort_key(mode.eigenvalue) for mode in self.modes]
        if keys != sorted(keys):
            raise InvalidArgumentError("modes are not in spectral order; build the system with ModalSystem.from_modes")
        eigenvalues = [mode.eigenvalue for mode in self.modes]
        if len(set(eigenvalues)) != len(eigenvalues):
            raise InvalidArgumentError("eigenvalues must be pairwise distinct")
        for position, mode in enumerate(self.modes, start=1):
            if mode.index != position:
                raise InvalidArgumentError(f"mode at position {position} carries index {mode.index}")
            if mode.input_dim != self.input_dim:
                raise InvalidArgumentError(
                    f"mode {position} has {mode.input_dim} coupling columns, system input_dim is {self.input_dim}"
                )
        return self

    @classmethod
    def from_modes(
        cls,
        modes: Sequence[SpectralMode],
        input_dim: int = None,
        expansion_time: float = 0.0,
        minimality_interval: float = 0.0,
        nu_estimated: bool = False,
    ) -> "ModalSystem":
        """
        Sort modes into spectral order and re-index them 1..N.

        Args:
            modes: Modes in any order
            input_dim: Number of inputs r (inferred from the first mode if omitted)
            expansion_time: Onset T of the spectral expansion
            minimality_interval: Claimed minimality horizon nu
            nu_estimated: Whether nu comes from an estimated exponential type

        Returns:
            A validated ModalSystem
        """
        if input_dim is None:
            if not modes:
                raise InvalidArgumentError("input_dim is required for an empty system")
            input_dim = modes[0].input_dim
        ordered = sorted(modes, key=lambda mode: spectral_sort_key(mode.eigenvalue))
        reindexed = tuple(
            SpectralMode(
                eigenvalue=mode.eigenvalue,
                chain_lengths=mode.chain_lengths,
                input_coupling=mode.input_coupling,
                index=position,
            )
            for position, mode in enumerate(ordered, start=1)
        )
        return cls(
            modes=reindexed,
            input_dim=input_dim,
            expansion_time=expansion_time,
            minimality_interval=minimality_interval,
            nu_estimated=nu_estimated,
        )

    @property
    def size(self) -> int:
        return len(self.modes)

    @property
    def threshold_time(self) -> float:
        """T + nu, the sufficiency horizon."""
        return self.expansion_time + self.minimality_interval

    def block_sizes(self, n: int = None) -> List[int]:
        modes = self.modes if n is None else self.modes[:n]
        return [mode.beta for mode in modes]

    def truncate(self, n: int) -> "ModalSystem":
        """First n modes of the spectral truncation."""
        if not 1 <= n <= self.size:
            raise InvalidArgumentError(f"truncation index {n} outside 1..{self.size}")
        return ModalSystem(
            modes=self.modes[:n],
            input_dim=self.input_dim,
            expansion_time=self.expansion_time,
            minimality_interval=self.minimality_interval,
            nu_estimated=self.nu_estimated,
        )


class ModalVector(BaseModel):
    """Per-mode coordinate blocks (v, Psi_j)^T."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    blocks: Tuple[np.ndarray, ...]

    @field_validator("blocks", mode="before")
    @classmethod
    def _check_blocks(cls, value):
        blocks = []
        for block in value:
            array = np.array(block, dtype=np.complex128).reshape(-1)
            if not np.all(np.isfinite(array)):
                raise InvalidArgumentError("modal vector has non-finite entries")
            blocks.append(_frozen_array(array))
        return tuple(blocks)

    @classmethod
    def zeros_like(cls, system: ModalSystem) -> "ModalVector":
        return cls(blocks=[np.zeros(beta, dtype=np.complex128) for beta in system.block_sizes()])

    @classmethod
    def from_flat(cls, system: ModalSystem, flat) -> "ModalVector":
        flat = np.asarray(flat, dtype=np.complex128).reshape(-1)
        sizes = system.block_sizes()
        if flat.size != sum(sizes):
            raise InvalidArgumentError(f"flat vector has {flat.size} entries, system needs {sum(sizes)}")
        return cls(blocks=np.split(flat, np.cumsum(sizes)[:-1]))

    def to_flat(self) -> np.ndarray:
        if not self.blocks:
            return np.zeros(0, dtype=np.complex128)
        return np.concatenate(self.blocks)

    def check_against(self, system: ModalSystem) -> None:
        """Raise unless the block lengths match the system's multiplicities."""
        sizes = [block.size for block in self.blocks]
        if sizes != system.block_sizes():
            raise InvalidArgumentError(f"block lengths {sizes} do not match multiplicities {system.block_sizes()}")
