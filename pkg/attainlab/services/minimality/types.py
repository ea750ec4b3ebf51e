"""Types for exponential families and their biorthogonal sections."""
from collections import defaultdict
from typing import Literal, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from attainlab.services.errors import InvalidArgumentError


class QuadratureSpec(BaseModel):
    """How Gram entries are integrated."""

    model_config = ConfigDict(frozen=True)

    # "auto": closed forms where they are stable, adaptive quadrature elsewhere
    method: Literal["auto", "adaptive"] = "auto"
    epsabs: float = Field(1e-14, gt=0)
    epsrel: float = Field(1e-12, gt=0)
    limit: int = Field(200, ge=10)


class ExponentialFamily(BaseModel):
    """
    Functions f_i(t) = (-t)^k e^{-lambda t} on [0, nu].

    Powers start at 0, so each eigenvalue of multiplicity alpha contributes
    k = 0..alpha-1.
    """

    model_config = ConfigDict(frozen=True)

    entries: Tuple[Tuple[complex, int], ...]
    interval_end: float = Field(..., gt=0)

    @field_validator("entries", mode="before")
    @classmethod
    def _coerce(cls, value):
        return tuple((complex(lam), int(power)) for lam, power in value)

    @model_validator(mode="after")
    def _check_entries(self):
        if len(set(self.entries)) != len(self.entries):
            raise InvalidArgumentError("family entries must be distinct (lambda, k) pairs")
        powers = defaultdict(set)
        for lam, power in self.entries:
            if power < 0:
                raise InvalidArgumentError(f"negative power {power} for lambda={lam}")
            powers[lam].add(power)
        for lam, present in powers.items():
            if present != set(range(len(present))):
                raise InvalidArgumentError(f"powers for lambda={lam} must be 0..alpha-1, got {sorted(present)}")
        return self

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.array([lam for lam, _ in self.entries], dtype=np.complex128)

    @property
    def powers(self) -> np.ndarray:
        return np.array([power for _, power in self.entries], dtype=int)


class BiorthogonalTruncation(BaseModel):
    """
    Coefficients of y_j(t) = sum_i C[j, i] conj(f_i(t)) with int f_i y_j = delta_ij.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    family: ExponentialFamily
    sections: int
    coefficients: np.ndarray
    gram_condition: float
    margin: float
    residual: float
