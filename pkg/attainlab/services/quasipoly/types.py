"""Types for quasi-polynomials with discrete delays."""
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from attainlab.services.errors import InvalidArgumentError


class QuasiPolynomial(BaseModel):
    """
    Data of Delta(z) = det(zI - sum_j A0_j z e^{-z h_j} - sum_j A_j e^{-z h_j}).

    ``delays[0]`` is 0; the j-th coefficient is the jump of the piecewise-constant
    kernel at tau = -h_j, so index 0 holds the undelayed coefficients.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: int = Field(..., ge=1)
    delays: Tuple[float, ...]
    neutral_coeffs: Tuple[np.ndarray, ...]
    retarded_coeffs: Tuple[np.ndarray, ...]

    @field_validator("delays", mode="before")
    @classmethod
    def _check_delays(cls, value):
        delays = tuple(float(h) for h in value)
        if not delays or delays[0] != 0.0:
            raise InvalidArgumentError("delays must start at 0")
        if any(b <= a for a, b in zip(delays, delays[1:])):
            raise InvalidArgumentError(f"delays must be strictly increasing, got {delays}")
        if not all(np.isfinite(delays)):
            raise InvalidArgumentError("delays must be finite")
        return delays

    @field_validator("neutral_coeffs", "retarded_coeffs", mode="before")
    @classmethod
    def _freeze_coeffs(cls, value):
        coeffs = []
        for matrix in value:
            array = np.atleast_2d(np.array(matrix, dtype=np.complex128))
            if not np.all(np.isfinite(array)):
                raise InvalidArgumentError("coefficient matrices must be finite")
            array.setflags(write=False)
            coeffs.append(array)
        return tuple(coeffs)

    @model_validator(mode="after")
    def _check_shapes(self):
        for name in ("neutral_coeffs", "retarded_coeffs"):
            coeffs = getattr(self, name)
            if len(coeffs) != len(self.delays):
                raise InvalidArgumentError(f"{name} needs one matrix per delay ({len(self.delays)}), got {len(coeffs)}")
            for matrix in coeffs:
                if matrix.shape != (self.dim, self.dim):
                    raise InvalidArgumentError(f"{name} matrices must be {self.dim}x{self.dim}, got {matrix.shape}")
        return self

    @property
    def max_delay(self) -> float:
        return self.delays[-1]

    @property
    def is_real(self) -> bool:
        return all(not np.any(m.imag) for m in self.neutral_coeffs + self.retarded_coeffs)

    @classmethod
    def scalar(cls, delays, neutral, retarded) -> "QuasiPolynomial":
        """Scalar (n = 1) quasi-polynomial from coefficient lists."""
        return cls(
            dim=1,
            delays=delays,
            neutral_coeffs=[[[c]] for c in neutral],
            retarded_coeffs=[[[c]] for c in retarded],
        )


class Region(BaseModel):
    """Axis-aligned rectangle [re_min, re_max] x [im_min, im_max]."""

    model_config = ConfigDict(frozen=True)

    re_min: float
    re_max: float
    im_min: float
    im_max: float

    @model_validator(mode="after")
    def _check_bounds(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise InvalidArgumentError(f"degenerate region {self.as_tuple()}")
        return self

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.re_min, self.re_max, self.im_min, self.im_max)

    @property
    def center(self) -> complex:
        return complex(0.5 * (self.re_min + self.re_max), 0.5 * (self.im_min + self.im_max))

    @property
    def width(self) -> float:
        return max(self.re_max - self.re_min, self.im_max - self.im_min)

    def contains(self, z: complex, slack: float = 0.0) -> bool:
        return (
            self.re_min - slack <= z.real <= self.re_max + slack
            and self.im_min - slack <= z.imag <= self.im_max + slack
        )

    def split(self, fraction: float = 0.5) -> Tuple["Region", ...]:
        """Four children cut at the given fraction along both axes."""
        re_cut = self.re_min + fraction * (self.re_max - self.re_min)
        im_cut = self.im_min + fraction * (self.im_max - self.im_min)
        return (
            Region(re_min=self.re_min, re_max=re_cut, im_min=self.im_min, im_max=im_cut),
            Region(re_min=re_cut, re_max=self.re_max, im_min=self.im_min, im_max=im_cut),
            Region(re_min=self.re_min, re_max=re_cut, im_min=im_cut, im_max=self.im_max),
            Region(re_min=re_cut, re_max=self.re_max, im_min=im_cut, im_max=self.im_max),
        )

    @classmethod
    def square(cls, center: complex, half_width: float) -> "Region":
        return cls(
            re_min=center.real - half_width,
            re_max=center.real + half_width,
            im_min=center.imag - half_width,
            im_max=center.imag + half_width,
        )


class RootCluster(BaseModel):
    """A root (or unresolved cluster) with its multiplicity."""

    model_config = ConfigDict(frozen=True)

    location: complex
    multiplicity: int = Field(..., ge=1)
    residual: float = Field(..., ge=0.0)
    resolved: bool = True

    @field_validator("location", mode="before")
    @classmethod
    def _coerce(cls, value):
        return complex(value)
