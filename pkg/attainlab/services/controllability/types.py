"""Verdict types for the controllability criteria."""
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ModeVerdict(BaseModel):
    """Outcome of the rank test rank[lambda I - Lambda_j, B*Psi_j] = beta_j."""

    model_config = ConfigDict(frozen=True)

    mode_index: int
    eigenvalue: complex
    beta: int = Field(..., ge=1)
    rank_found: int = Field(..., ge=0)
    passes: bool
    margin: float = Field(..., ge=0.0)
    singular_values: List[float] = Field(default_factory=list)

    @model_validator(mode="after")
    def _consistent(self):
        if self.passes != (self.rank_found == self.beta):
            raise ValueError("passes must equal (rank_found == beta)")
        if (self.margin > 0) != self.passes:
            raise ValueError("margin is positive exactly when the mode passes")
        return self


class ControllabilityReport(BaseModel):
    """Verdicts over a truncated spectrum."""

    model_config = ConfigDict(frozen=True)

    verdicts: List[ModeVerdict]
    modes_checked: int
    verdict: Literal["pass-up-to-N", "fail-at-j"]
    failing_index: Optional[int] = None
    rel_tol: float
    threshold_time: float
    horizon_note: str
    notes: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass-up-to-N"

    def summary(self) -> str:
        if self.passed:
            return f"pass-up-to-{self.modes_checked}"
        return f"fail-at-{self.failing_index}"
