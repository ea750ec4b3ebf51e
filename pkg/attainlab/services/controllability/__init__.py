"""Per-mode approximate null-controllability criteria."""
from attainlab.services.controllability.types import ControllabilityReport, ModeVerdict
from attainlab.services.controllability.criteria import (
    adjoint_trivial_solution,
    eigen_input_nonvanishing,
    rank_condition,
    resolvent_criterion,
)
from attainlab.services.controllability.report import controllability_report, horizon_classification

__all__ = [
    "ControllabilityReport",
    "ModeVerdict",
    "adjoint_trivial_solution",
    "eigen_input_nonvanishing",
    "rank_condition",
    "resolvent_criterion",
    "controllability_report",
    "horizon_classification",
]
