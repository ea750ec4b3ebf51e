"""Whole-system controllability verdicts over a truncated spectrum."""
import logging

from attainlab.config.settings import RANK_REL_TOL
from attainlab.services.controllability.criteria import rank_condition
from attainlab.services.controllability.types import ControllabilityReport
from attainlab.services.errors import InvalidArgumentError
from attainlab.services.parallel import ordered_map
from attainlab.services.spectral.types import ModalSystem

logger = logging.getLogger(__name__)

TRUNCATION_NOTE = "only the first {n} modes of the spectrum were examined; pass-up-to-N says nothing about the rest"


def horizon_classification(system: ModalSystem, t1: float) -> str:
    """Which part of the criterion applies on [0, t1]."""
    if t1 > system.threshold_time:
        return "necessary-and-sufficient"
    return "necessary-only (undetermined by the criterion)"


def controllability_report(system: ModalSystem, rel_tol: float = RANK_REL_TOL) -> ControllabilityReport:
    """
    Run the rank test on every mode and assemble the verdict.

    The verdict is fail-at-j for the smallest failing index j, pass-up-to-N
    otherwise. The criterion is necessary for any t1 and sufficient for
    t1 > T + nu.
    """
    if system.size == 0:
        raise InvalidArgumentError("controllability_report needs a nonempty system")

    verdicts = ordered_map(lambda mode: rank_condition(mode, rel_tol), system.modes)
    failing = next((v.mode_index for v in verdicts if not v.passes), None)
    threshold = system.threshold_time
    horizon_note = (
        f"approximately null-controllable on [0, t1] requires the rank condition for every t1 and it suffices "
        f"for t1 > T + nu = {threshold:.6g}; t1 in (0, {threshold:.6g}] is undetermined by the criterion"
    )
    notes = [TRUNCATION_NOTE.format(n=system.size)]
    if system.nu_estimated:
        notes.append("nu is derived from an estimated exponential type")

    if failing is None:
        logger.info(f"All {system.size} modes pass the rank condition")
    else:
        logger.info(f"Rank condition fails at mode {failing}")
    return ControllabilityReport(
        verdicts=verdicts,
        modes_checked=system.size,
        verdict="pass-up-to-N" if failing is None else "fail-at-j",
        failing_index=failing,
        rel_tol=rel_tol,
        threshold_time=threshold,
        horizon_note=horizon_note,
        notes=notes,
    )
