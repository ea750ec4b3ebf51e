"""check: mode-by-mode controllability verdict."""
import click

from attainlab.cli.commands.common import (
    ESTIMATED_OMEGA_WARNING,
    emit_report,
    load_model_input,
    model_option,
    report_options,
    truncate_system,
)
from attainlab.config.settings import RANK_REL_TOL
from attainlab.services.controllability import controllability_report, horizon_classification


@click.command("check")
@model_option
@click.option("--modes", type=int, default=None, help="Check only the first N modes")
@click.option("--tol", type=float, default=RANK_REL_TOL, show_default=True, help="Relative rank tolerance")
@click.option("--horizon", type=float, default=None, help="Classify this horizon t1 against T + nu")
@report_options
def check_command(model_path, modes, tol, horizon, no_timestamp, out):
    """Run the rank condition on every mode of the truncated spectrum."""
    raw, model_file = load_model_input(model_path)
    system = truncate_system(model_file.to_modal_system(), modes)
    report = controllability_report(system, rel_tol=tol)

    results = report.model_dump()
    results["summary"] = report.summary()
    if horizon is not None:
        results["horizon_classification"] = {"t1": horizon, "applies": horizon_classification(system, horizon)}

    warnings = [f"truncation: {report.modes_checked} modes examined; modes beyond the truncation were not examined"]
    if report.passed:
        warnings.append(f"pass-up-to-N only: N={report.modes_checked}")
    if system.nu_estimated:
        warnings.append(ESTIMATED_OMEGA_WARNING)
    arguments = {"model": model_path, "modes": system.size, "tol": tol, "horizon": horizon}
    return emit_report("check", arguments, raw, results, warnings, report.passed, no_timestamp, out)
