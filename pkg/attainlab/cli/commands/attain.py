"""attain: closure independence of the attainable set across horizons."""
import click

from attainlab.cli.commands.common import (
    ESTIMATED_OMEGA_WARNING,
    emit_report,
    load_model_input,
    model_option,
    parse_float_list,
    report_options,
)
from attainlab.config.settings import GRAMIAN_RANK_TOL, INDEPENDENCE_TOL
from attainlab.services.attainable import closure_independence_experiment, free_motion_gap
from attainlab.services.errors import InvalidArgumentError


@click.command("attain")
@model_option
@click.option("--horizons", required=True, callback=parse_float_list, help="t1,t2,... strictly increasing")
@click.option("--modes", type=int, default=None, help="Truncation size n (default: all modes)")
@click.option("--tol", type=float, default=INDEPENDENCE_TOL, show_default=True, help="Largest accepted subspace distance")
@click.option("--rank-tol", type=float, default=GRAMIAN_RANK_TOL, show_default=True, help="Relative Gramian rank cutoff")
@report_options
def attain_command(model_path, horizons, modes, tol, rank_tol, no_timestamp, out):
    """Compare attainable subspaces of the truncated system across horizons."""
    raw, model_file = load_model_input(model_path)
    system = model_file.to_modal_system()
    n = system.size if modes is None else modes
    if not 1 <= n <= system.size:
        raise InvalidArgumentError(f"--modes {n} outside 1..{system.size}")

    report = closure_independence_experiment(system, horizons, n, rank_tol=rank_tol, tol=tol)
    results = report.model_dump()
    results["free_motion_gap"] = {
        "t": horizons[-1],
        "gap": free_motion_gap(system, horizons[-1], n, rank_tol=rank_tol),
    }

    warnings = [f"finite-section evidence: {n} of {system.size} modes; the closure claim is evidenced, not proven"]
    uncovered = [t for t in horizons if t <= system.threshold_time]
    if uncovered:
        warnings.append(f"horizons {uncovered} do not exceed T + nu = {system.threshold_time:.6g} and are not judged")
    if system.nu_estimated:
        warnings.append(ESTIMATED_OMEGA_WARNING)
    arguments = {"model": model_path, "horizons": horizons, "modes": n, "tol": tol, "rank_tol": rank_tol}
    return emit_report("attain", arguments, raw, results, warnings, report.passed, no_timestamp, out)
