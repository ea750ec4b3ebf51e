"""minimality: Gram margins and biorthogonal sections."""
import click

from attainlab.cli.commands.common import (
    ESTIMATED_OMEGA_WARNING,
    emit_report,
    load_model_input,
    model_option,
    report_options,
)
from attainlab.config.settings import BIORTH_THRESHOLD
from attainlab.services.errors import IllConditionedFamilyError, InvalidArgumentError
from attainlab.services.minimality import (
    biorthogonal_truncation,
    family_from_system,
    minimality_verdict,
    section_margins,
)
from attainlab.services.minimality.gram import FINITE_SECTION_NOTE


@click.command("minimality")
@model_option
@click.option("--sections", type=int, default=None, help="Number of family members n (default: all)")
@click.option("--tol", type=float, default=BIORTH_THRESHOLD, show_default=True, help="Relative margin threshold")
@report_options
def minimality_command(model_path, sections, tol, no_timestamp, out):
    """Check minimality of the system's exponential family on finite sections."""
    raw, model_file = load_model_input(model_path)
    system = model_file.to_modal_system()
    family = family_from_system(system)
    n = family.size if sections is None else sections
    if not 1 <= n <= family.size:
        raise InvalidArgumentError(f"--sections {n} outside 1..{family.size}")

    margins = section_margins(family, n)
    results = {
        "sections": n,
        "family_size": family.size,
        "interval_end": family.interval_end,
        "margins": margins,
        "verdict": minimality_verdict(margins),
    }
    try:
        section = biorthogonal_truncation(family, n, threshold=tol)
        results["biorthogonal"] = {
            "residual": section.residual,
            "margin": section.margin,
            "gram_condition": section.gram_condition,
        }
        passed = True
    except IllConditionedFamilyError as e:
        results["biorthogonal"] = {"error": e.message, "margin": e.margin, "threshold": e.threshold}
        passed = False

    warnings = [f"finite-section evidence: {n} of {family.size} members; {FINITE_SECTION_NOTE}"]
    if system.nu_estimated:
        warnings.append(ESTIMATED_OMEGA_WARNING)
    arguments = {"model": model_path, "sections": n, "tol": tol}
    return emit_report("minimality", arguments, raw, results, warnings, passed, no_timestamp, out)
