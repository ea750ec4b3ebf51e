"""spectrum: roots and exponential type of a quasi-polynomial."""
import click

from attainlab.cli.commands.common import emit_report, load_model_input, model_option, parse_region, report_options
from attainlab.config.settings import NU_MARGIN, ROOT_TOL
from attainlab.services.errors import InvalidArgumentError
from attainlab.services.quasipoly import Region, exponential_type, find_roots
from attainlab.services.quasipoly.types import QuasiPolynomial


@click.command("spectrum")
@model_option
@click.option("--region", callback=parse_region, default=None, help="re_min,re_max,im_min,im_max")
@click.option("--tol", type=float, default=ROOT_TOL, show_default=True, help="Root residual tolerance")
@report_options
def spectrum_command(model_path, region, tol, no_timestamp, out):
    """Find the roots of Delta in a rectangle and estimate its exponential type."""
    raw, model_file = load_model_input(model_path)
    q = model_file.to_domain()
    if not isinstance(q, QuasiPolynomial):
        raise InvalidArgumentError(f"spectrum needs a quasipoly model, got kind '{model_file.kind}'")
    if region is None:
        region = model_file.region
    if region is None:
        raise click.UsageError("--region is required when the model file has none")

    roots = find_roots(q, Region(re_min=region[0], re_max=region[1], im_min=region[2], im_max=region[3]), tol=tol)
    estimate = exponential_type(q)
    nu = max(estimate.omega, 0.0) * (1.0 + NU_MARGIN)

    warnings = [
        f"estimated ω: exponential type {estimate.omega:.6g} sampled at radii {estimate.radii}",
        f"roots are reported for the region {list(region)} only",
    ]
    unresolved = [root for root in roots if not root.resolved]
    if unresolved:
        warnings.append(f"{len(unresolved)} unresolved root clusters: residual above tol or rectangle not separable")

    results = {
        "region": list(region),
        "roots": [root.model_dump() for root in roots],
        "root_count": sum(root.multiplicity for root in roots),
        "exponential_type": estimate.model_dump(),
        "nu": nu,
        "nu_margin": NU_MARGIN,
    }
    arguments = {"model": model_path, "region": list(region), "tol": tol}
    return emit_report("spectrum", arguments, raw, results, warnings, None, no_timestamp, out)
