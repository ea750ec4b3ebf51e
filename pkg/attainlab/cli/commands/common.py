"""Shared options and report emission for CLI commands."""
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import click

from attainlab.schemas.request.model_file import parse_model_bytes, read_model_bytes
from attainlab.schemas.response.run_report import RunReport, input_digest, utc_timestamp
from attainlab.services.errors import InvalidArgumentError
from attainlab.services.spectral.types import ModalSystem

logger = logging.getLogger(__name__)

ESTIMATED_OMEGA_WARNING = "estimated ω: nu and the threshold T + nu rest on a sampled exponential type"


def parse_float_list(ctx, param, value: Optional[str]) -> Optional[List[float]]:
    """Click callback for comma-separated numbers."""
    if value is None:
        return None
    try:
        return [float(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got {value!r}")


def parse_region(ctx, param, value: Optional[str]) -> Optional[Tuple[float, float, float, float]]:
    """Click callback for --region re_min,re_max,im_min,im_max."""
    numbers = parse_float_list(ctx, param, value)
    if numbers is None:
        return None
    if len(numbers) != 4:
        raise click.BadParameter(f"expected 4 numbers re_min,re_max,im_min,im_max, got {len(numbers)}")
    return tuple(numbers)


def model_option(func):
    return click.option("--model", "model_path", required=True, type=click.Path(dir_okay=False), help="Model file (JSON)")(func)


def report_options(func):
    func = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Also write the report here")(func)
    func = click.option("--no-timestamp", is_flag=True, default=False, help="Omit the timestamp field")(func)
    return func


def load_model_input(model_path: str):
    """Raw bytes (for the digest) and the validated model document."""
    raw = read_model_bytes(model_path)
    return raw, parse_model_bytes(raw, model_path)


def truncate_system(system: ModalSystem, modes: Optional[int]) -> ModalSystem:
    if modes is None:
        return system
    if not 1 <= modes <= system.size:
        raise InvalidArgumentError(f"--modes {modes} outside 1..{system.size}")
    return system.truncate(modes)


def emit_report(
    command: str,
    arguments: Dict[str, Any],
    raw: bytes,
    results: Dict[str, Any],
    warnings: List[str],
    passed: Optional[bool],
    no_timestamp: bool,
    out: Optional[str],
) -> int:
    """
    Print the report as JSON and translate the verdict into an exit code.

    Returns:
        0 when passed is True or None, 2 when passed is False
    """
    report = RunReport(
        command=command,
        arguments=arguments,
        input_digest=input_digest(raw, arguments),
        passed=passed,
        results=results,
        warnings=warnings,
        timestamp=None if no_timestamp else utc_timestamp(),
    )
    text = report.to_json()
    click.echo(text)
    if out:
        Path(out).write_text(text + "\n")
        logger.info(f"Report written to {out}")
    return 2 if passed is False else 0
