"""presets: list the built-in models."""
import click

from attainlab.cli.commands.common import emit_report, report_options
from attainlab.services.presets import describe_presets


@click.command("presets")
@report_options
def presets_command(no_timestamp, out):
    """List the available presets with their parameters and defaults."""
    return emit_report("presets", {}, b"", {"presets": describe_presets()}, [], None, no_timestamp, out)
