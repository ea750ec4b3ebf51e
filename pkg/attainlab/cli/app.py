"""Command line application factory."""
import logging
import sys

import click

from attainlab import __version__
from attainlab.cli.commands.attain import attain_command
from attainlab.cli.commands.check import check_command
from attainlab.cli.commands.minimality import minimality_command
from attainlab.cli.commands.presets import presets_command
from attainlab.cli.commands.spectrum import spectrum_command
from attainlab.config.settings import LOG_LEVEL
from attainlab.services.errors import AttainlabError

# Configure logging; stdout carries the JSON report
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.WARNING),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_ERROR = 1
EXIT_FAIL = 2
EXIT_USAGE = 64


class ExitCodeGroup(click.Group):
    """Click group mapping outcomes onto 0 pass / 2 fail / 1 error / 64 usage."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            code = super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
        except click.UsageError as e:
            e.show()
            code = EXIT_USAGE
        except click.ClickException as e:
            e.show()
            code = EXIT_ERROR
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_ERROR
        except AttainlabError as e:
            logger.error(f"{type(e).__name__}: {e.message}")
            click.echo(f"error: {e.message}", err=True)
            code = EXIT_ERROR
        except Exception as e:
            logger.error(f"Unexpected failure: {e}", exc_info=True)
            click.echo(f"error: {e}", err=True)
            code = EXIT_ERROR
        code = EXIT_PASS if code is None else int(code)
        if standalone_mode:
            sys.exit(code)
        return code


def create_cli() -> click.Group:
    """Create and configure the command group."""

    @click.group(cls=ExitCodeGroup, help="Spectral controllability and attainable-set toolkit.")
    @click.version_option(__version__, prog_name="attainlab")
    def cli():
        pass

    cli.add_command(spectrum_command)
    cli.add_command(minimality_command)
    cli.add_command(check_command)
    cli.add_command(attain_command)
    cli.add_command(presets_command)
    return cli


def main(argv=None) -> int:
    """Run the CLI and return its exit code."""
    return create_cli().main(args=argv, prog_name="attainlab", standalone_mode=False)
