import sys
from typing import BinaryIO, Optional, Sequence, TextIO

import click

from .cli.common import CliStreams
from .cli.evaluate import evaluate_command
from .cli.reproduce import reproduce_command
from .cli.solve import extremum_command, solve_command
from .core.errors import NevilleError, error_line
from .core.logging import configure_logging


@click.group(no_args_is_help=False)
@click.pass_context
def main(ctx: click.Context):
    """Polynomial interpolation with derivatives over tabulated functions"""
    configure_logging(stream=ctx.find_object(CliStreams).stderr)


# Register subcommands
main.add_command(evaluate_command)
main.add_command(solve_command)
main.add_command(extremum_command)
main.add_command(reproduce_command)


def run(
    argv: Optional[Sequence[str]] = None,
    stdin: Optional[BinaryIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Run one command line invocation and return its exit code.

    0 on success, 1 for domain errors (one ``nevderiv: error[code]: ...`` line
    on stderr), 2 for usage errors.
    """
    streams = CliStreams(
        stdin=stdin if stdin is not None else sys.stdin.buffer,
        stdout=stdout if stdout is not None else sys.stdout,
        stderr=stderr if stderr is not None else sys.stderr,
    )
    args = list(argv) if argv is not None else sys.argv[1:]

    try:
        result = main.main(args=args, prog_name="nevderiv", obj=streams, standalone_mode=False)
    except click.ClickException as e:
        e.show(file=streams.stderr)
        return e.exit_code
    except click.Abort:
        streams.stderr.write("Aborted!\n")
        return 1
    except NevilleError as e:
        streams.stderr.write(error_line(e) + "\n")
        return 1

    return result if isinstance(result, int) else 0
