from dataclasses import dataclass
from typing import BinaryIO, TextIO

import click

from ..core.errors import TableUnreadable
from ..models.table import TabulatedFunction
from ..services.table import load_table


@dataclass
class CliStreams:
    stdin: BinaryIO
    stdout: TextIO
    stderr: TextIO


def streams() -> CliStreams:
    return click.get_current_context().find_object(CliStreams)


def read_table(path: str) -> TabulatedFunction:
    """Load a table file; '-' reads standard input"""
    if path == "-":
        return load_table(streams().stdin, name="<stdin>")
    try:
        with open(path, "rb") as f:
            return load_table(f, name=path)
    except OSError as e:
        raise TableUnreadable(f"{path}: {e.strerror or e}")


def emit(text: str) -> None:
    """Write a complete document to stdout in one call"""
    out = streams().stdout
    out.write(text)
    out.flush()


table_option = click.option(
    "--table", "table_path", required=True, type=click.Path(dir_okay=False, allow_dash=True),
    help="Table file (x y per line), '-' for stdin",
)
json_option = click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text")
