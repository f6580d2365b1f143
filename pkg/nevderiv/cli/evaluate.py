import click

from ..core.config import settings
from ..services.report import render_stack, stack_document, to_json
from ..services.table import interpolate_at, locate_window
from .common import emit, json_option, read_table, table_option


@click.command("eval")
@table_option
@click.option("--x", "x", required=True, type=float, help="Abscissa to evaluate at")
@click.option("--degree", default=settings.NEVDERIV_DEFAULT_DEGREE, show_default=True, type=int)
@click.option("--order", default=settings.NEVDERIV_DEFAULT_ORDER, show_default=True, type=int,
              help="Highest derivative order")
@click.option("--strict-domain/--no-strict-domain", default=settings.NEVDERIV_STRICT_DOMAIN, show_default=True,
              help="Refuse abscissas outside the table range")
@json_option
def evaluate_command(table_path: str, x: float, degree: int, order: int, strict_domain: bool, as_json: bool) -> int:
    """Interpolated value and derivatives at one abscissa"""
    table = read_table(table_path)
    stack = interpolate_at(table, x, degree, order, strict_domain=strict_domain)
    window = locate_window(table, x, degree)

    emit(to_json(stack_document(stack, window)) if as_json else render_stack(stack, window))
    return 0
