from typing import Optional

import click

from ..core.config import settings
from ..models.solver import SolverSettings
from ..services.report import render_extremum, render_root, to_json
from ..services.solver import find_extremum, newton_root
from .common import emit, json_option, read_table, table_option


def _solver_settings(tol: Optional[float], max_iter: Optional[int]) -> SolverSettings:
    overrides = {}
    if tol is not None:
        overrides["tol_residual"] = tol
    if max_iter is not None:
        overrides["max_iter"] = max_iter
    return SolverSettings(**overrides)


tol_option = click.option("--tol", type=float, default=None,
                          help=f"Residual tolerance [default: {settings.NEVDERIV_TOL_RESIDUAL}]")
max_iter_option = click.option("--max-iter", type=int, default=None,
                               help=f"Iteration limit [default: {settings.NEVDERIV_MAX_ITER}]")


@click.command("solve")
@table_option
@click.option("--target", required=True, type=float, help="Ordinate to solve for")
@click.option("--x0", required=True, type=float, help="Starting abscissa")
@click.option("--degree", default=settings.NEVDERIV_DEFAULT_DEGREE, show_default=True, type=int)
@tol_option
@max_iter_option
@json_option
def solve_command(table_path: str, target: float, x0: float, degree: int,
                  tol: Optional[float], max_iter: Optional[int], as_json: bool) -> int:
    """Newton-Raphson for P(x) = target"""
    table = read_table(table_path)
    result = newton_root(table, degree, target, x0, _solver_settings(tol, max_iter))

    emit(to_json(result.model_dump(mode="json")) if as_json else render_root(result))
    return 0


@click.command("extremum")
@table_option
@click.option("--x0", required=True, type=float, help="Starting abscissa")
@click.option("--degree", default=settings.NEVDERIV_DEFAULT_DEGREE, show_default=True, type=int)
@tol_option
@max_iter_option
@json_option
def extremum_command(table_path: str, x0: float, degree: int,
                     tol: Optional[float], max_iter: Optional[int], as_json: bool) -> int:
    """Local minimum or maximum of the interpolant near x0"""
    table = read_table(table_path)
    result = find_extremum(table, degree, x0, _solver_settings(tol, max_iter))

    emit(to_json(result.model_dump(mode="json")) if as_json else render_extremum(result))
    return 0
