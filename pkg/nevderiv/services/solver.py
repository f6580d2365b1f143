"""
Newton-Raphson on tabulated functions.

Both searches re-select the interpolation window at every iterate, so the
function being solved is the piecewise polynomial seen by interpolate_at.
Iterates are clamped to the table range; there is no line search.
"""
import logging
import math
from typing import Optional

from ..core.errors import DerivativeVanished, InvalidDegree, NonFiniteInput, OutOfDomain
from ..models.solver import ExtremumKind, ExtremumResult, RootResult, SolverSettings
from ..models.table import TabulatedFunction
from .table import interpolate_at

logger = logging.getLogger(__name__)


def _check_start(table: TabulatedFunction, x0: float) -> float:
    if not math.isfinite(x0):
        raise NonFiniteInput(f"starting point {x0!r} is not finite")
    if not table.contains(x0):
        raise OutOfDomain(f"x0={x0!r} is outside [{table.lower!r}, {table.upper!r}]")
    return float(x0)


def _clamp(table: TabulatedFunction, x: float) -> float:
    return min(max(x, table.lower), table.upper)


def newton_root(
    table: TabulatedFunction,
    degree: int,
    target: float,
    x0: float,
    settings: Optional[SolverSettings] = None,
) -> RootResult:
    """Abscissa where the interpolant equals ``target``, starting from x0"""
    settings = settings or SolverSettings()
    if not math.isfinite(target):
        raise NonFiniteInput(f"target {target!r} is not finite")
    x = _check_start(table, x0)
    floor = settings.floor_for(table)
    iterations = 0

    while True:
        stack = interpolate_at(table, x, degree, 1)
        residual = stack.values[0] - target
        logger.debug("root iter=%d x=%r residual=%.3e slope=%.3e", iterations, x, residual, stack.values[1])

        if abs(residual) <= settings.tol_residual:
            return RootResult(x=x, residual=residual, iterations=iterations, converged=True)
        if iterations >= settings.max_iter:
            logger.info("root search stopped after %d iterations at x=%r", iterations, x)
            return RootResult(x=x, residual=residual, iterations=iterations, converged=False)

        slope = stack.values[1]
        if abs(slope) < floor:
            raise DerivativeVanished(x, slope, floor, order=1)

        proposed = _clamp(table, x - residual / slope)
        iterations += 1
        step, x = proposed - x, proposed

        if abs(step) <= settings.tol_step:
            residual = interpolate_at(table, x, degree, 0).values[0] - target
            return RootResult(
                x=x,
                residual=residual,
                iterations=iterations,
                converged=abs(residual) <= settings.tol_residual,
            )


def _classify(curvature: float, floor: float) -> ExtremumKind:
    if abs(curvature) <= floor:
        return ExtremumKind.DEGENERATE
    return ExtremumKind.MINIMUM if curvature > 0 else ExtremumKind.MAXIMUM


def find_extremum(
    table: TabulatedFunction,
    degree: int,
    x0: float,
    settings: Optional[SolverSettings] = None,
) -> ExtremumResult:
    """Stationary point of the interpolant near x0, classified by the sign of P''"""
    settings = settings or SolverSettings()
    if degree < 2:
        raise InvalidDegree(f"an extremum search needs degree >= 2, got {degree}")
    x = _check_start(table, x0)
    floor = settings.floor_for(table)
    iterations = 0

    def result(stack, converged: bool) -> ExtremumResult:
        value, slope, curvature = stack.values[:3]
        return ExtremumResult(
            x=x,
            value=value,
            kind=_classify(curvature, floor),
            iterations=iterations,
            converged=converged,
            slope=slope,
            curvature=curvature,
        )

    while True:
        stack = interpolate_at(table, x, degree, 2)
        slope, curvature = stack.values[1], stack.values[2]
        logger.debug("extremum iter=%d x=%r slope=%.3e curvature=%.3e", iterations, x, slope, curvature)

        if abs(slope) <= settings.tol_residual:
            return result(stack, converged=True)
        if iterations >= settings.max_iter:
            logger.info("extremum search stopped after %d iterations at x=%r", iterations, x)
            return result(stack, converged=False)
        if abs(curvature) < floor:
            raise DerivativeVanished(x, curvature, floor, order=2)

        proposed = _clamp(table, x - slope / curvature)
        iterations += 1
        step, x = proposed - x, proposed

        if abs(step) <= settings.tol_step:
            stack = interpolate_at(table, x, degree, 2)
            return result(stack, converged=abs(stack.values[1]) <= settings.tol_residual)
