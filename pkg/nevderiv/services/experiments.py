"""
Accuracy experiments on two tabulated test functions.

* polynomial: a0 + a1 x + a2 x^2 + a3 x^3 (all coefficients 1 by default),
  11 equidistant points on [-1, 1], one global interpolant. A spot check of
  all derivatives at x = 0 plus difference statistics over uniform samples.
* sine: sin x tabulated at equidistant points on [0, 2 pi], local
  interpolants of degree 2..5, RMS of every derivative order up to the degree.

Differences are always interpolant minus analytic value.
"""
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from ..core.config import settings
from ..models.experiment import ExperimentConfig, ExperimentReport, SpotCheck, StatsSummary
from ..models.node import NodeSet
from ..models.table import TabulatedFunction
from .neville import evaluate_derivatives
from .sampling import uniform_chunk
from .statistics import StatsAccumulator
from .table import interpolate_many, sample_function

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi

AnalyticDerivative = Callable[[int, np.ndarray], np.ndarray]

# Reference results for 10**6 samples, shown next to measured RMS in reports.
# Cubic: (average, rms, maximum) per derivative order.
REFERENCE_POLYNOMIAL_STATS: Dict[int, Tuple[float, float, float]] = {
    0: (-2.1e-17, 1.8e-16, 1.3e-15),
    1: (-2.6e-17, 8.5e-16, 7.1e-15),
    2: (2.3e-15, 8.7e-15, 6.7e-14),
    3: (1.9e-14, 6.3e-14, 5.9e-13),
}
# Sine RMS per degree and order. These magnitudes correspond to a node
# spacing of pi / 20, i.e. 41 points over [0, 2 pi].
REFERENCE_SINE_RMS: Dict[int, Dict[int, float]] = {
    2: {0: 1.0e-04, 1: 2.4e-03, 2: 6.1e-02},
    3: {0: 3.9e-06, 1: 1.3e-04, 2: 1.6e-03, 3: 3.1e-02},
    4: {0: 6.1e-07, 1: 1.4e-05, 2: 4.1e-04, 3: 7.2e-03, 4: 8.5e-02},
    5: {0: 2.2e-08, 1: 7.3e-07, 2: 1.5e-05, 3: 3.5e-04, 4: 5.0e-03, 5: 4.0e-02},
}
REFERENCE_SINE_POINTS = 41
REFERENCE_COEFFICIENTS = (1.0, 1.0, 1.0, 1.0)
REFERENCE_POLYNOMIAL_POINTS = 11


def polynomial_reference(config: ExperimentConfig) -> Dict[int, Dict[int, float]]:
    """Reference RMS for the cubic, only for the configuration it was measured on"""
    degree = REFERENCE_POLYNOMIAL_POINTS - 1
    if (
        config.table_points != REFERENCE_POLYNOMIAL_POINTS
        or tuple(config.coefficients) != REFERENCE_COEFFICIENTS
        or degree not in config.degrees
    ):
        return {}
    return {
        degree: {
            order: rms
            for order, (_, rms, _) in REFERENCE_POLYNOMIAL_STATS.items()
            if order in config.orders_for(degree)
        }
    }


def sine_reference(config: ExperimentConfig) -> Dict[int, Dict[int, float]]:
    """Reference RMS for every requested sine cell, whatever the table size"""
    return {
        degree: {order: rms for order, rms in row.items() if order in config.orders_for(degree)}
        for degree, row in REFERENCE_SINE_RMS.items()
        if degree in config.degrees
    }


def sine_derivative(order: int, x: np.ndarray) -> np.ndarray:
    phase = order % 4
    if phase == 0:
        return np.sin(x)
    if phase == 1:
        return np.cos(x)
    if phase == 2:
        return -np.sin(x)
    return -np.cos(x)


def polynomial_derivative(poly: Polynomial) -> AnalyticDerivative:
    return lambda order, x: poly.deriv(order)(x)


def build_polynomial_table(config: ExperimentConfig) -> Tuple[Polynomial, TabulatedFunction]:
    poly = Polynomial(config.coefficients)
    table = sample_function(lambda x: float(poly(x)), -1.0, 1.0, config.table_points, name="polynomial")
    return poly, table


def build_sine_table(config: ExperimentConfig) -> TabulatedFunction:
    return sample_function(math.sin, 0.0, TWO_PI, config.table_points, name="sin")


def _chunks(count: int, size: int) -> List[Tuple[int, int]]:
    return [(start, min(start + size, count)) for start in range(0, count, size)]


def difference_grid(
    table: TabulatedFunction,
    config: ExperimentConfig,
    a: float,
    b: float,
    analytic: AnalyticDerivative,
) -> Dict[int, Dict[int, StatsSummary]]:
    """
    Statistics of interpolant minus analytic derivative for every requested
    (degree, order) over config.sample_count uniform abscissas on [a, b).

    Chunks may be evaluated on several threads; they are reduced in index
    order, so the result does not depend on the worker count.
    """
    accumulators = {
        degree: {order: StatsAccumulator() for order in config.orders_for(degree)}
        for degree in config.degrees
    }

    def evaluate_chunk(bounds: Tuple[int, int]) -> Dict[int, List[np.ndarray]]:
        xs = uniform_chunk(config.seed, a, b, *bounds)
        differences = {}
        for degree in config.degrees:
            orders = config.orders_for(degree)
            values = interpolate_many(table, xs, degree, orders[-1])
            differences[degree] = [values[order] - analytic(order, xs) for order in orders]
        return differences

    def reduce(results: Iterable[Dict[int, List[np.ndarray]]]) -> None:
        for chunk in results:
            for degree, per_order in chunk.items():
                for order, diff in enumerate(per_order):
                    accumulators[degree][order].update(diff)

    bounds = _chunks(config.sample_count, settings.NEVDERIV_CHUNK_SIZE)
    if settings.NEVDERIV_WORKERS > 1:
        with ThreadPoolExecutor(max_workers=settings.NEVDERIV_WORKERS) as pool:
            reduce(pool.map(evaluate_chunk, bounds))
    else:
        reduce(map(evaluate_chunk, bounds))

    return {
        degree: {order: acc.summary() for order, acc in cells.items()}
        for degree, cells in accumulators.items()
    }


def run_polynomial_experiment(config: ExperimentConfig, include_statistics: bool = True) -> ExperimentReport:
    """Spot check at x = 0 and, optionally, difference statistics on [-1, 1)"""
    started = time.perf_counter()
    logger.info("polynomial experiment: %s", config.model_dump())

    poly, table = build_polynomial_table(config)
    stack = evaluate_derivatives(NodeSet(nodes=table.samples), 0.0, config.max_order)
    spot_checks = [
        SpotCheck(at=0.0, order=order, original=float(poly.deriv(order)(0.0)), calculated=stack.values[order])
        for order in range(config.max_order + 1)
    ]

    grid, reference = {}, {}
    if include_statistics:
        grid = difference_grid(table, config, -1.0, 1.0, polynomial_derivative(poly))
        reference = polynomial_reference(config)

    wall_time = time.perf_counter() - started
    logger.info("polynomial experiment finished in %.3f s", wall_time)
    return ExperimentReport(
        name="polynomial",
        config=config,
        grid=grid,
        spot_checks=spot_checks,
        reference=reference,
        wall_time=wall_time,
    )


def run_sin_experiment(config: ExperimentConfig) -> ExperimentReport:
    """RMS of every derivative order per local degree on [0, 2 pi)"""
    started = time.perf_counter()
    logger.info("sine experiment: %s", config.model_dump())

    table = build_sine_table(config)
    grid = difference_grid(table, config, 0.0, TWO_PI, sine_derivative)

    wall_time = time.perf_counter() - started
    logger.info("sine experiment finished in %.3f s", wall_time)
    return ExperimentReport(
        name="sine", config=config, grid=grid, reference=sine_reference(config), wall_time=wall_time
    )
