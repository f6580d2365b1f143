from typing import Optional

import click

from ..core.config import settings
from ..models.experiment import ExperimentConfig
from ..services.experiments import run_polynomial_experiment, run_sin_experiment
from ..services.report import render_rms_grid, render_spot_checks, render_statistics, to_json
from .common import emit, json_option


@click.command("reproduce")
@click.argument("experiment", type=click.Choice(["table1", "table2", "table3"]))
@click.option("--samples", default=settings.NEVDERIV_DEFAULT_SAMPLES, show_default=True, type=int,
              help="Uniform abscissas per experiment (1000000 for full scale)")
@click.option("--seed", default=settings.NEVDERIV_DEFAULT_SEED, show_default=True, type=int)
@click.option("--points", type=int, default=None,
              help="Table size [default: 11 for table1/table2, 21 for table3]")
@json_option
def reproduce_command(experiment: str, samples: int, seed: int, points: Optional[int], as_json: bool) -> int:
    """Rerun one of the three accuracy experiments"""
    overrides = dict(seed=seed, sample_count=samples)
    if points is not None:
        overrides["table_points"] = points

    if experiment == "table3":
        report = run_sin_experiment(ExperimentConfig.sine(**overrides))
        text = render_rms_grid(report)
    else:
        config = ExperimentConfig.polynomial(**overrides)
        report = run_polynomial_experiment(config, include_statistics=experiment == "table2")
        text = render_spot_checks(report) if experiment == "table1" else render_statistics(report)

    emit(to_json(report.to_document()) if as_json else text)
    return 0
