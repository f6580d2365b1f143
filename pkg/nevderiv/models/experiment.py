import math
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from ..core.config import settings
from ..core.errors import InvalidConfig


class StatsSummary(BaseModel):
    """Average, RMS and maximum |.| of a population of differences"""

    average: float
    rms: float
    maximum: float
    count: int

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_ordering(self) -> "StatsSummary":
        if self.count < 1:
            raise ValueError("statistics need a non-empty population")
        if not all(math.isfinite(v) for v in (self.average, self.rms, self.maximum)):
            raise ValueError("statistics must be finite")
        if self.rms < abs(self.average) or self.maximum < self.rms:
            raise ValueError(
                f"expected maximum >= rms >= |average|, got {self.maximum}, {self.rms}, {self.average}"
            )
        return self


class ExperimentConfig(BaseModel):
    seed: int = Field(default_factory=lambda: settings.NEVDERIV_DEFAULT_SEED)
    sample_count: int = Field(default_factory=lambda: settings.NEVDERIV_DEFAULT_SAMPLES)
    table_points: int
    degrees: Tuple[int, ...]
    max_order: int
    # a0 + a1 x + a2 x^2 + ... for the polynomial experiment
    coefficients: Tuple[float, ...] = (1.0, 1.0, 1.0, 1.0)

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_config(self) -> "ExperimentConfig":
        if not 0 <= self.seed < 2**64:
            raise InvalidConfig(f"seed must fit in 64 unsigned bits, got {self.seed}")
        if self.sample_count < 1:
            raise InvalidConfig(f"sample_count must be at least 1, got {self.sample_count}")
        if self.table_points < 2:
            raise InvalidConfig(f"table_points must be at least 2, got {self.table_points}")
        if not self.degrees:
            raise InvalidConfig("at least one degree is required")
        for degree in self.degrees:
            if not 1 <= degree < self.table_points:
                raise InvalidConfig(
                    f"degree {degree} is outside 1..{self.table_points - 1} for a {self.table_points}-point table"
                )
        if self.max_order < 0:
            raise InvalidConfig(f"max_order must be non-negative, got {self.max_order}")
        if not self.coefficients:
            raise InvalidConfig("the test polynomial needs at least one coefficient")
        return self

    @classmethod
    def polynomial(cls, **overrides: Any) -> "ExperimentConfig":
        """Cubic on [-1, 1]: 11 points, one global degree-10 interpolant, orders 0..3"""
        points = overrides.pop("table_points", 11)
        values = dict(table_points=points, degrees=(points - 1,), max_order=3)
        values.update(overrides)
        return cls(**values)

    @classmethod
    def sine(cls, **overrides: Any) -> "ExperimentConfig":
        """sin on [0, 2 pi]: 21 points, local degrees 2..5, all orders up to the degree"""
        values = dict(table_points=21, degrees=(2, 3, 4, 5), max_order=5)
        values.update(overrides)
        return cls(**values)

    def orders_for(self, degree: int) -> range:
        return range(min(degree, self.max_order) + 1)


class SpotCheck(BaseModel):
    """Analytic versus interpolated derivative at one abscissa"""

    at: float
    order: int
    original: float
    calculated: float

    @property
    def difference(self) -> float:
        return self.calculated - self.original


class ExperimentReport(BaseModel):
    name: str
    config: ExperimentConfig
    grid: Dict[int, Dict[int, StatsSummary]] = {}
    spot_checks: List[SpotCheck] = []
    # reference RMS per degree and order, where one is known for this config
    reference: Dict[int, Dict[int, float]] = {}
    wall_time: float = 0.0

    @model_validator(mode="after")
    def _check_grid(self) -> "ExperimentReport":
        if not self.grid:
            return self
        if set(self.grid) != set(self.config.degrees):
            raise ValueError(f"grid degrees {sorted(self.grid)} differ from {list(self.config.degrees)}")
        for degree, cells in self.grid.items():
            if list(sorted(cells)) != list(self.config.orders_for(degree)):
                raise ValueError(f"grid orders for degree {degree} are incomplete: {sorted(cells)}")
        return self

    def reference_rms(self, degree: int, order: int) -> Optional[float]:
        return self.reference.get(degree, {}).get(order)

    def _cell_document(self, degree: int, order: int, cell: StatsSummary) -> Dict[str, Any]:
        document = {"average": cell.average, "rms": cell.rms, "maximum": cell.maximum}
        reference = self.reference_rms(degree, order)
        if reference is not None:
            document["reference"] = reference
        return document

    def to_document(self) -> Dict[str, Any]:
        """JSON form: config, grid[degree][order], spot_checks; wall time is left out"""
        return {
            "experiment": self.name,
            "config": self.config.model_dump(mode="json"),
            "grid": {
                str(degree): {
                    str(order): self._cell_document(degree, order, cell)
                    for order, cell in sorted(cells.items())
                }
                for degree, cells in sorted(self.grid.items())
            },
            "spot_checks": [
                {
                    "at": check.at,
                    "order": check.order,
                    "original": check.original,
                    "calculated": check.calculated,
                }
                for check in self.spot_checks
            ],
        }
