import enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from ..core.config import settings
from ..core.errors import InvalidConfig
from .table import TabulatedFunction


class ExtremumKind(enum.Enum):
    MINIMUM = "minimum"
    MAXIMUM = "maximum"
    DEGENERATE = "degenerate"


class SolverSettings(BaseModel):
    """Stopping rules shared by the root and extremum searches"""

    tol_residual: float = Field(default_factory=lambda: settings.NEVDERIV_TOL_RESIDUAL)
    tol_step: float = Field(default_factory=lambda: settings.NEVDERIV_TOL_STEP)
    max_iter: int = Field(default_factory=lambda: settings.NEVDERIV_MAX_ITER)
    # None means derivative_floor_scale * max(1, table y-scale)
    derivative_floor: Optional[float] = None
    derivative_floor_scale: float = Field(
        default_factory=lambda: settings.NEVDERIV_DERIVATIVE_FLOOR_SCALE
    )

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_positive(self) -> "SolverSettings":
        for name in ("tol_residual", "tol_step", "derivative_floor_scale"):
            if not getattr(self, name) > 0:
                raise InvalidConfig(f"{name} must be positive, got {getattr(self, name)!r}")
        if self.derivative_floor is not None and not self.derivative_floor > 0:
            raise InvalidConfig(f"derivative_floor must be positive, got {self.derivative_floor!r}")
        if self.max_iter < 1:
            raise InvalidConfig(f"max_iter must be at least 1, got {self.max_iter}")
        return self

    def floor_for(self, table: TabulatedFunction) -> float:
        if self.derivative_floor is not None:
            return self.derivative_floor
        return self.derivative_floor_scale * max(1.0, table.y_scale)


class RootResult(BaseModel):
    x: float
    residual: float
    iterations: int
    converged: bool


class ExtremumResult(BaseModel):
    x: float
    value: float
    kind: ExtremumKind
    iterations: int
    converged: bool
    slope: float
    curvature: float
