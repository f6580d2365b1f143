import math
from typing import Tuple

from pydantic import BaseModel, model_validator

from ..core.errors import NonFiniteInput


class DerivativeStack(BaseModel):
    """Values P(at), P'(at), ..., P^M(at) of one interpolant"""

    at: float
    values: Tuple[float, ...]

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_values(self) -> "DerivativeStack":
        if not self.values:
            raise ValueError("a derivative stack holds at least the order-0 value")
        if not all(math.isfinite(v) for v in self.values):
            raise NonFiniteInput(f"interpolant derivatives at x={self.at!r} overflowed: {self.values!r}")
        return self

    @property
    def value(self) -> float:
        return self.values[0]

    @property
    def max_order(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, order: int) -> float:
        return self.values[order]
