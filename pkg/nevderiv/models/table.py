from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..core.errors import DuplicateAbscissa, TooFewRows
from .node import Node


class TabulatedFunction(BaseModel):
    """Samples of a function, sorted by strictly increasing abscissa"""

    samples: Tuple[Node, ...]
    name: Optional[str] = None

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_samples(self) -> "TabulatedFunction":
        if len(self.samples) < 2:
            raise TooFewRows(f"a table needs at least 2 samples, got {len(self.samples)}")

        for previous, current in zip(self.samples, self.samples[1:]):
            if current.x == previous.x:
                raise DuplicateAbscissa(current.x)
            if current.x < previous.x:
                raise ValueError(
                    f"samples are not sorted: {current.x!r} follows {previous.x!r}"
                )
        return self

    def __len__(self) -> int:
        return len(self.samples)

    def xs(self) -> np.ndarray:
        return np.fromiter((s.x for s in self.samples), dtype=np.float64, count=len(self.samples))

    def ys(self) -> np.ndarray:
        return np.fromiter((s.y for s in self.samples), dtype=np.float64, count=len(self.samples))

    @property
    def lower(self) -> float:
        return self.samples[0].x

    @property
    def upper(self) -> float:
        return self.samples[-1].x

    @property
    def y_scale(self) -> float:
        """Largest |y| in the table"""
        return max(abs(s.y) for s in self.samples)

    def contains(self, x: float) -> bool:
        return self.lower <= x <= self.upper


class WindowSpec(BaseModel):
    """Consecutive run of degree + 1 table samples used for one local interpolant"""

    first_index: int = Field(ge=0)
    degree: int = Field(ge=1)

    class Config:
        frozen = True

    @property
    def stop(self) -> int:
        return self.first_index + self.degree + 1

    def indices(self) -> range:
        return range(self.first_index, self.stop)
