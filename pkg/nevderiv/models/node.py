import math
from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, model_validator

from ..core.errors import DuplicateAbscissa, EmptyNodeSet, NonFiniteInput


class Node(BaseModel):
    """One sample point (abscissa, ordinate)"""

    x: float
    y: float

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_finite(self) -> "Node":
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFiniteInput(f"node ({self.x!r}, {self.y!r}) is not finite")
        return self


class NodeSet(BaseModel):
    """
    Points defining one interpolating polynomial of degree len(nodes) - 1.

    Order is preserved; Neville's tableau does not need sorted abscissas.
    """

    nodes: Tuple[Node, ...]

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_nodes(self) -> "NodeSet":
        if not self.nodes:
            raise EmptyNodeSet()

        seen = set()
        for node in self.nodes:
            # -0.0 == 0.0 on purpose: both would zero the x_j - x_i denominator
            if node.x in seen:
                raise DuplicateAbscissa(node.x)
            seen.add(node.x)
        return self

    @classmethod
    def from_arrays(cls, xs: Sequence[float], ys: Sequence[float]) -> "NodeSet":
        if len(xs) != len(ys):
            raise ValueError("abscissa and ordinate arrays differ in length")
        return cls(nodes=tuple(Node(x=float(x), y=float(y)) for x, y in zip(xs, ys)))

    def degree(self) -> int:
        return len(self.nodes) - 1

    def xs(self) -> np.ndarray:
        return np.fromiter((node.x for node in self.nodes), dtype=np.float64, count=len(self.nodes))

    def ys(self) -> np.ndarray:
        return np.fromiter((node.y for node in self.nodes), dtype=np.float64, count=len(self.nodes))

    def __len__(self) -> int:
        return len(self.nodes)
