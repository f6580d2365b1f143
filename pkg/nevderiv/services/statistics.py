import math
from typing import Iterable, List, Union

import numpy as np

from ..core.errors import EmptyPopulation, NonFiniteInput
from ..models.experiment import StatsSummary


class StatsAccumulator:
    """
    Running average / RMS / max |.| over chunks of differences.

    Each chunk is summed exactly rounded with math.fsum and the chunk sums are
    combined the same way in the order they were added, so the result only
    depends on the chunk boundaries, not on who computed the chunks.
    """

    def __init__(self):
        self._sums: List[float] = []
        self._squares: List[float] = []
        self._maximum = 0.0
        self._count = 0

    def update(self, differences: Union[np.ndarray, Iterable[float]]) -> None:
        values = np.asarray(differences, dtype=np.float64).reshape(-1)
        if values.size == 0:
            return
        if not np.all(np.isfinite(values)):
            raise NonFiniteInput("differences contain NaN or infinity")

        self._sums.append(math.fsum(values))
        self._squares.append(math.fsum(values * values))
        self._maximum = max(self._maximum, float(np.max(np.abs(values))))
        self._count += values.size

    @property
    def count(self) -> int:
        return self._count

    def summary(self) -> StatsSummary:
        if self._count == 0:
            raise EmptyPopulation()

        average = math.fsum(self._sums) / self._count
        rms = math.sqrt(math.fsum(self._squares) / self._count)
        # rounding may break rms >= |average| or max >= rms by an ulp
        rms = max(rms, abs(average))
        maximum = max(self._maximum, rms)
        return StatsSummary(average=average, rms=rms, maximum=maximum, count=self._count)


def diff_stats(differences: Union[np.ndarray, Iterable[float]]) -> StatsSummary:
    """Average, RMS and maximum absolute value of ``differences``"""
    if not isinstance(differences, np.ndarray):
        differences = np.array(list(differences), dtype=np.float64)
    accumulator = StatsAccumulator()
    accumulator.update(differences)
    return accumulator.summary()
