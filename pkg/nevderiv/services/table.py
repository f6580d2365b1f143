import logging
import math
import re
from typing import BinaryIO, Callable, List, Optional, Union

import numpy as np

from ..core.errors import (
    DegreeTooLarge,
    InvalidDegree,
    InvalidOrder,
    InvalidRange,
    NonFiniteInput,
    NonFiniteSample,
    OutOfDomain,
    ParseError,
)
from ..models.derivative import DerivativeStack
from ..models.node import Node, NodeSet
from ..models.table import TabulatedFunction, WindowSpec
from .neville import evaluate_derivatives, evaluate_many

logger = logging.getLogger(__name__)

# decimal literal with optional exponent; nan/inf spellings are rejected
FLOAT_LITERAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
FIELD_SEPARATOR = re.compile(r"\s*,\s*|\s+")


def sample_function(
    f: Callable[[float], float],
    a: float,
    b: float,
    count: int,
    name: Optional[str] = None,
) -> TabulatedFunction:
    """Tabulate ``f`` at ``count`` equidistant abscissas from a to b inclusive"""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise NonFiniteInput(f"interval [{a!r}, {b!r}] is not finite")
    if not a < b:
        raise InvalidRange(f"expected a < b, got a={a!r}, b={b!r}")
    if count < 2:
        raise InvalidRange(f"need at least 2 samples, got {count}")

    step = (b - a) / (count - 1)
    samples = []
    for k in range(count):
        x = b if k == count - 1 else a + k * step
        y = float(f(x))
        if not math.isfinite(y):
            raise NonFiniteSample(f"f({x!r}) = {y!r}")
        samples.append(Node(x=x, y=y))

    return TabulatedFunction(samples=tuple(samples), name=name)


def load_table(source: Union[bytes, BinaryIO], name: Optional[str] = None) -> TabulatedFunction:
    """
    Parse a two-column table.

    One sample per line, x then y, separated by whitespace or a comma.
    Blank lines and lines starting with '#' are ignored. Rows are sorted by x.
    """
    raw = source if isinstance(source, bytes) else source.read()

    samples: List[Node] = []
    for line_number, raw_line in enumerate(raw.split(b"\n"), start=1):
        try:
            line = raw_line.decode("utf-8").strip()
        except UnicodeDecodeError:
            raise ParseError(line_number, "not valid UTF-8")

        if not line or line.startswith("#"):
            continue

        fields = FIELD_SEPARATOR.split(line)
        if len(fields) != 2:
            raise ParseError(line_number, f"expected 2 fields, found {len(fields)}: {line!r}")

        for field in fields:
            if not FLOAT_LITERAL.fullmatch(field):
                raise ParseError(line_number, f"not a decimal number: {field!r}")

        x, y = (float(field) for field in fields)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ParseError(line_number, f"value out of floating-point range: {line!r}")
        samples.append(Node(x=x, y=y))

    samples.sort(key=lambda node: node.x)
    table = TabulatedFunction(samples=tuple(samples), name=name)
    logger.debug("loaded table %s with %d samples on [%r, %r]", name, len(table), table.lower, table.upper)
    return table


def dump_table(table: TabulatedFunction) -> str:
    """Write ``table`` in the format read by load_table"""
    lines = []
    if table.name:
        lines.append(f"# {table.name}")
    lines.extend(f"{node.x!r} {node.y!r}" for node in table.samples)
    return "\n".join(lines) + "\n"


def _check_degree(table: TabulatedFunction, degree: int) -> None:
    if degree < 1:
        raise InvalidDegree(f"degree must be at least 1, got {degree}")
    if degree > len(table) - 1:
        raise DegreeTooLarge(
            f"degree {degree} needs {degree + 1} points, the table has {len(table)}"
        )


def _first_indices(xs: np.ndarray, x: np.ndarray, degree: int) -> np.ndarray:
    """
    First window index for every abscissa in ``x``.

    With s the number of table abscissas strictly below x, an even-length
    window (odd degree) puts x in its middle interval: s - (degree + 1) / 2.
    An odd-length window is centred on the table node nearest to x, ties
    going to the lower node. Both are clamped to the table.
    """
    n = xs.shape[0]
    s = np.searchsorted(xs, x, side="left")

    if degree % 2:
        first = s - (degree + 1) // 2
    else:
        lower = xs[np.clip(s - 1, 0, n - 1)]
        upper = xs[np.clip(s, 0, n - 1)]
        take_lower = (s > 0) & ((s == n) | (x - lower <= upper - x))
        nearest = np.where(take_lower, s - 1, s)
        first = nearest - degree // 2

    return np.clip(first, 0, n - degree - 1)


def locate_window(table: TabulatedFunction, x: float, degree: int) -> WindowSpec:
    """Consecutive run of degree + 1 samples centred on x, clamped to the table"""
    _check_degree(table, degree)
    if not math.isfinite(x):
        raise NonFiniteInput(f"abscissa {x!r} is not finite")

    first = _first_indices(table.xs(), np.array([float(x)]), degree)[0]
    return WindowSpec(first_index=int(first), degree=degree)


def window_nodes(table: TabulatedFunction, window: WindowSpec) -> NodeSet:
    return NodeSet(nodes=table.samples[window.first_index : window.stop])


def interpolate_at(
    table: TabulatedFunction,
    x: float,
    degree: int,
    max_order: int,
    strict_domain: bool = False,
) -> DerivativeStack:
    """Derivatives up to ``max_order`` of the local degree-``degree`` interpolant at x"""
    window = locate_window(table, x, degree)
    if strict_domain and not table.contains(x):
        raise OutOfDomain(f"x={x!r} is outside [{table.lower!r}, {table.upper!r}]")
    return evaluate_derivatives(window_nodes(table, window), x, max_order)


def interpolate_many(
    table: TabulatedFunction,
    xs: np.ndarray,
    degree: int,
    max_order: int,
) -> np.ndarray:
    """
    Batch form of interpolate_at, shape (max_order + 1, len(xs)).

    Samples are grouped by window and each group runs through the same
    recurrence as the scalar path.
    """
    _check_degree(table, degree)
    if max_order < 0:
        raise InvalidOrder(f"max_order must be non-negative, got {max_order}")
    xs = np.asarray(xs, dtype=np.float64).reshape(-1)
    if not np.all(np.isfinite(xs)):
        raise NonFiniteInput("abscissas contain NaN or infinity")

    firsts = _first_indices(table.xs(), xs, degree)
    result = np.empty((max_order + 1, xs.shape[0]), dtype=np.float64)
    for first in np.unique(firsts):
        mask = firsts == first
        nodes = window_nodes(table, WindowSpec(first_index=int(first), degree=degree))
        result[:, mask] = evaluate_many(nodes, xs[mask], max_order)
    return result
