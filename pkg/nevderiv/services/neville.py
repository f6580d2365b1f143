"""
Neville's tableau extended to carry derivatives of the interpolating polynomial.

For points (x_k, y_k), k = i..j, the partial interpolants obey

    P_ii(x)  = y_i
    P_ij(x)  = [(x_j - x) P_i,j-1(x) + (x - x_i) P_i+1,j(x)] / (x_j - x_i)

Differentiating the second relation n times (Leibniz rule) gives

    P^n_ii(x) = 0                                   (n >= 1)
    P^n_ij(x) = [(x_j - x) P^n_i,j-1 + (x - x_i) P^n_i+1,j
                 + n (P^n-1_i+1,j - P^n-1_i,j-1)] / (x_j - x_i)

The form usually quoted for this extension pairs P^n with P^(n+1) of the
children and lacks the factor n; taken literally it returns 0 for the slope of
a two-point interpolant. It matches the relation above only after an index
shift or a reinterpretation as scaled derivatives Q^n = P^n / n!, for which the
factor n disappears:

    Q^n_ij(x) = [(x_j - x) Q^n_i,j-1 + (x - x_i) Q^n_i+1,j
                 + (Q^n-1_i+1,j - Q^n-1_i,j-1)] / (x_j - x_i)

Both are implemented by ``_tableau``; the public derivative output is unscaled.
"""
import logging
import math
from typing import Iterable, Tuple, Union

import numpy as np

from ..core.errors import InvalidOrder, NonFiniteInput
from ..models.derivative import DerivativeStack
from ..models.node import Node, NodeSet

logger = logging.getLogger(__name__)

NodeLike = Union[Node, Tuple[float, float]]


def validate_nodes(nodes: Iterable[NodeLike]) -> NodeSet:
    """Build a NodeSet from Node objects or (x, y) pairs, keeping their order"""
    converted = []
    for node in nodes:
        if isinstance(node, Node):
            converted.append(node)
        else:
            x, y = node
            converted.append(Node(x=x, y=y))
    return NodeSet(nodes=tuple(converted))


def _tableau(xn: np.ndarray, yn: np.ndarray, x: np.ndarray, max_order: int, scaled: bool = False) -> np.ndarray:
    """
    Sweep the triangular tableau once for every abscissa in ``x``.

    Column ``p[n, i]`` holds order n of P_i,i+level; each level overwrites the
    column in place, highest order first, so order n still sees the children's
    order n - 1 values of the previous level.

    Returns an array of shape (max_order + 1, len(x)); rows above the degree
    are exactly zero.
    """
    count = xn.shape[0]
    top = min(max_order, count - 1)

    p = np.zeros((top + 1, count, x.shape[0]), dtype=np.float64)
    p[0] = yn[:, np.newaxis]

    for level in range(1, count):
        width = count - level
        x_lo = xn[:width, np.newaxis]
        x_hi = xn[level:, np.newaxis]
        below = x_hi - x
        above = x - x_lo
        span = x_hi - x_lo

        for n in range(min(level, top), 0, -1):
            weight = 1 if scaled else n
            p[n, :width] = (
                below * p[n, :width]
                + above * p[n, 1 : width + 1]
                + weight * (p[n - 1, 1 : width + 1] - p[n - 1, :width])
            ) / span
        p[0, :width] = (below * p[0, :width] + above * p[0, 1 : width + 1]) / span

    result = np.zeros((max_order + 1, x.shape[0]), dtype=np.float64)
    result[: top + 1] = p[:, 0]
    return result


def _check_abscissa(x: float) -> float:
    if not math.isfinite(x):
        raise NonFiniteInput(f"abscissa {x!r} is not finite")
    return float(x)


def _check_order(max_order: int) -> int:
    if max_order < 0:
        raise InvalidOrder(f"max_order must be non-negative, got {max_order}")
    return int(max_order)


def evaluate(nodes: NodeSet, x: float) -> float:
    """Value of the interpolant through ``nodes`` at ``x``"""
    x = _check_abscissa(x)
    return float(_tableau(nodes.xs(), nodes.ys(), np.array([x]), 0)[0, 0])


def evaluate_derivatives(nodes: NodeSet, x: float, max_order: int) -> DerivativeStack:
    """P(x), P'(x), ..., P^max_order(x); orders above the degree are exactly 0"""
    x = _check_abscissa(x)
    max_order = _check_order(max_order)
    values = _tableau(nodes.xs(), nodes.ys(), np.array([x]), max_order)[:, 0]
    return DerivativeStack(at=x, values=tuple(float(v) for v in values))


def evaluate_many(nodes: NodeSet, xs: np.ndarray, max_order: int) -> np.ndarray:
    """
    Batch form of evaluate_derivatives.

    Runs the same elementwise recurrence as the scalar path, so column k equals
    evaluate_derivatives(nodes, xs[k], max_order).values bit-for-bit.
    """
    xs = np.asarray(xs, dtype=np.float64).reshape(-1)
    if not np.all(np.isfinite(xs)):
        raise NonFiniteInput("abscissas contain NaN or infinity")
    max_order = _check_order(max_order)
    return _tableau(nodes.xs(), nodes.ys(), xs, max_order)


def taylor_coefficients(nodes: NodeSet, x: float, max_order: int) -> Tuple[float, ...]:
    """Scaled derivatives P^n(x) / n!, i.e. the interpolant's Taylor coefficients about x"""
    x = _check_abscissa(x)
    max_order = _check_order(max_order)
    values = _tableau(nodes.xs(), nodes.ys(), np.array([x]), max_order, scaled=True)[:, 0]
    return tuple(float(v) for v in values)
