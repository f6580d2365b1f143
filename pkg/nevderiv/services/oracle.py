import numpy as np
from numpy.polynomial import Polynomial

from ..core.errors import IllConditioned, InvalidOrder
from ..models.derivative import DerivativeStack
from ..models.node import NodeSet

MAX_ORACLE_DEGREE = 12


def oracle_derivatives(nodes: NodeSet, x: float, max_order: int) -> DerivativeStack:
    """
    Reference derivatives from the monomial form.

    Solves the Vandermonde system on mean-shifted abscissas and differentiates
    the resulting polynomial analytically. Independent of the Neville path and
    only meant for cross-checking it.
    """
    if nodes.degree() > MAX_ORACLE_DEGREE:
        raise IllConditioned(
            f"degree {nodes.degree()} exceeds the oracle limit of {MAX_ORACLE_DEGREE}"
        )
    if max_order < 0:
        raise InvalidOrder(f"max_order must be non-negative, got {max_order}")

    xs = nodes.xs()
    centre = float(np.mean(xs))
    vandermonde = np.vander(xs - centre, increasing=True)
    poly = Polynomial(np.linalg.solve(vandermonde, nodes.ys()))

    t = float(x) - centre
    values = tuple(float(poly.deriv(n)(t)) for n in range(max_order + 1))
    return DerivativeStack(at=float(x), values=values)
