from .node import Node, NodeSet
from .derivative import DerivativeStack
from .table import TabulatedFunction, WindowSpec
from .solver import SolverSettings, RootResult, ExtremumResult, ExtremumKind
from .experiment import StatsSummary, ExperimentConfig, SpotCheck, ExperimentReport

__all__ = [
    "Node",
    "NodeSet",
    "DerivativeStack",
    "TabulatedFunction",
    "WindowSpec",
    "SolverSettings",
    "RootResult",
    "ExtremumResult",
    "ExtremumKind",
    "StatsSummary",
    "ExperimentConfig",
    "SpotCheck",
    "ExperimentReport",
]
