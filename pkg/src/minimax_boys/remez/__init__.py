"""Weighted rational minimax approximation by the Remez exchange."""

from .approximant import RationalApproximant, horner, make_monic
from .exchange import (
    Infeasible,
    IterationLimit,
    Memo,
    NodeUpdateFailure,
    ProbableDefect,
    RemezFailure,
    RemezProblem,
    RemezResult,
    RemezState,
    ReguessLimit,
    error_extrema,
    guess_nodes,
    remez_solve,
    update_nodes,
    weighted_error,
)
from .fixed_nodes import DegenerateNodes, select_pole_free, solve_fixed_nodes
from .golden import golden_section_max, golden_section_search
from .jacobi import jacobi_eigh
from .sturm import has_root_in_closed, sturm_root_count, sturm_sequence
from .walsh import WalshCell, WalshExhausted, WalshResult, walsh_search

__all__ = [
    "DegenerateNodes", "Infeasible", "IterationLimit", "Memo", "NodeUpdateFailure",
    "ProbableDefect", "RationalApproximant", "ReguessLimit", "RemezFailure", "RemezProblem",
    "RemezResult", "RemezState", "WalshCell", "WalshExhausted", "WalshResult",
    "error_extrema", "golden_section_max", "golden_section_search", "guess_nodes",
    "has_root_in_closed", "horner", "jacobi_eigh", "make_monic", "remez_solve",
    "select_pole_free", "solve_fixed_nodes", "sturm_root_count", "sturm_sequence",
    "update_nodes", "walsh_search", "weighted_error",
]
