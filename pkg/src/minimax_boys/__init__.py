"""Boys functions F_0..F_32 in double precision from rational minimax tables,
plus the extended-precision toolchain that generates the tables."""

from .evaluate import BoysBatch, BoysDomainError, boys_batch, boys_bulk, downward_recursion, eval_rational, upward_recursion
from .reference import ReferenceConfig, boys_reference, boys_reference_ladder, truncation_bound
from .regions import RegionPartition, compute_x0, compute_x1, weight_rho_A
from .tables import CoefficientTableSet, TableFormatError, embedded_default, emit_tables, parse_tables

__all__ = [
    "BoysBatch", "BoysDomainError", "CoefficientTableSet", "ReferenceConfig", "RegionPartition",
    "TableFormatError", "boys_batch", "boys_bulk", "boys_reference", "boys_reference_ladder",
    "compute_x0", "compute_x1", "downward_recursion", "embedded_default", "emit_tables",
    "eval_rational", "parse_tables", "truncation_bound", "upward_recursion", "weight_rho_A",
]
__version__ = "0.1.0"
