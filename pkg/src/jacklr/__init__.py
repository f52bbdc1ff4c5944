"""Exact Littlewood-Richardson coefficients for Jack and Macdonald polynomials,
and hook-assignment formulas for minimal triples of three-row partitions."""

from .algebra import RatFunc1, RatFunc2, UniPoly
from .jack import jack_P, oracle_c, product_coeffs
from .partitions import Partition, conjugate, lr_count
from .stanley import evaluate_d, verify_triple

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "RatFunc1",
    "RatFunc2",
    "UniPoly",
    "conjugate",
    "evaluate_d",
    "jack_P",
    "lr_count",
    "oracle_c",
    "product_coeffs",
    "verify_triple",
]
