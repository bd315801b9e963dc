"""Coefficient rings, series and exact linear algebra shared by the invariants."""

from .laurent import LaurentPoly, V, quantum_binomial, quantum_factorial, quantum_int
from .linalg import column_space, graded_piece_rank, nullspace, rank, rref_rank
from .polys import MPoly, PolyMatrix, monomials_of_degree
from .rational import MultiRational, rational_field
from .series import DEFAULT_CUTOFF, TriGradedSeries, TruncatedVSeries, rational_to_series

__all__ = [
    "LaurentPoly", "V", "quantum_int", "quantum_factorial", "quantum_binomial",
    "MPoly", "PolyMatrix", "monomials_of_degree",
    "MultiRational", "rational_field",
    "TruncatedVSeries", "TriGradedSeries", "rational_to_series", "DEFAULT_CUTOFF",
    "rank", "nullspace", "column_space", "rref_rank", "graded_piece_rank",
]
