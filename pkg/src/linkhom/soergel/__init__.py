"""Soergel bimodules, Rouquier complexes and triply graded homology."""

from .bimodule import (
    Bimodule,
    BimoduleMap,
    RingCtx,
    bs_generator,
    bs_word,
    graded_rank,
    regular_bimodule,
    right_multiplication,
    tensor,
    tensor_maps,
)
from .hochschild import LayeredComplex, hhh, hochschild, koszul_differential, lift_map
from .kr import (
    KRResult,
    hhh_braid,
    hhh_euler,
    kr,
    kr_euler,
    kr_jones_series,
    trace_series,
)
from .rouquier import BimoduleComplex, direct_sum, rouquier_complex

__all__ = [
    "RingCtx", "Bimodule", "BimoduleMap", "bs_generator", "bs_word", "tensor", "tensor_maps",
    "graded_rank", "regular_bimodule", "right_multiplication",
    "BimoduleComplex", "rouquier_complex", "direct_sum",
    "hochschild", "hhh", "koszul_differential", "lift_map", "LayeredComplex",
    "KRResult", "kr", "hhh_braid", "hhh_euler", "kr_euler", "kr_jones_series", "trace_series",
]
