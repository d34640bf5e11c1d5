"""Builders for separating 2-factors, vertical fills, and the Frobenius helpers."""

from .dispatch import (
    BUILDERS,
    THEOREMS,
    build_alpha,
    build_beta,
    build_evengen,
    build_L0,
    build_L1,
    build_L2,
    build_L3,
    build_O3,
    build_oddgen,
    build_zero,
    choose,
    separate,
)
from .fill import FillDirection, expand_1_to_3, fill
from .frobenius import Decomposition, bound_even, bound_odd, decompose_even

__all__ = [
    "BUILDERS",
    "THEOREMS",
    "Decomposition",
    "FillDirection",
    "bound_even",
    "bound_odd",
    "build_L0",
    "build_L1",
    "build_L2",
    "build_L3",
    "build_O3",
    "build_alpha",
    "build_beta",
    "build_evengen",
    "build_oddgen",
    "build_zero",
    "choose",
    "decompose_even",
    "expand_1_to_3",
    "fill",
    "separate",
]
