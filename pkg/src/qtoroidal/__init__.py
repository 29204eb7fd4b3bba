"""Exact-arithmetic engine for the shifted quantum toroidal algebra action on
the equivariant K-theory of parabolic sheaves, with a verification suite for
the defining relations and the annihilation theorem for the lowering elements
W_{ij}^k on windowed truncations."""

from .action import GradedOperator, GradedVector, Representation
from .scalars import (ParameterSpecialization, PoleError, Scalar,
                      TruncatedSeries, random_specialization)
from .walgebra import WSpec, build_w

__all__ = [
    "GradedOperator",
    "GradedVector",
    "ParameterSpecialization",
    "PoleError",
    "Representation",
    "Scalar",
    "TruncatedSeries",
    "WSpec",
    "build_w",
    "random_specialization",
]
