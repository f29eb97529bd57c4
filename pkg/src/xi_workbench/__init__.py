"""Exact-arithmetic workbench for windowed compactification models,
Riesz-group interpolation, and certified piecewise-affine tree embeddings.

Everything is computed over arbitrary-precision rationals; randomized
searches are seeded and deterministic; claims about infinite objects are
returned as window-level verdicts or re-checkable certificates, never as
bare booleans.
"""

__version__ = "0.1.0"

from .certificates import Certificate
from .model import INFINITY, BijectionSpec, DiscreteSpaceModel

__all__ = [
    "Certificate",
    "INFINITY",
    "BijectionSpec",
    "DiscreteSpaceModel",
    "__version__",
]
