from .tree import TreeAddress, f_eval, level_set, odd_dyadic_grid, verify_f_properties, word_for_grid_point
from .transversal import (
    AffineMapData,
    AffineSubspace,
    DimensionViolation,
    RetryBudgetExhausted,
    check_eta,
    transversal_eta,
)
from .build import (
    AffinePiece,
    PiecewiseAffineMap,
    build_h,
    epsilon_profile,
    lipschitz_constant,
    serialize_bundle,
)
from .cover import PseudocoveringWindow, pi_projection, restrict_pseudocovering

__all__ = [
    "TreeAddress",
    "f_eval",
    "level_set",
    "odd_dyadic_grid",
    "verify_f_properties",
    "word_for_grid_point",
    "AffineMapData",
    "AffineSubspace",
    "DimensionViolation",
    "RetryBudgetExhausted",
    "check_eta",
    "transversal_eta",
    "AffinePiece",
    "PiecewiseAffineMap",
    "build_h",
    "epsilon_profile",
    "lipschitz_constant",
    "serialize_bundle",
    "PseudocoveringWindow",
    "pi_projection",
    "restrict_pseudocovering",
]
