from .coefficients import CoefficientGroup
from .gamma import (
    BalanceViolation,
    CoefficientNotInDelta,
    GammaElement,
    NotMeasurePreserving,
    act,
    make_element,
    state_omega,
)
from .interpolate import (
    DeltaNotClosed,
    InterpolationProblem,
    PreconditionViolated,
    SearchBound,
    riesz_interpolate,
    search_interpolant,
)
from .ideals import OrderIdeal, ideal_from_compact, ideal_member, ideal_to_xi_open, separating_witness, zero_set_of_family

__all__ = [
    "CoefficientGroup",
    "GammaElement",
    "BalanceViolation",
    "CoefficientNotInDelta",
    "NotMeasurePreserving",
    "make_element",
    "state_omega",
    "act",
    "InterpolationProblem",
    "PreconditionViolated",
    "DeltaNotClosed",
    "SearchBound",
    "riesz_interpolate",
    "search_interpolant",
    "OrderIdeal",
    "ideal_from_compact",
    "ideal_member",
    "ideal_to_xi_open",
    "separating_witness",
    "zero_set_of_family",
]
