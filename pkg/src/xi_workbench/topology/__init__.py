from .spaces import (
    FiniteT0Space,
    all_t0_spaces,
    discrete_space,
    is_point_complete,
    is_prime_space,
    point_closure,
    sierpinski,
    verify_topology,
)
from .xi import XiWindow, xi_window
from .maps import SpaceMap, NotContinuousError, is_pseudo_epimorphic, is_pseudo_open, pseudo_graph, xi_map
from .actions import ActionSpec, Verdict, is_effective, minimality_probe

__all__ = [
    "FiniteT0Space",
    "all_t0_spaces",
    "discrete_space",
    "is_point_complete",
    "is_prime_space",
    "point_closure",
    "sierpinski",
    "verify_topology",
    "XiWindow",
    "xi_window",
    "SpaceMap",
    "NotContinuousError",
    "is_pseudo_epimorphic",
    "is_pseudo_open",
    "pseudo_graph",
    "xi_map",
    "ActionSpec",
    "Verdict",
    "is_effective",
    "minimality_probe",
]
