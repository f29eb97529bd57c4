"""Order ideals indexed by finite zero sets, and their correspondence
with the nontrivial opens of a window model.

The ideal attached to a finite set F consists of the elements vanishing
everywhere on F; distinct sets are separated by explicit witness
elements of the form  w(y) * delta_x - w(x) * delta_y,  which are
balanced by construction.  Under the correspondence F -> complement of F
the ideal lattice maps order-isomorphically onto the nonempty opens of a
window model containing F.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..model import BijectionSpec, DiscreteSpaceModel
from ..rationals import label_key, label_to_json
from ..topology.xi import XiWindow
from .coefficients import CoefficientGroup
from .gamma import GammaElement, make_element


@dataclass(frozen=True)
class OrderIdeal:
    zero_set: frozenset

    def __post_init__(self):
        object.__setattr__(self, "zero_set", frozenset(self.zero_set))

    def member(self, a: GammaElement) -> bool:
        return all(a.value(x) == 0 for x in self.zero_set)

    def to_json(self) -> dict:
        return {"zero_set": [label_to_json(x) for x in sorted(self.zero_set, key=label_key)]}


def ideal_from_compact(F) -> OrderIdeal:
    return OrderIdeal(frozenset(F))


def ideal_member(ideal: OrderIdeal, a: GammaElement) -> bool:
    return ideal.member(a)


def zero_set_of_family(gens, window) -> frozenset:
    """Common zero set of the family inside the window; with no
    generators the whole window qualifies (empty-intersection
    convention).  When every generator has zero constant the true zero
    set extends past any window; callers detect that via the constants.
    """
    win = tuple(sorted(set(window), key=label_key))
    out = []
    for x in win:
        if all(g.value(x) == 0 for g in gens):
            out.append(x)
    return frozenset(out)


def ideal_to_xi_open(ideal: OrderIdeal, w: XiWindow) -> frozenset:
    """The open set corresponding to the ideal: everything except its
    zero set.  Order-reversing in the zero set, order-preserving from
    ideals to opens."""
    F = set(ideal.zero_set)
    if not F <= set(w.window):
        raise ValueError("zero set escapes the window")
    mask = w.open_for_complement_of(F)
    if not w.space.is_open(mask):
        raise AssertionError("complement of a window subset must be open in the window model")
    return frozenset(w.space.labels_of(mask))


def separating_witness(
    F1,
    F2,
    delta: CoefficientGroup,
    model: DiscreteSpaceModel,
    mover: BijectionSpec | None = None,
    max_steps: int = 1000,
) -> GammaElement:
    """Balanced element separating the ideals of two distinct finite sets:
    it vanishes on the smaller-side set but not at a chosen point of the
    difference.

    The partner point y is found by pushing x with the mover bijection
    until it leaves {x} union F2; such a point exists whenever no finite
    set is invariant under the mover (translation by one on the integers
    by default).
    """
    F1, F2 = frozenset(F1), frozenset(F2)
    if F1 == F2:
        raise ValueError("sets are equal; nothing separates their ideals")
    if F1 - F2:
        x = min(F1 - F2, key=label_key)
        avoid = F2
    else:
        x = min(F2 - F1, key=label_key)
        avoid = F1
    if mover is None:
        mover = BijectionSpec.translation(1)
    y = x
    for _ in range(max_steps):
        y = mover.apply(y)
        if y != x and y not in avoid:
            break
    else:
        raise ValueError("mover failed to escape the set; is some finite set invariant?")
    return make_element(
        delta,
        model,
        0,
        {x: model.weight(y), y: -model.weight(x)},
    )
