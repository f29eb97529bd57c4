"""Finite-window models of the one-extra-point compactification whose
only nonempty opens are complements of finite sets of ordinary points.

A window W of the discrete base space induces the space on W + {inf}
whose opens are the empty set together with every set containing inf;
equivalently, the complements (inside W + {inf}) of the subsets of W.
That family has exactly 2^|W| + 1 members and is the exact finite
restriction of the intended topology on the full space.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..certificates import Certificate
from ..model import INFINITY, DiscreteSpaceModel
from ..rationals import label_key, label_to_json
from .spaces import FiniteT0Space, is_point_complete, is_prime_space


@dataclass(frozen=True)
class XiWindow:
    base: DiscreteSpaceModel
    window: tuple
    space: FiniteT0Space

    @property
    def infinity(self):
        return INFINITY

    def open_for_complement_of(self, finite_set) -> int:
        """Bitmask of the open 'everything except the given window subset'."""
        missing = set(finite_set)
        if not missing <= set(self.window):
            raise ValueError("complement set escapes the window")
        return self.space.mask_of(p for p in self.space.points if p not in missing)


def xi_window(base: DiscreteSpaceModel, window) -> XiWindow:
    """Build the induced finite model on window + {inf}.

    The construction is definitional: the opens are {} plus the
    complements of all subsets of the window.  Structural invariants
    (open count 2^k + 1, every nonempty open contains inf) are asserted
    here; the full axiom sweep lives in verify_topology and is exercised
    by the test suites.
    """
    win = tuple(sorted(set(window), key=label_key))
    if INFINITY in win:
        raise ValueError("the window must consist of ordinary points")
    points = win + (INFINITY,)
    k = len(win)
    inf_bit = 1 << k
    opens = [0]
    for sub in range(1 << k):
        # complement of `sub` inside window + {inf}: always contains inf
        opens.append((((1 << k) - 1) ^ sub) | inf_bit)
    space = FiniteT0Space(points, opens)

    count = len(space.opens)
    if count != (1 << k) + 1:
        raise AssertionError(f"window model has {count} opens, expected 2^{k}+1")
    for u in space.opens:
        if u and not (u & inf_bit):
            raise AssertionError("nonempty open missing the point at infinity")
    return XiWindow(base=base, window=win, space=space)


def xi_window_structure_certificate(w: XiWindow) -> Certificate:
    """Window-level structure report: open count, infinity membership,
    T0, primeness, and point-completeness."""
    space = w.space
    k = len(w.window)
    inf_bit = 1 << space.index_of(INFINITY)
    count_ok = len(space.opens) == (1 << k) + 1
    inf_ok = all((u & inf_bit) or u == 0 for u in space.opens)
    n = len(space.points)
    t0_ok = True
    for i in range(n):
        for j in range(i + 1, n):
            if not any((u >> i & 1) != (u >> j & 1) for u in space.opens):
                t0_ok = False
    prime = is_prime_space(space)
    complete = is_point_complete(space)
    passed = count_ok and inf_ok and t0_ok and prime and complete
    return Certificate(
        kind="xi-window-structure",
        passed=passed,
        data={
            "window": [label_to_json(p) for p in w.window],
            "open_count": len(space.opens),
            "expected_open_count": (1 << k) + 1,
            "count_ok": count_ok,
            "every_nonempty_open_contains_infinity": inf_ok,
            "t0": t0_ok,
            "prime": prime,
            "point_complete": complete,
        },
    )
