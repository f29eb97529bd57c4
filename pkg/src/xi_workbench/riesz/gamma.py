"""Elements of the ordered group: a constant value at infinity plus a
finite, measure-balanced deviation table.

An element is the function equal to ``constant`` off its support and
``constant + deviation[x]`` on it; the deviations satisfy the exact
balance condition  sum_x deviation[x] * weight(x) = 0,  which makes the
constant the weighted mean over every finite set containing the support
and hence the value of the canonical state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..model import BijectionSpec, DiscreteSpaceModel
from ..rationals import format_label, format_rational, label_key, parse_label, parse_rational
from .coefficients import CoefficientGroup


class BalanceViolation(ValueError):
    def __init__(self, total):
        self.total = total
        super().__init__(f"weighted deviation sum must vanish exactly, got {total}")


class CoefficientNotInDelta(ValueError):
    def __init__(self, value, group):
        self.value = value
        self.group = group
        super().__init__(f"value {value} is not in the coefficient group {group}")


class NotMeasurePreserving(ValueError):
    def __init__(self, point, w_from, w_to):
        self.point = point
        super().__init__(
            f"bijection does not preserve the measure at {point!r}: weight {w_from} -> {w_to}"
        )


@dataclass(frozen=True)
class GammaElement:
    model: DiscreteSpaceModel
    delta: CoefficientGroup
    constant: Fraction
    deviations: tuple  # sorted tuple of (label, nonzero Fraction)

    def value(self, x) -> Fraction:
        for lbl, d in self.deviations:
            if lbl == x:
                return self.constant + d
        return self.constant

    @property
    def support(self) -> tuple:
        return tuple(lbl for lbl, _ in self.deviations)

    def deviation_map(self) -> dict:
        return dict(self.deviations)

    # -- group structure --------------------------------------------------

    def _check_compatible(self, other: "GammaElement"):
        if self.model != other.model or self.delta != other.delta:
            raise ValueError("mixed base models or coefficient groups")

    def __add__(self, other: "GammaElement") -> "GammaElement":
        self._check_compatible(other)
        devs = dict(self.deviations)
        for lbl, d in other.deviations:
            devs[lbl] = devs.get(lbl, Fraction(0)) + d
        return make_element(self.delta, self.model, self.constant + other.constant, devs)

    def __neg__(self) -> "GammaElement":
        return make_element(
            self.delta, self.model, -self.constant, {lbl: -d for lbl, d in self.deviations}
        )

    def __sub__(self, other: "GammaElement") -> "GammaElement":
        return self + (-other)

    def scale_int(self, n: int) -> "GammaElement":
        return make_element(
            self.delta, self.model, n * self.constant, {lbl: n * d for lbl, d in self.deviations}
        )

    def is_positive(self) -> bool:
        """Nonnegative everywhere: at infinity (the constant) and at every
        support point."""
        if self.constant < 0:
            return False
        return all(self.constant + d >= 0 for _, d in self.deviations)

    def leq(self, other: "GammaElement") -> bool:
        return (other - self).is_positive()

    def unit_dominating_multiple(self) -> int:
        """Least integer n with the element <= n * 1."""
        values = [self.constant] + [self.constant + d for _, d in self.deviations]
        top = max(values)
        n = top.numerator // top.denominator
        if n * top.denominator < top.numerator:
            n += 1
        return n

    def to_json(self) -> dict:
        return {
            "constant": format_rational(self.constant),
            "dev": {format_label(lbl): format_rational(d) for lbl, d in self.deviations},
        }

    @classmethod
    def from_json(cls, data: dict, delta: CoefficientGroup, model: DiscreteSpaceModel) -> "GammaElement":
        devs = {parse_label(k): parse_rational(v) for k, v in data.get("dev", {}).items()}
        return make_element(delta, model, parse_rational(data["constant"]), devs)


def make_element(delta: CoefficientGroup, model: DiscreteSpaceModel, constant, deviations=None) -> GammaElement:
    """Canonical element: zero deviations are dropped, membership in the
    coefficient group and the exact balance condition are enforced."""
    r = Fraction(constant)
    devs = {}
    for lbl, d in (deviations or {}).items():
        d = Fraction(d)
        if d != 0:
            devs[lbl] = d
    if not delta.contains(r):
        raise CoefficientNotInDelta(r, delta.name())
    for lbl, d in devs.items():
        if not delta.contains(r + d):
            raise CoefficientNotInDelta(r + d, delta.name())
    total = sum((d * model.weight(lbl) for lbl, d in devs.items()), Fraction(0))
    if total != 0:
        raise BalanceViolation(total)
    ordered = tuple(sorted(devs.items(), key=lambda kv: label_key(kv[0])))
    return GammaElement(model=model, delta=delta, constant=r, deviations=ordered)


def constant_element(delta: CoefficientGroup, model: DiscreteSpaceModel, value) -> GammaElement:
    return make_element(delta, model, value, {})


def state_omega(a: GammaElement) -> Fraction:
    """The canonical state: the value at infinity.  Additive, unital, and
    invariant under measure-preserving relocation."""
    return a.constant


def act(h: BijectionSpec, a: GammaElement) -> GammaElement:
    """Relocate deviations along the bijection: the image element takes at
    h(x) the value the original took at x, and is unchanged at infinity.

    Requires the bijection to preserve the weights on the support, which
    is exactly what keeps the balance condition intact.
    """
    new_devs = {}
    for lbl, d in a.deviations:
        target = h.apply(lbl)
        w_from = a.model.weight(lbl)
        w_to = a.model.weight(target)
        if w_from != w_to:
            raise NotMeasurePreserving(lbl, w_from, w_to)
        if target in new_devs:
            raise ValueError("bijection is not injective on the support")
        new_devs[target] = d
    return make_element(a.delta, a.model, a.constant, new_devs)
