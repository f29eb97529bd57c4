"""Coefficient value groups: subgroups of the rationals that element
values are required to live in.

Supported kinds are the full rationals, the integers, and the p-power
denominator rings Z[1/p] (p = 2 gives the dyadic rationals).  Each of
these is closed under multiplication, so the measure-compatibility
conditions reduce to membership of mu(L) and 1/mu(L); they are checked
per exhaustion set, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..certificates import Certificate
from ..model import DiscreteSpaceModel
from ..rationals import format_rational


def _is_power_of(q: int, p: int) -> bool:
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class CoefficientGroup:
    kind: str  # "Q" | "Z" | "Z[1/p]"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "Z", "Z[1/p]"):
            raise ValueError(f"unknown coefficient group kind {self.kind!r}")
        if self.kind == "Z[1/p]" and self.p < 2:
            raise ValueError("Z[1/p] needs a prime-like p >= 2")

    @classmethod
    def rationals(cls):
        return cls("Q")

    @classmethod
    def integers(cls):
        return cls("Z")

    @classmethod
    def dyadic(cls):
        return cls("Z[1/p]", 2)

    @classmethod
    def named(cls, name: str) -> "CoefficientGroup":
        name = name.strip()
        if name.upper() in ("Q", "QQ"):
            return cls.rationals()
        if name.upper() in ("Z", "ZZ"):
            return cls.integers()
        if name in ("Z[1/2]", "dyadic"):
            return cls.dyadic()
        if name.startswith("Z[1/") and name.endswith("]"):
            return cls("Z[1/p]", int(name[4:-1]))
        raise ValueError(f"unknown coefficient group {name!r}")

    def contains(self, value) -> bool:
        q = Fraction(value)
        if self.kind == "Q":
            return True
        if self.kind == "Z":
            return q.denominator == 1
        return _is_power_of(q.denominator, self.p)

    def name(self) -> str:
        if self.kind == "Z[1/p]":
            return f"Z[1/{self.p}]"
        return self.kind

    def closure_report(self, model: DiscreteSpaceModel, n_max: int = 4, singleton_window=()) -> Certificate:
        """Check, per exhaustion set L_n up to n_max, that mu(L_n) and
        1/mu(L_n) multiply the group into itself, and that singleton
        measures from the probe window do too.

        The built-in kinds are rings containing 1, so "mu * r stays in the
        group for every r" holds exactly when mu itself is a member.
        """
        rows = []
        ok = True
        for n in range(1, n_max + 1):
            ln = model.exhaustion(n)
            mu = model.mu(ln)
            fwd = self.contains(mu)
            bwd = self.contains(Fraction(1) / mu)
            ok = ok and fwd and bwd
            rows.append(
                {
                    "n": n,
                    "mu": format_rational(mu),
                    "mu_multiplies_into_group": fwd,
                    "inverse_mu_multiplies_into_group": bwd,
                }
            )
        singles = []
        for x in singleton_window:
            w = model.weight(x)
            member = self.contains(w)
            ok = ok and member
            singles.append({"point": x, "weight": format_rational(w), "in_group": member})
        return Certificate(
            kind="coefficient-closure",
            passed=ok,
            data={
                "group": self.name(),
                "contains_one": self.contains(1),
                "exhaustion_rows": rows,
                "singleton_rows": singles,
            },
        )
