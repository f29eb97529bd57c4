"""Constructive interpolation and the exhaustive search oracle.

Given rho_1, rho_2 <= sigma_1, sigma_2, the constructive route takes the
pointwise maximum of the lower pair on the first exhaustion set covering
all four supports, extends it by its weighted mean, and returns the
result; all four bounds and the balance condition then hold exactly and
are re-verified.

The search oracle explores a finite candidate space (a support window
plus a denominator cap) exhaustively and returns either a verified
interpolant or a transcript proving none exists within the bound.  Over
the integers it reproduces the known interpolation failure of the
quadruple 1, 1 - d0 + d1 <= 2, 2 - d0 + d1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..certificates import Certificate
from ..model import DiscreteSpaceModel
from ..rationals import format_rational, label_key, label_to_json
from .coefficients import CoefficientGroup
from .gamma import GammaElement, make_element


class PreconditionViolated(ValueError):
    def __init__(self, pair, point, lower, upper):
        self.pair = pair
        self.point = point
        self.lower = lower
        self.upper = upper
        where = "at infinity" if point is None else f"at point {point!r}"
        super().__init__(
            f"lower element {pair[0]} exceeds upper element {pair[1]} {where}: {lower} > {upper}"
        )


class DeltaNotClosed(ValueError):
    def __init__(self, value, group):
        self.value = value
        super().__init__(
            f"interpolation mean {value} falls outside the coefficient group {group}; "
            "the model/exhaustion pairing does not satisfy the closure conditions"
        )


@dataclass(frozen=True)
class InterpolationProblem:
    rho1: GammaElement
    rho2: GammaElement
    sigma1: GammaElement
    sigma2: GammaElement

    def __post_init__(self):
        ref = self.rho1
        for other in (self.rho2, self.sigma1, self.sigma2):
            if other.model != ref.model or other.delta != ref.delta:
                raise ValueError("mixed base models or coefficient groups")

    @property
    def elements(self):
        return (self.rho1, self.rho2, self.sigma1, self.sigma2)

    @property
    def lowers(self):
        return (self.rho1, self.rho2)

    @property
    def uppers(self):
        return (self.sigma1, self.sigma2)

    def to_json(self) -> dict:
        return {
            "rho1": self.rho1.to_json(),
            "rho2": self.rho2.to_json(),
            "sigma1": self.sigma1.to_json(),
            "sigma2": self.sigma2.to_json(),
        }


def check_preconditions(problem: InterpolationProblem):
    """Raise with a witness point for the first violated bound."""
    names = {0: "rho1", 1: "rho2", 2: "sigma1", 3: "sigma2"}
    for j, rho in enumerate(problem.lowers):
        for k, sigma in enumerate(problem.uppers):
            if rho.constant > sigma.constant:
                raise PreconditionViolated(
                    (names[j], names[2 + k]), None, rho.constant, sigma.constant
                )
            points = sorted(set(rho.support) | set(sigma.support), key=label_key)
            for x in points:
                lo, hi = rho.value(x), sigma.value(x)
                if lo > hi:
                    raise PreconditionViolated((names[j], names[2 + k]), x, lo, hi)


def riesz_interpolate(problem: InterpolationProblem, model: DiscreteSpaceModel | None = None) -> GammaElement:
    """Constructive interpolant.

    The support window is the first exhaustion set covering every input
    support; on it the output is max(rho1, rho2), off it the weighted
    mean of that maximum.  Output bounds, balance, and coefficient-group
    membership are all exact; the mean landing outside the coefficient
    group raises DeltaNotClosed.
    """
    if model is None:
        model = problem.rho1.model
    elif model != problem.rho1.model:
        raise ValueError("explicit model disagrees with the elements' model")
    check_preconditions(problem)

    delta = problem.rho1.delta
    support = set()
    for el in problem.elements:
        support |= set(el.support)
    n = model.exhaustion_index_covering(support) if support else 1
    window = model.exhaustion(n)

    values = {x: max(problem.rho1.value(x), problem.rho2.value(x)) for x in window}
    total = sum((values[x] * model.weight(x) for x in window), Fraction(0))
    mu = model.mu(window)
    t = total / mu
    if not delta.contains(t):
        raise DeltaNotClosed(t, delta.name())

    eta = make_element(delta, model, t, {x: values[x] - t for x in window})

    for rho in problem.lowers:
        if not rho.leq(eta):
            raise AssertionError("constructed interpolant violates a lower bound")
    for sigma in problem.uppers:
        if not eta.leq(sigma):
            raise AssertionError("constructed interpolant violates an upper bound")
    return eta


def interpolation_certificate(problem: InterpolationProblem, eta: GammaElement) -> Certificate:
    """Re-checkable record: every bound evaluated at every relevant point
    plus the exact balance sum."""
    model = eta.model
    points = set(eta.support)
    for el in problem.elements:
        points |= set(el.support)
    points = sorted(points, key=label_key)
    rows = []
    ok = True
    for x in points + [None]:
        if x is None:
            vals = {
                "rho1": problem.rho1.constant,
                "rho2": problem.rho2.constant,
                "eta": eta.constant,
                "sigma1": problem.sigma1.constant,
                "sigma2": problem.sigma2.constant,
            }
        else:
            vals = {
                "rho1": problem.rho1.value(x),
                "rho2": problem.rho2.value(x),
                "eta": eta.value(x),
                "sigma1": problem.sigma1.value(x),
                "sigma2": problem.sigma2.value(x),
            }
        good = (
            max(vals["rho1"], vals["rho2"]) <= vals["eta"] <= min(vals["sigma1"], vals["sigma2"])
        )
        ok = ok and good
        rows.append(
            {
                "point": None if x is None else label_to_json(x),
                **{k: format_rational(v) for k, v in vals.items()},
                "ok": good,
            }
        )
    balance = sum((d * model.weight(lbl) for lbl, d in eta.deviations), Fraction(0))
    ok = ok and balance == 0
    return Certificate(
        kind="riesz-interpolation",
        passed=ok,
        data={
            "group": eta.delta.name(),
            "model": model.to_json(),
            "problem": problem.to_json(),
            "eta": eta.to_json(),
            "rows": rows,
            "balance": format_rational(balance),
        },
    )


# -- exhaustive oracle --------------------------------------------------


@dataclass(frozen=True)
class SearchBound:
    """Finite search space: candidate supports inside `window`, candidate
    values with reduced denominator <= max_denominator."""

    window: tuple
    max_denominator: int = 4

    def __post_init__(self):
        object.__setattr__(self, "window", tuple(sorted(set(self.window), key=label_key)))
        if self.max_denominator < 1:
            raise ValueError("denominator cap must be >= 1")


def _group_values_in(delta: CoefficientGroup, lo: Fraction, hi: Fraction, max_den: int):
    """All group members in [lo, hi] with reduced denominator <= max_den,
    ascending."""
    if lo > hi:
        return []
    if delta.kind == "Z":
        dens = [1]
    elif delta.kind == "Z[1/p]":
        dens = []
        d = 1
        while d <= max_den:
            dens.append(d)
            d *= delta.p
    else:
        dens = list(range(1, max_den + 1))
    out = set()
    for den in dens:
        start = lo * den
        first = start.numerator // start.denominator
        if first * start.denominator < start.numerator:
            first += 1
        stop = hi * den
        last = stop.numerator // stop.denominator
        num = first
        while num <= last:
            q = Fraction(num, den)
            if q.denominator <= max_den and delta.contains(q):
                out.add(q)
            num += 1
    return sorted(out)


def search_interpolant(problem: InterpolationProblem, bound: SearchBound):
    """Brute-force oracle over the bounded candidate space.

    Returns (element_or_None, transcript).  Candidates are scanned in
    canonical order (constants ascending, then per-point values ascending
    with points in label order), so the least solution wins and reruns
    are reproducible.  The transcript records, per candidate constant,
    either the found assignment, an interval argument showing the balance
    equation is unsatisfiable, or the number of exhausted branches.
    """
    model = problem.rho1.model
    delta = problem.rho1.delta
    support = set()
    for el in problem.elements:
        support |= set(el.support)
    if not support <= set(bound.window):
        raise ValueError("search window must contain every input support")

    points = list(bound.window)
    weights = [model.weight(x) for x in points]
    lo_c = max(problem.rho1.constant, problem.rho2.constant)
    hi_c = min(problem.sigma1.constant, problem.sigma2.constant)
    constants = _group_values_in(delta, lo_c, hi_c, bound.max_denominator)

    candidates = {}
    empty_point = None
    for x in points:
        lo = max(problem.rho1.value(x), problem.rho2.value(x))
        hi = min(problem.sigma1.value(x), problem.sigma2.value(x))
        vals = _group_values_in(delta, lo, hi, bound.max_denominator)
        candidates[x] = vals
        if not vals and empty_point is None:
            empty_point = x

    transcript = {
        "window": [label_to_json(x) for x in points],
        "max_denominator": bound.max_denominator,
        "group": delta.name(),
        "constant_range": [format_rational(lo_c), format_rational(hi_c)],
        "constants": [format_rational(t) for t in constants],
        "per_point_candidates": {
            str(i): [format_rational(v) for v in candidates[x]] for i, x in enumerate(points)
        },
        "branches": [],
    }

    if empty_point is not None:
        transcript["outcome"] = "no-candidate-values"
        transcript["empty_point"] = label_to_json(empty_point)
        return None, transcript
    if not constants:
        transcript["outcome"] = "no-candidate-constants"
        return None, transcript

    n_pts = len(points)
    for t in constants:
        contrib = [[(v - t) * w for v in candidates[x]] for x, w in zip(points, weights)]
        suffix_lo = [Fraction(0)] * (n_pts + 1)
        suffix_hi = [Fraction(0)] * (n_pts + 1)
        for i in range(n_pts - 1, -1, -1):
            suffix_lo[i] = suffix_lo[i + 1] + min(contrib[i])
            suffix_hi[i] = suffix_hi[i + 1] + max(contrib[i])

        if not (suffix_lo[0] <= 0 <= suffix_hi[0]):
            transcript["branches"].append(
                {
                    "t": format_rational(t),
                    "outcome": "balance-interval-excludes-zero",
                    "interval": [format_rational(suffix_lo[0]), format_rational(suffix_hi[0])],
                }
            )
            continue

        assignment = [None] * n_pts
        nodes = 0

        def dfs(i, running):
            nonlocal nodes
            if i == n_pts:
                return running == 0
            for j, c in enumerate(contrib[i]):
                nodes += 1
                rest = running + c
                if suffix_lo[i + 1] <= -rest <= suffix_hi[i + 1]:
                    assignment[i] = j
                    if dfs(i + 1, rest):
                        return True
            assignment[i] = None
            return False

        if dfs(0, Fraction(0)):
            devs = {
                x: candidates[x][assignment[i]] - t
                for i, x in enumerate(points)
                if candidates[x][assignment[i]] != t
            }
            eta = make_element(delta, model, t, devs)
            for rho in problem.lowers:
                if not rho.leq(eta):
                    raise AssertionError("oracle produced an element violating a lower bound")
            for sigma in problem.uppers:
                if not eta.leq(sigma):
                    raise AssertionError("oracle produced an element violating an upper bound")
            transcript["branches"].append(
                {
                    "t": format_rational(t),
                    "outcome": "found",
                    "values": [format_rational(candidates[x][assignment[i]]) for i, x in enumerate(points)],
                    "nodes": nodes,
                }
            )
            transcript["outcome"] = "found"
            transcript["result"] = eta.to_json()
            return eta, transcript

        transcript["branches"].append(
            {"t": format_rational(t), "outcome": "exhausted", "nodes": nodes}
        )

    transcript["outcome"] = "none-in-bound"
    return None, transcript


def search_certificate(problem: InterpolationProblem, bound: SearchBound, result, transcript) -> Certificate:
    passed = (transcript["outcome"] == "found") == (result is not None)
    return Certificate(
        kind="riesz-search",
        passed=passed,
        data={
            "group": problem.rho1.delta.name(),
            "model": problem.rho1.model.to_json(),
            "problem": problem.to_json(),
            "window": transcript["window"],
            "max_denominator": bound.max_denominator,
            "result": None if result is None else result.to_json(),
            "transcript": transcript,
        },
    )
