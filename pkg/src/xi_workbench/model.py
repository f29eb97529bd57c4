"""Ground data shared by the topology and ordered-group engines:
countable discrete weighted spaces, their exhaustions, and the label
bijections that act on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .rationals import format_rational, label_from_json, label_key, label_to_json, parse_rational


class _Infinity:
    """Singleton label for the extra point adjoined to a window."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class GeneratorUndefinedError(ValueError):
    """A bijection spec was applied to a label it does not cover."""

    def __init__(self, label):
        self.label = label
        super().__init__(f"generator undefined on point {label!r}")


@dataclass(frozen=True)
class BijectionSpec:
    """Computable bijection of labels: an explicit table, an affine map
    x -> a*x + b on integers with a in {1, -1}, or both (table wins).
    """

    table: tuple = ()  # tuple of (src, dst) pairs
    affine: tuple | None = None  # (a, b) with a in {1, -1}

    def __post_init__(self):
        if self.affine is not None:
            a, b = self.affine
            if a not in (1, -1):
                raise ValueError("affine slope must be +1 or -1 for a bijection of the integers")
        srcs = [s for s, _ in self.table]
        dsts = [d for _, d in self.table]
        if len(set(srcs)) != len(srcs):
            raise ValueError("table has duplicate sources")
        if len(set(dsts)) != len(dsts):
            raise ValueError("table is not injective")
        object.__setattr__(self, "_map", dict(self.table))

    @classmethod
    def translation(cls, b: int) -> "BijectionSpec":
        return cls(affine=(1, b))

    @classmethod
    def identity(cls) -> "BijectionSpec":
        return cls(affine=(1, 0))

    @classmethod
    def from_table(cls, mapping: dict) -> "BijectionSpec":
        return cls(table=tuple(sorted(mapping.items(), key=lambda kv: label_key(kv[0]))))

    def defined_on(self, label) -> bool:
        if label in self._map:
            return True
        return self.affine is not None and isinstance(label, int) and not isinstance(label, bool)

    def apply(self, label):
        if label in self._map:
            return self._map[label]
        if self.affine is not None and isinstance(label, int) and not isinstance(label, bool):
            a, b = self.affine
            return a * label + b
        raise GeneratorUndefinedError(label)

    def __call__(self, label):
        return self.apply(label)

    def inverse(self) -> "BijectionSpec":
        inv_table = tuple((d, s) for s, d in self.table)
        inv_affine = None
        if self.affine is not None:
            a, b = self.affine
            # a = ±1, so x -> a*x - a*b inverts x -> a*x + b
            inv_affine = (a, -a * b)
        return BijectionSpec(table=tuple(sorted(inv_table, key=lambda kv: label_key(kv[0]))), affine=inv_affine)

    def is_injective_on(self, labels) -> bool:
        images = [self.apply(x) for x in labels]
        return len(set(images)) == len(images)

    def to_json(self) -> dict:
        out = {}
        if self.table:
            out["table"] = [[label_to_json(s), label_to_json(d)] for s, d in self.table]
        if self.affine is not None:
            out["affine"] = {"a": self.affine[0], "b": self.affine[1]}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "BijectionSpec":
        table = tuple(
            (label_from_json(s), label_from_json(d)) for s, d in data.get("table", [])
        )
        affine = None
        if "affine" in data:
            affine = (data["affine"]["a"], data["affine"]["b"])
        return cls(table=table, affine=affine)


_EXHAUSTION_KINDS = ("symmetric", "dyadic", "explicit")


@dataclass(frozen=True)
class DiscreteSpaceModel:
    """A countable discrete space with a strictly positive weight per point
    and a nested exhaustion by finite sets.

    The default is the integers with counting measure and the symmetric
    exhaustion L_n = [-n, n].  The "dyadic" exhaustion uses blocks of
    power-of-two cardinality, L_n = [-2^(n-1), 2^(n-1) - 1], so that the
    reciprocal measures 1/mu(L_n) stay inside the dyadic rationals.
    """

    weight_table: tuple = ()  # (label, Fraction) overrides
    default_weight: Fraction = Fraction(1)
    exhaustion_kind: str = "symmetric"
    exhaustion_sets: tuple = ()  # for kind "explicit": tuple of label tuples

    def __post_init__(self):
        if self.exhaustion_kind not in _EXHAUSTION_KINDS:
            raise ValueError(f"unknown exhaustion kind {self.exhaustion_kind!r}")
        if Fraction(self.default_weight) <= 0:
            raise ValueError("weights must be strictly positive")
        table = tuple((lbl, Fraction(w)) for lbl, w in self.weight_table)
        for lbl, w in table:
            if w <= 0:
                raise ValueError(f"weight at {lbl!r} must be strictly positive, got {w}")
        object.__setattr__(self, "weight_table", table)
        object.__setattr__(self, "default_weight", Fraction(self.default_weight))
        object.__setattr__(self, "_weights", dict(table))
        if self.exhaustion_kind == "explicit":
            sets = tuple(tuple(s) for s in self.exhaustion_sets)
            if not sets or any(not s for s in sets):
                raise ValueError("explicit exhaustion sets must be nonempty")
            for a, b in zip(sets, sets[1:]):
                if not set(a) <= set(b):
                    raise ValueError("exhaustion sets must be nested")
            object.__setattr__(self, "exhaustion_sets", sets)

    @classmethod
    def integers(cls) -> "DiscreteSpaceModel":
        return cls()

    @classmethod
    def integers_dyadic(cls) -> "DiscreteSpaceModel":
        return cls(exhaustion_kind="dyadic")

    def weight(self, label) -> Fraction:
        return self._weights.get(label, self.default_weight)

    def mu(self, labels) -> Fraction:
        return sum((self.weight(x) for x in labels), Fraction(0))

    def exhaustion(self, n: int) -> tuple:
        if n < 1:
            raise ValueError("exhaustion index starts at 1")
        if self.exhaustion_kind == "symmetric":
            return tuple(range(-n, n + 1))
        if self.exhaustion_kind == "dyadic":
            half = 1 << (n - 1)
            return tuple(range(-half, half))
        sets = self.exhaustion_sets
        return sets[min(n, len(sets)) - 1]

    def exhaustion_index_covering(self, labels, max_index: int = 10_000) -> int:
        """Least n with all given labels inside L_n."""
        wanted = set(labels)
        for n in range(1, max_index + 1):
            if wanted <= set(self.exhaustion(n)):
                return n
        raise ValueError(f"no exhaustion set up to index {max_index} covers {sorted(wanted, key=label_key)}")

    def to_json(self) -> dict:
        out: dict = {
            "default_weight": format_rational(self.default_weight),
            "exhaustion": self.exhaustion_kind,
        }
        if self.weight_table:
            out["weights"] = {str(k): format_rational(w) for k, w in self.weight_table}
        if self.exhaustion_kind == "explicit":
            out["exhaustion_sets"] = [[label_to_json(x) for x in s] for s in self.exhaustion_sets]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "DiscreteSpaceModel":
        table = tuple(
            (label_from_json(int(k) if k.lstrip("-").isdigit() else k), parse_rational(v))
            for k, v in data.get("weights", {}).items()
        )
        sets = tuple(
            tuple(label_from_json(x) for x in s) for s in data.get("exhaustion_sets", [])
        )
        return cls(
            weight_table=table,
            default_weight=parse_rational(data.get("default_weight", "1")),
            exhaustion_kind=data.get("exhaustion", "symmetric"),
            exhaustion_sets=sets,
        )
