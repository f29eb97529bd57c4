"""Finite T0-space engine.

Points carry opaque labels; the open-set family is stored as sorted
bitmasks over the point order, so every check is exact and every witness
is selected deterministically (least bitmask first).

A finite topology is the same thing as a preorder, and a T0 one the same
thing as a partial order, via specialization: x lies in the closure of y
exactly when every open set containing x contains y.  That bijection
drives both the exhaustive enumeration of small spaces and the fast
primeness test below.
"""

from __future__ import annotations

from itertools import combinations, permutations

from ..certificates import Certificate
from ..rationals import label_key, label_to_json


class FiniteT0Space:
    """Finite point set plus a family of open subsets.

    The constructor canonicalizes (sorts and dedupes the family) but does
    not validate the topology axioms; :func:`verify_topology` reports
    violations instead of raising, so deliberately broken families can be
    constructed and examined.
    """

    __slots__ = ("points", "opens", "_index", "_openset")

    def __init__(self, points, opens):
        pts = tuple(points)
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate point labels")
        index = {p: i for i, p in enumerate(pts)}
        masks = set()
        for o in opens:
            if isinstance(o, int) and not isinstance(o, bool):
                mask = o
                if mask < 0 or mask >= (1 << len(pts)):
                    raise ValueError(f"bitmask {mask} out of range")
            else:
                mask = 0
                for p in o:
                    if p not in index:
                        raise ValueError(f"open set mentions unknown point {p!r}")
                    mask |= 1 << index[p]
            masks.add(mask)
        self.points = pts
        self.opens = tuple(sorted(masks))
        self._index = index
        self._openset = masks

    @classmethod
    def from_opens(cls, opens) -> "FiniteT0Space":
        """Build from label sets; the point set is their union, sorted."""
        labels = set()
        for o in opens:
            labels |= set(o)
        return cls(sorted(labels, key=label_key), opens)

    # -- bitmask helpers ------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def mask_of(self, labels) -> int:
        mask = 0
        for p in labels:
            mask |= 1 << self._index[p]
        return mask

    def labels_of(self, mask: int) -> tuple:
        return tuple(p for i, p in enumerate(self.points) if mask >> i & 1)

    def index_of(self, label) -> int:
        if label not in self._index:
            raise ValueError(f"unknown point {label!r}")
        return self._index[label]

    def is_open(self, mask: int) -> bool:
        return mask in self._openset

    def closed_sets(self) -> tuple:
        full = self.full_mask
        return tuple(sorted(full ^ u for u in self.opens))

    def closure(self, mask: int) -> int:
        """Smallest closed superset: complement of the union of opens
        disjoint from the set."""
        avoid = 0
        for u in self.opens:
            if u & mask == 0:
                avoid |= u
        return self.full_mask & ~avoid

    def min_neighborhood(self, label) -> int:
        """Intersection of all opens containing the point (open whenever
        the family is a genuine finite topology)."""
        i = self.index_of(label)
        mask = self.full_mask
        for u in self.opens:
            if u >> i & 1:
                mask &= u
        return mask

    def subspace(self, mask: int) -> "FiniteT0Space":
        pts = self.labels_of(mask)
        rel = {u & mask for u in self.opens}
        return FiniteT0Space(pts, [self.labels_of(r) for r in rel])

    def __eq__(self, other):
        return (
            isinstance(other, FiniteT0Space)
            and self.points == other.points
            and self.opens == other.opens
        )

    def __hash__(self):
        return hash((self.points, self.opens))

    def __repr__(self):
        return f"FiniteT0Space({len(self.points)} points, {len(self.opens)} opens)"

    def to_json(self) -> dict:
        return {
            "points": [label_to_json(p) for p in self.points],
            "opens": [[label_to_json(p) for p in self.labels_of(u)] for u in self.opens],
        }


def sierpinski() -> FiniteT0Space:
    """Two points a, b with opens {}, {a}, {a, b}."""
    return FiniteT0Space(("a", "b"), [(), ("a",), ("a", "b")])


def discrete_space(labels) -> FiniteT0Space:
    pts = tuple(sorted(labels, key=label_key))
    n = len(pts)
    return FiniteT0Space(pts, range(1 << n))


def verify_topology(space: FiniteT0Space) -> Certificate:
    """Check the topology axioms and T0; failures are reported with the
    first counterexample in canonical order, never raised."""
    opens = set(space.opens)
    full = space.full_mask
    checks = []

    checks.append({"name": "empty-open", "passed": 0 in opens, "witness": None})
    checks.append({"name": "full-open", "passed": full in opens, "witness": None})

    union_witness = None
    inter_witness = None
    sorted_opens = space.opens
    for a, b in combinations(sorted_opens, 2):
        if union_witness is None and (a | b) not in opens:
            union_witness = (a, b)
        if inter_witness is None and (a & b) not in opens:
            inter_witness = (a, b)
        if union_witness is not None and inter_witness is not None:
            break
    checks.append(
        {
            "name": "union-closure",
            "passed": union_witness is None,
            "witness": None
            if union_witness is None
            else [[label_to_json(p) for p in space.labels_of(m)] for m in union_witness],
        }
    )
    checks.append(
        {
            "name": "intersection-closure",
            "passed": inter_witness is None,
            "witness": None
            if inter_witness is None
            else [[label_to_json(p) for p in space.labels_of(m)] for m in inter_witness],
        }
    )

    t0_witness = None
    n = len(space.points)
    for i in range(n):
        for j in range(i + 1, n):
            separated = any((u >> i & 1) != (u >> j & 1) for u in sorted_opens)
            if not separated:
                t0_witness = (space.points[i], space.points[j])
                break
        if t0_witness is not None:
            break
    checks.append(
        {
            "name": "t0-separation",
            "passed": t0_witness is None,
            "witness": None if t0_witness is None else [label_to_json(p) for p in t0_witness],
        }
    )

    passed = all(c["passed"] for c in checks)
    return Certificate(
        kind="topology-axioms",
        passed=passed,
        data={"space": space.to_json(), "checks": checks},
    )


def point_closure(space: FiniteT0Space, x) -> frozenset:
    """Closure of {x}: complement of the union of opens missing x."""
    i = space.index_of(x)
    return frozenset(space.labels_of(space.closure(1 << i)))


def _has_generic_point(space: FiniteT0Space, mask: int, closures) -> bool:
    """Is some point's closure, within the subset, the whole subset?"""
    m = mask
    while m:
        low = m & -m
        i = low.bit_length() - 1
        if closures[i] & mask == mask:
            return True
        m ^= low
    return False


def is_prime_space(space: FiniteT0Space) -> bool:
    """No two proper closed subsets cover the space.

    Computed two independent ways and cross-checked: (a) existence of a
    point whose closure is everything, which for finite T0 spaces is
    equivalent to not being covered by two proper closed sets, and
    (b) nonexistence of two disjoint nonempty opens, probed on minimal
    neighborhoods (every nonempty open contains one).
    """
    n = len(space.points)
    closures = [space.closure(1 << i) for i in range(n)]
    via_closed = _has_generic_point(space, space.full_mask, closures) or n == 0

    via_opens = True
    min_nbhds = [space.min_neighborhood(p) for p in space.points]
    for a, b in combinations(min_nbhds, 2):
        if a & b == 0:
            via_opens = False
            break

    if via_closed != via_opens:
        raise AssertionError(
            "primeness cross-validation disagreement; the open family is not a topology"
        )
    return via_closed


def is_point_complete(space: FiniteT0Space) -> bool:
    """Every nonempty closed subset that is prime in its relative topology
    is the closure of one of its points.

    Relative closures of points inside a closed subset T are the global
    closures intersected with T, so no subspace has to be materialized.
    """
    cert = verify_topology(space)
    t0 = next(c for c in cert.data["checks"] if c["name"] == "t0-separation")
    if not t0["passed"]:
        raise ValueError(f"space is not T0; witness pair {t0['witness']}")

    n = len(space.points)
    closures = [space.closure(1 << i) for i in range(n)]
    for closed in space.closed_sets():
        if closed == 0:
            continue
        prime = False
        witness_closure = False
        m = closed
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if closures[i] & closed == closed:
                prime = True
                if closures[i] == closed:
                    witness_closure = True
                    break
            m ^= low
        if prime and not witness_closure:
            return False
    return True


# -- exhaustive enumeration of small spaces -----------------------------


def _downclosed_subsets(down, k):
    out = []
    for mask in range(1 << k):
        ok = True
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if down[i] & ~mask:
                ok = False
                break
            m ^= low
        if ok:
            out.append(mask)
    return out


def _naturally_labeled_posets(n):
    """Strict down-set rows for posets where 0..n-1 is a linear extension."""

    def rec(down):
        k = len(down)
        if k == n:
            yield tuple(down)
            return
        for d in _downclosed_subsets(down, k):
            down.append(d)
            yield from rec(down)
            down.pop()

    yield from rec([])


def all_labeled_posets(n):
    """All strict partial orders on 0..n-1, as tuples of down-set bitmasks."""
    seen = set()
    perms = list(permutations(range(n)))
    for down in _naturally_labeled_posets(n):
        for perm in perms:
            relabeled = [0] * n
            for j in range(n):
                mask = 0
                m = down[j]
                while m:
                    low = m & -m
                    mask |= 1 << perm[low.bit_length() - 1]
                    m ^= low
                relabeled[perm[j]] = mask
            key = tuple(relabeled)
            if key not in seen:
                seen.add(key)
                yield key


def poset_to_space(down) -> FiniteT0Space:
    """Opens are the up-sets of the order whose closed sets are down-sets."""
    n = len(down)
    up = [0] * n
    for j in range(n):
        m = down[j]
        while m:
            low = m & -m
            up[low.bit_length() - 1] |= 1 << j
            m ^= low
    opens = []
    for mask in range(1 << n):
        ok = True
        m = mask
        while m:
            low = m & -m
            if up[low.bit_length() - 1] & ~mask:
                ok = False
                break
            m ^= low
        if ok:
            opens.append(mask)
    return FiniteT0Space(tuple(range(n)), opens)


def all_t0_spaces(n):
    """Every T0 topology on the labeled points 0..n-1."""
    for down in all_labeled_posets(n):
        yield poset_to_space(down)
