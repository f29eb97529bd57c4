"""Continuous maps between finite spaces, the pseudo-graph relation, and
the pseudo-open / pseudo-epimorphic map conditions, all evaluated by
brute force over the finite open/closed families.
"""

from __future__ import annotations

from ..model import INFINITY, BijectionSpec
from ..rationals import label_to_json
from .spaces import FiniteT0Space
from .xi import XiWindow, xi_window


class NotContinuousError(ValueError):
    def __init__(self, open_labels):
        self.open_labels = open_labels
        super().__init__(f"preimage of open set {open_labels} is not open")


class SpaceMap:
    """Total map between finite spaces; continuity is checked on
    construction (the preimage of every open must be open)."""

    __slots__ = ("domain", "codomain", "assignment")

    def __init__(self, domain: FiniteT0Space, codomain: FiniteT0Space, assignment: dict):
        for p in domain.points:
            if p not in assignment:
                raise ValueError(f"assignment missing point {p!r}")
            if assignment[p] not in codomain._index:
                raise ValueError(f"image {assignment[p]!r} of {p!r} is not a codomain point")
        self.domain = domain
        self.codomain = codomain
        self.assignment = {p: assignment[p] for p in domain.points}
        for v in codomain.opens:
            pre = self.preimage_mask(v)
            if not domain.is_open(pre):
                raise NotContinuousError([label_to_json(q) for q in codomain.labels_of(v)])

    def __call__(self, p):
        return self.assignment[p]

    def preimage_mask(self, codomain_mask: int) -> int:
        mask = 0
        for i, p in enumerate(self.domain.points):
            j = self.codomain.index_of(self.assignment[p])
            if codomain_mask >> j & 1:
                mask |= 1 << i
        return mask

    def image_mask(self, domain_mask: int) -> int:
        mask = 0
        for i, p in enumerate(self.domain.points):
            if domain_mask >> i & 1:
                mask |= 1 << self.codomain.index_of(self.assignment[p])
        return mask

    def compose(self, other: "SpaceMap") -> "SpaceMap":
        """self after other."""
        if other.codomain != self.domain:
            raise ValueError("composition domains do not match")
        return SpaceMap(
            other.domain,
            self.codomain,
            {p: self.assignment[other.assignment[p]] for p in other.domain.points},
        )

    def __eq__(self, other):
        return (
            isinstance(other, SpaceMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.assignment == other.assignment
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, tuple(sorted(
            (self.domain.index_of(k), self.codomain.index_of(v)) for k, v in self.assignment.items()
        ))))

    @classmethod
    def identity(cls, space: FiniteT0Space) -> "SpaceMap":
        return cls(space, space, {p: p for p in space.points})


def pseudo_graph(m: SpaceMap) -> frozenset:
    """Pairs (x, y) of domain points with the image of y in the closure
    of the image of x; always reflexive."""
    cod = m.codomain
    closure_of = {p: cod.closure(1 << cod.index_of(p)) for p in set(m.assignment.values())}
    rel = set()
    for x in m.domain.points:
        cl = closure_of[m.assignment[x]]
        for y in m.domain.points:
            if cl >> cod.index_of(m.assignment[y]) & 1:
                rel.add((x, y))
    return frozenset(rel)


def _graph_rows(m: SpaceMap):
    """relation rows: rows[i] = bitmask of j with (points[i], points[j]) related."""
    dom = m.domain
    rel = pseudo_graph(m)
    rows = [0] * len(dom.points)
    for x, y in rel:
        rows[dom.index_of(x)] |= 1 << dom.index_of(y)
    return rows


def is_pseudo_open(m: SpaceMap, exhaustive: bool = False) -> bool:
    """Both defining conditions, evaluated on the finite space.

    Condition (a) asks that first projection from the pseudo-graph be
    open.  Relative opens of the graph are unions of boxes U x V, and
    projection commutes with unions, so it is enough to check boxes; by
    the same argument boxes of minimal neighborhoods suffice.  Passing
    ``exhaustive=True`` checks every pair from the full open families
    instead (used to cross-validate the basis reduction).
    """
    dom, cod = m.domain, m.codomain
    rows = _graph_rows(m)

    if exhaustive:
        boxes_u = list(dom.opens)
        boxes_v = list(dom.opens)
    else:
        boxes_u = [dom.min_neighborhood(p) for p in dom.points]
        boxes_v = boxes_u

    for u in boxes_u:
        for v in boxes_v:
            proj = 0
            mu = u
            while mu:
                low = mu & -mu
                i = low.bit_length() - 1
                if rows[i] & v:
                    proj |= low
                mu ^= low
            if not dom.is_open(proj):
                return False

    image = m.image_mask(dom.full_mask)
    image_opens = {w & image for w in cod.opens}
    cols = [0] * len(dom.points)
    for i in range(len(dom.points)):
        mrow = rows[i]
        while mrow:
            low = mrow & -mrow
            cols[low.bit_length() - 1] |= 1 << i
            mrow ^= low

    for s in dom.opens:
        invariant = True
        ms = s
        while ms:
            low = ms & -ms
            if cols[low.bit_length() - 1] & ~s:
                invariant = False
                break
            ms ^= low
        if invariant and (m.image_mask(s) not in image_opens):
            return False
    return True


def is_pseudo_epimorphic(m: SpaceMap, return_witness: bool = False):
    """The image meets every closed set of the codomain densely."""
    cod = m.codomain
    image = m.image_mask(m.domain.full_mask)
    for closed in cod.closed_sets():
        inter = image & closed
        if cod.closure(inter) & closed != closed:
            if return_witness:
                return False, cod.labels_of(closed)
            return False
    if return_witness:
        return True, None
    return True


def xi_map(h: BijectionSpec, w: XiWindow) -> SpaceMap:
    """Induced map between window models: ordinary points move by the
    bijection, infinity stays put."""
    if not h.is_injective_on(w.window):
        raise ValueError("bijection spec is not injective on the window")
    image_window = tuple(h.apply(p) for p in w.window)
    target = xi_window(w.base, image_window)
    assignment = {p: h.apply(p) for p in w.window}
    assignment[INFINITY] = INFINITY
    return SpaceMap(w.space, target.space, assignment)
