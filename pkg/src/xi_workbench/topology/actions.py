"""Window-level probes for group actions on the discrete base space.

Statements that quantify over the whole infinite space are only
semi-decided here: a probe returns Verified / Refuted (with a concrete
witness) / Inconclusive relative to an explicit window and budget, never
a bare boolean.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..model import BijectionSpec, GeneratorUndefinedError
from ..rationals import label_key, label_to_json


@dataclass(frozen=True)
class ActionSpec:
    """Finitely many generator bijections, tagged with the group they
    present (the integers for one generator, otherwise a free group)."""

    generators: tuple
    group: str = ""

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not self.group:
            object.__setattr__(self, "group", "Z" if len(gens) == 1 else f"F{len(gens)}")

    def steps(self):
        """Generators and their inverses, in a fixed order."""
        out = []
        for g in self.generators:
            out.append(g)
        for g in self.generators:
            out.append(g.inverse())
        return out

    def apply_word(self, word, label):
        """word = sequence of (generator index, +1 | -1), applied right to left."""
        x = label
        for idx, exp in reversed(list(word)):
            g = self.generators[idx]
            x = g.apply(x) if exp == 1 else g.inverse().apply(x)
        return x

    def to_json(self) -> dict:
        return {"group": self.group, "generators": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "ActionSpec":
        return cls(
            generators=tuple(BijectionSpec.from_json(g) for g in data["generators"]),
            group=data.get("group", ""),
        )


@dataclass(frozen=True)
class Verdict:
    status: str  # "verified" | "refuted" | "inconclusive"
    witness: object = None
    window: tuple = ()
    budget: int = 0

    @property
    def is_verified(self):
        return self.status == "verified"

    @property
    def is_refuted(self):
        return self.status == "refuted"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": self.witness,
            "window": [label_to_json(p) for p in self.window],
            "budget": self.budget,
        }


def _orbit_probe(action: ActionSpec, seed, window_set, budget):
    """BFS the full group orbit of a seed.

    Returns ("closed", orbit) when the orbit is finite and stays in the
    window, ("escapes", point) at the first point outside the window, or
    ("budget", None) when the exploration budget runs out.
    """
    steps = action.steps()
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for g in steps:
                y = g.apply(x)
                if y not in seen:
                    if y not in window_set:
                        return "escapes", y
                    seen.add(y)
                    if len(seen) > budget:
                        return "budget", None
                    nxt.append(y)
        frontier = nxt
    return "closed", frozenset(seen)


def minimality_probe(action: ActionSpec, window, budget: int | None = None) -> Verdict:
    """Search for a finite invariant subset seeded inside the window.

    Refuted(S) when some orbit closes up inside the window (S is then a
    nonempty finite invariant set, whose closure in the window model is
    itself, hence a compact invariant set); Verified when every orbit
    seeded in the window escapes it -- a window-level semi-decision;
    Inconclusive when the budget runs out first.  The two refutation
    readings (finite invariant subset, compact orbit closure) coincide on
    a discrete base and are both computed and cross-checked.
    """
    win = tuple(sorted(set(window), key=label_key))
    if budget is None:
        budget = 10 * max(1, len(win))
    window_set = set(win)
    saw_budget = False
    for seed in win:
        outcome, payload = _orbit_probe(action, seed, window_set, budget)
        if outcome == "closed":
            orbit = payload
            # cross-check: orbit closure (= orbit, discrete base) is
            # finite, inside the window, and generator-stable
            closure_compact = orbit <= window_set and all(
                g.apply(x) in orbit for x in orbit for g in action.steps()
            )
            if not closure_compact:
                raise AssertionError("invariant-subset and orbit-closure probes disagree")
            return Verdict(
                status="refuted",
                witness={"invariant_set": [label_to_json(x) for x in sorted(orbit, key=label_key)]},
                window=win,
                budget=budget,
            )
        if outcome == "budget":
            saw_budget = True
    if saw_budget:
        return Verdict(status="inconclusive", witness=None, window=win, budget=budget)
    return Verdict(status="verified", witness=None, window=win, budget=budget)


def is_effective(action: ActionSpec, window, word) -> Verdict:
    """Look for a window point moved by the given reduced word.

    Verified carries the witness point and its image; Inconclusive means
    the word fixes the whole window (it may still move points elsewhere).
    """
    win = tuple(sorted(set(window), key=label_key))
    word = tuple(word)
    for i in range(len(word) - 1):
        if word[i][0] == word[i + 1][0] and word[i][1] == -word[i + 1][1]:
            raise ValueError("word is not reduced")
    if not word:
        return Verdict(status="inconclusive", witness=None, window=win, budget=0)
    for s in win:
        image = action.apply_word(word, s)
        if image != s:
            return Verdict(
                status="verified",
                witness={"point": label_to_json(s), "image": label_to_json(image)},
                window=win,
                budget=0,
            )
    return Verdict(status="inconclusive", witness=None, window=win, budget=0)


# -- free-group coset windows -------------------------------------------
#
# Desk-scale model for free groups acting on disjoint unions of coset
# spaces: points are cosets g<w> of the cyclic subgroup generated by a
# reduced word w, represented by a canonical (shortest, then lexicographic
# smallest) representative.


def free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _word_mul(a, b):
    return free_reduce(tuple(a) + tuple(b))


def _word_pow(w, k):
    if k < 0:
        w = tuple(-x for x in reversed(w))
        k = -k
    out = ()
    for _ in range(k):
        out = _word_mul(out, w)
    return out


def coset_rep(g, w):
    """Canonical representative of the coset g<w>, by scanning powers of w
    far enough that reduced lengths can only grow afterwards."""
    g = free_reduce(g)
    w = free_reduce(w)
    if not w:
        return g
    bound = len(g) + len(w) + 2
    best = None
    for k in range(-bound, bound + 1):
        cand = _word_mul(g, _word_pow(w, k))
        key = (len(cand), cand)
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


def coset_window(w, n_letters: int, radius: int):
    """All cosets of <w> with a representative of length <= radius, as
    canonical-representative labels (tuples of signed letter indices)."""
    w = free_reduce(w)
    letters = [i for i in range(1, n_letters + 1)] + [-i for i in range(1, n_letters + 1)]
    seen = {coset_rep((), w)}
    frontier = [()]
    for _ in range(radius):
        nxt = []
        for g in frontier:
            for a in letters:
                h = _word_mul((a,), g)
                rep = coset_rep(h, w)
                if rep not in seen and len(rep) <= radius:
                    seen.add(rep)
                    nxt.append(rep)
        frontier = nxt
    return tuple(sorted(seen, key=label_key))


def coset_action(w, n_letters: int, radius: int) -> tuple:
    """Action of the free group generators on a coset window, as explicit
    permutation tables (left multiplication)."""
    window = coset_window(w, n_letters, radius + 1)
    gens = []
    for i in range(1, n_letters + 1):
        table = {}
        for rep in window:
            table[rep] = coset_rep(_word_mul((i,), rep), w)
        gens.append(BijectionSpec.from_table(table))
    inner = coset_window(w, n_letters, radius)
    return ActionSpec(generators=tuple(gens), group=f"F{n_letters}"), inner
