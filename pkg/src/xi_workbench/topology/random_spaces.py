"""Seeded random generation of small T0 spaces and open continuous
surjections between them, for the randomized invariant batteries.
"""

from __future__ import annotations

import random

from .maps import SpaceMap
from .spaces import FiniteT0Space, poset_to_space


def random_t0_space(rng: random.Random, max_points: int = 6, min_points: int = 1) -> FiniteT0Space:
    """Random partial order via a random DAG under a random topological
    order, transitively closed; opens are its up-sets."""
    n = rng.randint(min_points, max_points)
    order = list(range(n))
    rng.shuffle(order)
    density = rng.random()
    down = [0] * n
    for pos_j in range(n):
        j = order[pos_j]
        for pos_i in range(pos_j):
            i = order[pos_i]
            if rng.random() < density:
                down[j] |= (1 << i) | down[i]
    # close transitively (one extra sweep suffices since predecessors
    # were already closed when merged)
    changed = True
    while changed:
        changed = False
        for j in range(n):
            m = down[j]
            acc = m
            while m:
                low = m & -m
                acc |= down[low.bit_length() - 1]
                m ^= low
            if acc != down[j]:
                down[j] = acc
                changed = True
    return poset_to_space(tuple(down))


def random_open_surjection(rng: random.Random, max_points: int = 6, max_tries: int = 10_000) -> SpaceMap:
    """Random continuous open surjection between random T0 spaces.

    The codomain carries the quotient topology of a random onto
    assignment (so the map is continuous and surjective by construction);
    candidates whose quotient is not T0 or whose map is not open are
    rejected and resampled.
    """
    for _ in range(max_tries):
        dom = random_t0_space(rng, max_points=max_points)
        n = len(dom.points)
        m = rng.randint(1, n)
        targets = list(range(m))
        # onto assignment: the first m shuffled points hit each target once
        shuffled = list(dom.points)
        rng.shuffle(shuffled)
        assignment = {}
        for i, p in enumerate(shuffled):
            assignment[p] = targets[i] if i < m else rng.randrange(m)

        cod_opens = set()
        full = (1 << m) - 1
        for v in range(full + 1):
            pre = 0
            for i, p in enumerate(dom.points):
                if v >> assignment[p] & 1:
                    pre |= 1 << i
            if dom.is_open(pre):
                cod_opens.add(v)
        cod = FiniteT0Space(tuple(range(m)), cod_opens)

        t0 = True
        for i in range(m):
            for j in range(i + 1, m):
                if not any((u >> i & 1) != (u >> j & 1) for u in cod.opens):
                    t0 = False
        if not t0:
            continue

        candidate = SpaceMap(dom, cod, assignment)
        if all(cod.is_open(candidate.image_mask(u)) for u in dom.opens):
            return candidate
    raise RuntimeError("failed to sample an open continuous surjection within the retry budget")
