"""The sign-vector tree and its dyadic level map.

The tree branches with degree 2^N at every vertex, N = 2n + 3; an edge
at depth m is named by a word of m sign vectors and parametrized by
lambda in [0, 1].  The level map sends the root to the origin and walks
    value(word + (s,), lambda) = value(word, 1) + 2^(-depth) * lambda * s,
so level-m vertices land exactly on the grid of odd multiples of 2^(-m)
in the cube [-1, 1]^N.  Its three quantitative properties (norm bound
1 - 2^(-m), the exact grid identity, and 2^(-m+1)-density via covering
radius 2^(-m)) are certified exactly here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..certificates import Certificate
from ..rationals import format_rational, format_vector
from .linalg import sup_norm, vec_sub


def dimension(n: int) -> int:
    return 2 * n + 3


def sign_vectors(N: int) -> tuple:
    """All sign vectors in lexicographic order (-1 before +1)."""
    return tuple(product((-1, 1), repeat=N))


@dataclass(frozen=True)
class TreeAddress:
    """Point on the tree: `word` names the edge (its length is the depth),
    `lam` in [0, 1] the position along it; the root is the empty word.

    Identified endpoints are canonicalized to the shallower address:
    (word + (s,), 0) becomes (word, 1), and depth-one edges at 0 become
    the root.
    """

    word: tuple = ()
    lam: Fraction = Fraction(1)

    def __post_init__(self):
        lam = Fraction(self.lam)
        word = tuple(tuple(s) for s in self.word)
        if not 0 <= lam <= 1:
            raise ValueError("edge parameter must lie in [0, 1]")
        for letter in word:
            if any(c not in (-1, 1) for c in letter):
                raise ValueError(f"malformed sign vector {letter!r}")
        if word and len({len(s) for s in word}) > 1:
            raise ValueError("sign vectors of mixed lengths")
        while word and lam == 0:
            word = word[:-1]
            lam = Fraction(1)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "lam", Fraction(1) if not word else lam)

    @property
    def depth(self) -> int:
        return len(self.word)

    @property
    def is_root(self) -> bool:
        return not self.word

    def q0(self) -> Fraction:
        """Distance from the root: depth - 1 + lambda."""
        if self.is_root:
            return Fraction(0)
        return Fraction(self.depth - 1) + self.lam

    @classmethod
    def vertex(cls, word) -> "TreeAddress":
        return cls(word=tuple(word), lam=Fraction(1))


def f_eval(n: int, addr: TreeAddress) -> tuple:
    """Exact level-map value; at a depth-m vertex every coordinate has
    denominator dividing 2^m."""
    N = dimension(n)
    if addr.word and len(addr.word[0]) != N:
        raise ValueError(f"sign vectors have length {len(addr.word[0])}, expected {N}")
    value = [Fraction(0)] * N
    for depth, letter in enumerate(addr.word, start=1):
        scale = Fraction(1, 1 << depth)
        if depth == addr.depth:
            scale *= addr.lam
        for i in range(N):
            value[i] += scale * letter[i]
    return tuple(value)


def level_set(n: int, m: int, max_words: int = 2_000_000) -> frozenset:
    """Exact image of the depth-m vertices, by enumerating all words."""
    if m < 0:
        raise ValueError("level must be >= 0")
    N = dimension(n)
    if (1 << (N * m)) > max_words:
        raise ValueError(f"level enumeration of {(1 << (N * m))} words exceeds the guard {max_words}")
    if m == 0:
        return frozenset({(Fraction(0),) * N})
    letters = sign_vectors(N)
    out = set()
    for word in product(letters, repeat=m):
        out.add(f_eval(n, TreeAddress.vertex(word)))
    return frozenset(out)


def odd_dyadic_axis(m: int) -> tuple:
    """Odd multiples of 2^(-m) inside [-1, 1], ascending."""
    return tuple(Fraction(k, 1 << m) for k in range(-(1 << m) + 1, 1 << m, 2))


def odd_dyadic_grid(n: int, m: int) -> frozenset:
    N = dimension(n)
    axis = odd_dyadic_axis(m)
    return frozenset(product(axis, repeat=N))


def word_for_grid_point(n: int, m: int, point) -> tuple:
    """Invert the vertex enumeration: the unique depth-m word mapping to
    the given grid point, recovered greedily coordinate by coordinate."""
    N = dimension(n)
    residues = [Fraction(p) for p in point]
    word = []
    for depth in range(1, m + 1):
        letter = []
        for i in range(N):
            s = 1 if residues[i] > 0 else -1
            letter.append(s)
            residues[i] -= Fraction(s, 1 << depth)
        word.append(tuple(letter))
    if any(r != 0 for r in residues):
        raise ValueError("point is not on the depth-m vertex grid")
    return tuple(word)


def axis_covering_radius(values, lo=Fraction(-1), hi=Fraction(1)) -> Fraction:
    """Exact covering radius of a finite value set inside [lo, hi]."""
    vals = sorted(Fraction(v) for v in values)
    if not vals:
        raise ValueError("empty axis")
    radius = max(vals[0] - lo, hi - vals[-1])
    for a, b in zip(vals, vals[1:]):
        radius = max(radius, (b - a) / 2)
    return radius


def grid_covering_radius(n: int, m: int) -> Fraction:
    """Covering radius of the depth-m vertex grid in the sup metric.

    For a product grid with identical axes the sup-metric covering radius
    equals the one-dimensional covering radius of the axis.
    """
    return axis_covering_radius(odd_dyadic_axis(m))


def verify_f_properties(n: int, m_max: int, seed: int = 0, samples_per_level: int = 5) -> list:
    """Certificates for the three quantitative level-map properties up to
    depth m_max.

    Norm bound and grid identity are exact and exhaustive per level; the
    density bound is certified exactly at integer levels via the covering
    radius, and at sampled rational intermediate parameters via the
    two-step estimate through the nearest next-level vertex.
    """
    N = dimension(n)
    certs = []

    for m in range(0, m_max + 1):
        levels = level_set(n, m)
        bound = Fraction(1) - Fraction(1, 1 << m)
        max_norm = max((sup_norm(v) for v in levels), default=Fraction(0))
        attained = max_norm == bound
        certs.append(
            Certificate(
                kind="norm-bound",
                passed=(max_norm <= bound) and attained,
                data={
                    "n": n,
                    "level": m,
                    "max_norm": format_rational(max_norm),
                    "bound": format_rational(bound),
                    "attained": attained,
                    "vertex_count": len(levels),
                },
            )
        )

    for m in range(1, m_max + 1):
        levels = level_set(n, m)
        grid = odd_dyadic_grid(n, m)
        equal = levels == grid
        certs.append(
            Certificate(
                kind="grid-identity",
                passed=equal,
                data={
                    "n": n,
                    "level": m,
                    "level_count": len(levels),
                    "grid_count": len(grid),
                    "expected_count": 1 << (m * N),
                },
            )
        )

    for m in range(1, m_max + 1):
        radius = grid_covering_radius(n, m)
        target = Fraction(1, 1 << (m - 1))  # 2^(-m+1)
        certs.append(
            Certificate(
                kind="covering-radius",
                passed=radius == Fraction(1, 1 << m) and radius <= target,
                data={
                    "n": n,
                    "level": m,
                    "radius": format_rational(radius),
                    "expected_radius": format_rational(Fraction(1, 1 << m)),
                    "density_bound": format_rational(target),
                    "axis_values": format_vector(odd_dyadic_axis(m)),
                },
            )
        )

    rng = random.Random(seed)
    for m in range(0, m_max):
        rows = []
        ok = True
        for _ in range(samples_per_level):
            lam = Fraction(rng.randint(1, 63), 64)
            z = tuple(Fraction(rng.randint(-64, 64), 64) for _ in range(N))
            # nearest depth-(m+1) vertex coordinatewise, then slide to lambda
            axis = odd_dyadic_axis(m + 1)
            w = tuple(min(axis, key=lambda v: (abs(v - zi), v)) for zi in z)
            word = word_for_grid_point(n, m + 1, w)
            w_lam = f_eval(n, TreeAddress(word=word, lam=lam))
            dist = sup_norm(vec_sub(w_lam, z))
            half = Fraction(1, 1 << (m + 1))
            bound = half * (Fraction(1) - lam) + half
            target = Fraction(1, 1 << (m - 1)) if m >= 1 else Fraction(2)
            good = dist <= bound < target
            ok = ok and good
            rows.append(
                {
                    "lambda": format_rational(lam),
                    "z": format_vector(z),
                    "nearest_vertex": format_vector(w),
                    "distance": format_rational(dist),
                    "two_step_bound": format_rational(bound),
                    "density_target": format_rational(target),
                    "ok": good,
                }
            )
        certs.append(
            Certificate(
                kind="density-sample",
                passed=ok,
                data={"n": n, "level": m, "samples": rows},
            )
        )
    return certs
