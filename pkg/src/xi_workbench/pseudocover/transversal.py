"""Randomized affine general position with exact certificates.

Given an affine map h on the unit cube whose first k basis directions
are pinned, the remaining vertex images are resampled from a rational
grid until an exact rank certificate confirms both injectivity and
avoidance of a finite list of affine obstacles.  The avoidance condition
is the sufficient linear one: each free direction must stay independent
modulo the span of the obstacle's directions together with the pinned
image points (translated to the obstacle's base point).  Good samples
form a dense open set, so failures are detected and retried, never
silent.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from ..certificates import Certificate
from ..rationals import format_matrix, format_rational, format_vector
from .linalg import mat_vec, rank_of_columns, vec_sub


class DimensionViolation(ValueError):
    pass


class RetryBudgetExhausted(RuntimeError):
    def __init__(self, budget, last_failure):
        self.budget = budget
        self.last_failure = last_failure
        super().__init__(
            f"no certified sample within {budget} attempts; "
            "the sampling grid or obstacle configuration is degenerate"
        )


def derive_rng(seed, *tags) -> random.Random:
    """Deterministic child generator: the stream depends only on the seed
    and the tag path, so parallel and serial schedules agree."""
    digest = hashlib.sha256(repr((seed,) + tags).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


@dataclass(frozen=True)
class AffineMapData:
    """Affine map u -> matrix @ u + offset."""

    matrix: tuple  # d rows, n cols
    offset: tuple  # d

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in r) for r in self.matrix)
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "offset", tuple(Fraction(v) for v in self.offset))

    @property
    def dim_from(self) -> int:
        return len(self.matrix[0]) if self.matrix and self.matrix[0] else 0

    @property
    def dim_to(self) -> int:
        return len(self.offset)

    def apply(self, u) -> tuple:
        if self.dim_from == 0:
            return self.offset
        return tuple(x + y for x, y in zip(mat_vec(self.matrix, u), self.offset))

    def basis_image(self, j) -> tuple:
        """Image of the j-th standard basis vector (1-indexed)."""
        return tuple(self.matrix[i][j - 1] + self.offset[i] for i in range(self.dim_to))

    def column(self, j) -> tuple:
        return tuple(self.matrix[i][j - 1] for i in range(self.dim_to))

    def to_json(self) -> dict:
        return {"matrix": format_matrix(self.matrix), "offset": format_vector(self.offset)}


@dataclass(frozen=True)
class AffineSubspace:
    """Obstacle: base point plus direction vectors (possibly none)."""

    base: tuple
    directions: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(Fraction(v) for v in self.base))
        object.__setattr__(
            self, "directions", tuple(tuple(Fraction(v) for v in d) for d in self.directions)
        )

    @property
    def dim(self) -> int:
        return rank_of_columns(list(self.directions))

    def to_json(self) -> dict:
        return {"base": format_vector(self.base), "directions": format_matrix(self.directions)}


def check_eta(h: AffineMapData, obstacles, k: int, eta) -> Certificate:
    """Exact certificate for a candidate tuple of free vertex images.

    Two families of rank conditions: (i) the n difference vectors of the
    perturbed map are independent (injectivity); (ii) for every obstacle,
    the free difference vectors remain independent modulo the span of the
    obstacle directions and the pinned images translated to its base.
    """
    n = h.dim_from
    d = h.dim_to
    eta = tuple(tuple(Fraction(v) for v in e) for e in eta)
    if len(eta) != n - k:
        raise ValueError(f"expected {n - k} free vertex images, got {len(eta)}")

    h0 = h.offset
    pinned = [vec_sub(h.basis_image(j), h0) for j in range(1, k + 1)]
    free = [vec_sub(e, h0) for e in eta]

    inj_rank = rank_of_columns(pinned + free)
    inj_ok = inj_rank == n

    per_obstacle = []
    all_ok = inj_ok
    for ob in obstacles:
        v_basis = list(ob.directions)
        v_basis.append(vec_sub(h0, ob.base))
        for j in range(1, k + 1):
            v_basis.append(vec_sub(h.basis_image(j), ob.base))
        rank_v = rank_of_columns(v_basis)
        rank_joint = rank_of_columns(v_basis + free)
        ok = rank_joint == rank_v + (n - k)
        all_ok = all_ok and ok
        per_obstacle.append(
            {
                "obstacle": ob.to_json(),
                "rank_v": rank_v,
                "rank_joint": rank_joint,
                "needed": rank_v + (n - k),
                "ok": ok,
            }
        )

    return Certificate(
        kind="transversality",
        passed=all_ok,
        data={
            "d": d,
            "n": n,
            "k": k,
            "h": h.to_json(),
            "eta": [format_vector(e) for e in eta],
            "injectivity_rank": inj_rank,
            "injectivity_ok": inj_ok,
            "mod_v": per_obstacle,
        },
    )


def transversal_eta(
    h: AffineMapData,
    obstacles,
    k: int,
    seed,
    denominator: int = 1024,
    budget: int = 64,
    centers=None,
    radii=None,
):
    """Sample certified free vertex images.

    Coordinates are uniform on the grid with the given denominator inside
    [-1, 1], or inside the open sup-ball around per-vector centers when
    given; resampling continues until the certificate passes or the
    budget runs out.
    """
    n = h.dim_from
    d = h.dim_to
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}]")
    max_obstacle_dim = max((ob.dim for ob in obstacles), default=0)
    if max_obstacle_dim + n + 1 > d:
        raise DimensionViolation(
            f"need obstacle_dim + n + 1 <= d, got {max_obstacle_dim} + {n} + 1 > {d}"
        )
    if k > 0 and rank_of_columns([h.column(j) for j in range(1, k + 1)]) != k:
        raise ValueError("map is not injective on the pinned face")

    if k == n:
        cert = Certificate(
            kind="transversality",
            passed=True,
            data={
                "d": d,
                "n": n,
                "k": k,
                "h": h.to_json(),
                "eta": [],
                "vacuous": True,
                "injectivity_ok": True,
                "mod_v": [],
            },
        )
        return (), cert

    if centers is not None:
        centers = [tuple(Fraction(c) for c in ctr) for ctr in centers]
        radii = [Fraction(r) for r in radii]
        if len(centers) != n - k or len(radii) != n - k:
            raise ValueError("need one center and radius per free vertex")

    rng = derive_rng(seed, "transversal", n, k, d)
    last = None
    for _ in range(budget):
        eta = []
        for idx in range(n - k):
            vec = []
            for coord in range(d):
                if centers is None:
                    num = rng.randint(-denominator, denominator)
                    vec.append(Fraction(num, denominator))
                else:
                    c, r = centers[idx][coord], radii[idx]
                    # strict bounds: lo*D < num < hi*D
                    lo_scaled = (c - r) * denominator
                    hi_scaled = (c + r) * denominator
                    lo_num = lo_scaled.__floor__() + 1
                    hi_num = hi_scaled.__ceil__() - 1
                    if lo_num > hi_num:
                        raise ValueError("sampling grid too coarse for the requested radius")
                    num = rng.randint(lo_num, hi_num)
                    vec.append(Fraction(num, denominator))
            eta.append(tuple(vec))
        cert = check_eta(h, obstacles, k, tuple(eta))
        if cert.passed:
            return tuple(eta), cert
        last = cert
    raise RetryBudgetExhausted(budget, last)
