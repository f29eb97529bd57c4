"""Inductive construction of the injective piecewise-affine tree map.

Per edge, in lexicographic word order level by level, the piece is the
affine map on cube x edge that restricts on the shared face to its
parent's endpoint map and sends the far vertex to a certified sample
near the level-map target (within 2^(-depth-2), strictly).  The sample
is produced by the transversality kernel against the affine hulls of the
root cube and every previously placed piece, so pieces never meet off
their shared faces and the whole map stays injective.

n = 0 is the fully enumerable case (pieces are segments in R^3); n = 1
runs at shallow depths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..certificates import Certificate
from ..rationals import format_matrix, format_rational, format_vector
from .linalg import mat_vec, rank_of_columns, solve_affine, sup_norm, vec_sub
from .transversal import AffineMapData, AffineSubspace, check_eta, derive_rng, transversal_eta
from .tree import TreeAddress, dimension, f_eval, sign_vectors


@dataclass(frozen=True)
class AffinePiece:
    """Affine map on [0,1]^(n+1): the first n coordinates are the cube
    factor, the last runs along the edge named by `word`."""

    word: tuple
    map: AffineMapData
    parent: int  # index into the piece list; -1 means the root cube

    @property
    def level(self) -> int:
        return len(self.word)

    def evaluate(self, u) -> tuple:
        return self.map.apply(u)

    def base_point(self) -> tuple:
        """Image of the origin (the parent-face corner)."""
        return self.map.offset

    def tip_point(self) -> tuple:
        """Image of the far vertex of the edge direction."""
        n_plus_1 = self.map.dim_from
        u = [Fraction(0)] * n_plus_1
        u[-1] = Fraction(1)
        return self.map.apply(tuple(u))

    def face_map(self, at_tip: bool) -> AffineMapData:
        """Restriction to the cube factor at edge parameter 0 or 1."""
        n = self.map.dim_from - 1
        matrix = tuple(tuple(row[:n]) for row in self.map.matrix)
        offset = self.map.offset if not at_tip else self.tip_point()
        return AffineMapData(matrix=matrix, offset=offset)

    def hull(self) -> AffineSubspace:
        cols = [self.map.column(j) for j in range(1, self.map.dim_from + 1)]
        return AffineSubspace(base=self.map.offset, directions=tuple(cols))


@dataclass(frozen=True)
class PiecewiseAffineMap:
    n: int
    depth: int
    seed: int
    denominator: int
    root: AffineMapData  # the level-0 cube map on [0,1]^n
    pieces: tuple  # AffinePiece, level-major lexicographic order

    @property
    def N(self) -> int:
        return dimension(self.n)

    def piece_index(self, word) -> int:
        for i, p in enumerate(self.pieces):
            if p.word == tuple(word):
                return i
        raise KeyError(f"no piece for word {word!r}")

    def evaluate(self, word, xi, lam) -> tuple:
        """Value at cube point xi on the edge `word` at parameter lam."""
        if not word:
            return self.root.apply(tuple(xi))
        piece = self.pieces[self.piece_index(word)]
        return piece.evaluate(tuple(xi) + (Fraction(lam),))


def canonical_root_map(n: int) -> AffineMapData:
    """Injective affine cube map fixing the origin: the coordinate
    embedding into the first n axes, scaled by one half."""
    N = dimension(n)
    matrix = tuple(
        tuple(Fraction(1, 2) if (i == j) else Fraction(0) for j in range(n)) for i in range(N)
    )
    offset = (Fraction(0),) * N
    return AffineMapData(matrix=matrix, offset=offset)


def build_h(n: int, depth: int, seed: int = 0, denominator: int = 1024, budget: int = 64):
    """Run the induction to the given depth.

    Returns (map, certificates).  Certificates per piece: the
    transversality certificate (injectivity rank + independence modulo
    every prior hull), exact face-consistency data, and the two endpoint
    estimates (< 2^(-depth-1) at the base, < 2^(-depth-2) at the tip).
    """
    N = dimension(n)
    root = canonical_root_map(n)
    if n > 0 and rank_of_columns([root.column(j) for j in range(1, n + 1)]) != n:
        raise AssertionError("root cube map must be injective")

    letters = sign_vectors(N)
    pieces: list[AffinePiece] = []
    hulls = [AffineSubspace(base=root.offset, directions=tuple(root.column(j) for j in range(1, n + 1)))]
    certs: list[Certificate] = []
    word_to_index = {}

    for level in range(1, depth + 1):
        radius = Fraction(1, 1 << (level + 2))
        for word in product(letters, repeat=level):
            parent_word = word[:-1]
            if parent_word:
                parent_idx = word_to_index[parent_word]
                face = pieces[parent_idx].face_map(at_tip=True)
            else:
                parent_idx = -1
                face = root

            target = f_eval(n, TreeAddress.vertex(word))
            # guide map: face on the cube factor, the exact target at the tip
            guide_matrix = tuple(
                tuple(face.matrix[i][:]) + (target[i] - face.offset[i],) for i in range(N)
            )
            guide = AffineMapData(matrix=guide_matrix, offset=face.offset)

            eta, cert = transversal_eta(
                guide,
                hulls,
                k=n,
                seed=(seed, "edge", word),
                denominator=denominator,
                budget=budget,
                centers=[target],
                radii=[radius],
            )
            tip = eta[0]
            piece_matrix = tuple(
                tuple(face.matrix[i][:]) + (tip[i] - face.offset[i],) for i in range(N)
            )
            piece = AffinePiece(
                word=word,
                map=AffineMapData(matrix=piece_matrix, offset=face.offset),
                parent=parent_idx,
            )
            idx = len(pieces)
            pieces.append(piece)
            word_to_index[word] = idx
            hulls.append(piece.hull())

            cert.data["piece"] = idx
            cert.data["word"] = [list(s) for s in word]
            certs.append(cert)

            certs.append(_face_consistency_certificate(root, pieces, idx))
            certs.append(_endpoint_certificate(n, piece, idx))

    pam = PiecewiseAffineMap(
        n=n, depth=depth, seed=seed, denominator=denominator, root=root, pieces=tuple(pieces)
    )
    return pam, certs


def _face_consistency_certificate(root: AffineMapData, pieces, idx) -> Certificate:
    piece = pieces[idx]
    child_face = piece.face_map(at_tip=False)
    parent_face = root if piece.parent < 0 else pieces[piece.parent].face_map(at_tip=True)
    equal = child_face.matrix == parent_face.matrix and child_face.offset == parent_face.offset
    return Certificate(
        kind="face-consistency",
        passed=equal,
        data={
            "piece": idx,
            "parent": piece.parent,
            "child_face": child_face.to_json(),
            "parent_face": parent_face.to_json(),
        },
    )


def _endpoint_certificate(n: int, piece: AffinePiece, idx) -> Certificate:
    level = piece.level
    base = piece.base_point()
    tip = piece.tip_point()
    f_base = f_eval(n, TreeAddress(word=piece.word, lam=Fraction(0)))
    f_tip = f_eval(n, TreeAddress.vertex(piece.word))
    base_err = sup_norm(vec_sub(base, f_base))
    tip_err = sup_norm(vec_sub(tip, f_tip))
    base_bound = Fraction(1, 1 << (level + 1))  # global estimate 2^(-(level-1)-2)
    tip_bound = Fraction(1, 1 << (level + 2))
    ok = base_err < base_bound and tip_err < tip_bound
    return Certificate(
        kind="endpoint-estimate",
        passed=ok,
        data={
            "piece": idx,
            "level": level,
            "word": [list(s) for s in piece.word],
            "base_point": format_vector(base),
            "tip_point": format_vector(tip),
            "f_base": format_vector(f_base),
            "f_tip": format_vector(f_tip),
            "base_error": format_rational(base_err),
            "tip_error": format_rational(tip_err),
            "base_bound": format_rational(base_bound),
            "tip_bound": format_rational(tip_bound),
        },
    )


def lipschitz_constant(pam: PiecewiseAffineMap):
    """Exact shared cube-factor Lipschitz constant (sup-norm induced); the
    face identifications force every piece to inherit the root cube
    block, so the per-piece constants all coincide."""
    def block_norm(matrix, n):
        if n == 0:
            return Fraction(0)
        return max(sum(abs(row[j]) for j in range(n)) for row in matrix)

    n = pam.n
    values = [block_norm(pam.root.matrix, n)]
    for piece in pam.pieces:
        values.append(block_norm(piece.map.matrix, n))
    L = max(values)
    cert = Certificate(
        kind="lipschitz",
        passed=all(v == L for v in values),
        data={
            "n": n,
            "value": format_rational(L),
            "per_piece": [format_rational(v) for v in values],
        },
    )
    return L, cert


def epsilon_profile(L, depth: int = 8):
    """Concrete shrink profile: 1/2 when the cube factor is degenerate,
    otherwise min(1/2, 2^(-ceil(arg)-3) / L); certifies
    L * eps(m + lam) < 2^(-m-2) at every integer argument up to depth.
    """
    L = Fraction(L)

    def eps(arg: Fraction) -> Fraction:
        if L == 0:
            return Fraction(1, 2)
        a = Fraction(arg)
        ceil_a = a.__ceil__()
        return min(Fraction(1, 2), Fraction(1, 1 << (ceil_a + 3)) / L)

    rows = []
    ok = True
    prev = None
    for m in range(0, depth + 1):
        for lam in (Fraction(0), Fraction(1)):
            arg = m + lam
            value = eps(arg)
            bound = Fraction(1, 1 << (m + 2))
            good = L * value < bound
            ok = ok and good
            rows.append(
                {
                    "m": m,
                    "lambda": format_rational(lam),
                    "eps": format_rational(value),
                    "product": format_rational(L * value),
                    "bound": format_rational(bound),
                    "ok": good,
                }
            )
        if prev is not None and eps(Fraction(m)) > prev:
            ok = False
        prev = eps(Fraction(m))
    cert = Certificate(
        kind="epsilon-profile",
        passed=ok,
        data={"L": format_rational(L), "rows": rows},
    )
    return eps, cert


def piece_pair_disjointness(pam: PiecewiseAffineMap, i: int, j: int) -> Certificate:
    """Cross-validate avoidance: solve the exact linear system for an
    intersection of pieces i and j.

    Acceptable outcomes: no solution; or a solution family that lies
    entirely inside the shared-face identification (parent tip = child
    base); or an isolated solution point outside at least one domain
    cube.  Anything else is a genuine violation.
    """
    a, b = pam.pieces[i], pam.pieces[j]
    n_plus_1 = a.map.dim_from
    N = pam.N
    rows = []
    rhs = []
    for r in range(N):
        rows.append(list(a.map.matrix[r]) + [-v for v in b.map.matrix[r]])
        rhs.append(b.map.offset[r] - a.map.offset[r])
    sol = solve_affine(rows, rhs)
    if sol is None:
        return Certificate(
            kind="pair-disjointness",
            passed=True,
            data={"pieces": [i, j], "outcome": "inconsistent"},
        )
    particular, basis = sol

    def in_cube(u):
        return all(0 <= c <= 1 for c in u)

    # geometric adjacency: child base face = parent tip face; siblings
    # share their common base face
    if a.parent == j:
        shared_lams = (Fraction(0), Fraction(1))
    elif b.parent == i:
        shared_lams = (Fraction(1), Fraction(0))
    elif a.parent == b.parent:
        shared_lams = (Fraction(0), Fraction(0))
    else:
        shared_lams = None

    if not basis:
        u = particular[:n_plus_1]
        v = particular[n_plus_1:]
        inside = in_cube(u) and in_cube(v)
        on_shared = False
        if inside and shared_lams is not None:
            on_shared = (
                u[-1] == shared_lams[0] and v[-1] == shared_lams[1] and u[:-1] == v[:-1]
            )
        passed = (not inside) or on_shared
        return Certificate(
            kind="pair-disjointness",
            passed=passed,
            data={
                "pieces": [i, j],
                "outcome": "isolated-point",
                "inside_domains": inside,
                "on_shared_face": on_shared,
                "u": format_vector(particular[:n_plus_1]),
                "v": format_vector(particular[n_plus_1:]),
            },
        )

    # positive-dimensional solution family: must be contained in the
    # shared-face identification, expressed as linear conditions that the
    # particular solution satisfies and every basis vector annihilates
    if adjacency is None:
        return Certificate(
            kind="pair-disjointness",
            passed=False,
            data={"pieces": [i, j], "outcome": "unexpected-family"},
        )
    lam_a = n_plus_1 - 1
    lam_b = 2 * n_plus_1 - 1
    if adjacency == ("child", "parent"):
        fixed = {lam_a: Fraction(0), lam_b: Fraction(1)}
    else:
        fixed = {lam_a: Fraction(1), lam_b: Fraction(0)}
    conditions_ok = all(particular[idx] == val for idx, val in fixed.items()) and all(
        vec[idx] == 0 for vec in basis for idx in fixed
    )
    match_ok = all(
        particular[c] == particular[n_plus_1 + c] for c in range(n_plus_1 - 1)
    ) and all(vec[c] == vec[n_plus_1 + c] for vec in basis for c in range(n_plus_1 - 1))
    passed = conditions_ok and match_ok
    return Certificate(
        kind="pair-disjointness",
        passed=passed,
        data={
            "pieces": [i, j],
            "outcome": "shared-face-family" if passed else "family-off-face",
            "family_dim": len(basis),
        },
    )


def injectivity_spot_check(pam: PiecewiseAffineMap, pairs: int, seed) -> Certificate:
    """Random interior rational points in distinct pieces must map to
    distinct values; interior sampling avoids the identified faces."""
    rng = derive_rng(seed, "spot-check", pam.n, pam.depth)
    n_pieces = len(pam.pieces)
    if n_pieces < 2:
        raise ValueError("need at least two pieces")
    n_plus_1 = pam.pieces[0].map.dim_from
    checked = 0
    collision = None
    for _ in range(pairs):
        i = rng.randrange(n_pieces)
        j = rng.randrange(n_pieces - 1)
        if j >= i:
            j += 1
        u = tuple(Fraction(rng.randint(1, 127), 128) for _ in range(n_plus_1))
        v = tuple(Fraction(rng.randint(1, 127), 128) for _ in range(n_plus_1))
        pa = pam.pieces[i].evaluate(u)
        pb = pam.pieces[j].evaluate(v)
        if pa == pb:
            collision = {"pieces": [i, j], "u": format_vector(u), "v": format_vector(v)}
            break
        checked += 1
    return Certificate(
        kind="injectivity-spot-check",
        passed=collision is None,
        data={"pairs": checked, "collision": collision},
    )


def serialize_bundle(pam: PiecewiseAffineMap, certs) -> dict:
    return {
        "format": "piecewise-affine-bundle/1",
        "n": pam.n,
        "N": pam.N,
        "depth": pam.depth,
        "seed": pam.seed,
        "denominator": pam.denominator,
        "root": pam.root.to_json(),
        "pieces": [
            {
                "word": [list(s) for s in p.word],
                "matrix": format_matrix(p.map.matrix),
                "offset": format_vector(p.map.offset),
                "parent": p.parent,
            }
            for p in pam.pieces
        ],
        "certificates": [c.to_dict() for c in certs],
    }
