"""Explicit model of E6 in R^6 with coordinates in Q(sqrt 3).

Used only as an independent cross-check of the abstract root system: the
vectors below are transcribed coordinates, and :func:`euclidean_model_e6`
matches them against the Cartan-matrix construction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Dict, List, Tuple

from .exactmath import SQRT3, EucVec6, QuadRat, eucvec, inner, vec_add, vec_neg, vec_scale
from .rootsystems import RootSystem, WeightVec, e6

HALF = Fraction(1, 2)

MU = eucvec([Fraction(2, 3) * SQRT3, 0, 0, 0, 0, 0])
RHO = eucvec([4 * SQRT3, 4, 3, 2, 1, 0])

# the explicit zero-sum triple and the roots producing it from MU
MU_PRIME = eucvec([Fraction(-1, 3) * SQRT3, 1, 0, 0, 0, 0])
MU_DOUBLE_PRIME = eucvec([Fraction(-1, 3) * SQRT3, -1, 0, 0, 0, 0])


def _half_root(signs: Tuple[int, ...]) -> EucVec6:
    return eucvec([HALF * SQRT3] + [HALF * s for s in signs])


TRIPLE_ROOTS = {
    "alpha": _half_root((-1, -1, 1, 1, 1)),
    "beta": _half_root((-1, 1, -1, -1, -1)),
    "gamma": _half_root((1, -1, -1, 1, 1)),
    "delta": _half_root((1, -1, 1, -1, -1)),
}


class CorrespondenceError(RuntimeError):
    pass


def positive_roots_r6() -> List[EucVec6]:
    out = []
    for i, j in combinations(range(1, 6), 2):
        for s in (1, -1):
            v = [0] * 6
            v[i] = 1
            v[j] = s
            out.append(eucvec(v))
    for signs in product((1, -1), repeat=5):
        if signs.count(-1) % 2 == 0:
            out.append(_half_root(signs))
    return out


def reflect_r6(v: EucVec6, alpha: EucVec6) -> EucVec6:
    k = 2 * inner(v, alpha) / inner(alpha, alpha)
    return vec_add(v, vec_scale(-k, alpha))


def _orbit(start: EucVec6, roots: List[EucVec6]) -> List[EucVec6]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for a in roots:
            y = reflect_r6(x, a)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return list(seen)


@dataclass
class E6EuclideanModel:
    positive_root_vectors: List[EucVec6]
    root_vectors: List[EucVec6]
    simple_root_vectors: List[EucVec6]  # ordered to match the abstract Bourbaki labels
    weight_vectors: List[EucVec6]
    mu: EucVec6
    root_map: Dict[EucVec6, WeightVec]
    weight_map: Dict[EucVec6, WeightVec]
    scale: Fraction

    def to_weight(self, v: EucVec6) -> WeightVec:
        return _coords(v, self.simple_root_vectors)


def _coords(v: EucVec6, simple: List[EucVec6]) -> WeightVec:
    out = []
    for a in simple:
        x = 2 * inner(v, a) / inner(a, a)
        if not x.is_rational() or x.a.denominator != 1:
            raise CorrespondenceError(f"non-integral pairing {x} of {v}")
        out.append(int(x.a))
    return tuple(out)


def _rational(x: QuadRat) -> Fraction:
    if not x.is_rational():
        raise CorrespondenceError(f"inner product {x} is irrational")
    return x.a


def euclidean_model_e6(rs: RootSystem | None = None) -> E6EuclideanModel:
    """Build the R^6 model and match it against the abstract E6."""
    rs = rs or e6()
    pos = positive_roots_r6()
    roots = pos + [vec_neg(v) for v in pos]
    pos_set = set(pos)
    sums = {vec_add(b, c) for b, c in combinations(pos, 2)}
    simple = [a for a in pos if a not in sums]
    if len(simple) != rs.rank:
        raise CorrespondenceError(f"found {len(simple)} indecomposable positive roots")

    # label the simple roots so that the Gram matrix is the Cartan matrix and
    # MU becomes the first fundamental weight
    gram = [[_rational(inner(x, y)) for y in simple] for x in simple]
    order = None
    for perm in permutations(range(rs.rank)):
        if all(
            2 * gram[perm[i]][perm[j]] / gram[perm[j]][perm[j]] == rs.cartan[i][j]
            for i in range(rs.rank)
            for j in range(rs.rank)
        ):
            cand = [simple[k] for k in perm]
            if _coords(MU, cand) == (1, 0, 0, 0, 0, 0):
                order = cand
                break
    if order is None:
        raise CorrespondenceError("no labelling of the simple roots matches the Cartan matrix")

    root_map = {v: _coords(v, order) for v in roots}
    if sorted(root_map.values()) != sorted(rs.roots) or len(set(root_map.values())) != len(roots):
        raise CorrespondenceError("root coordinates do not biject onto the abstract roots")
    for v in pos:
        if root_map[v] not in rs.positive_roots:
            raise CorrespondenceError("positive systems disagree")

    # simple reflections already generate the Weyl group
    weights = sorted(_orbit(MU, order), key=lambda v: _coords(v, order))
    weight_map = {v: _coords(v, order) for v in weights}
    sigma = set(rs.weyl_orbit((1,) + (0,) * (rs.rank - 1)))
    if set(weight_map.values()) != sigma or len(weights) != len(sigma):
        raise CorrespondenceError("weight orbit does not match the abstract minuscule orbit")

    # one global scale must relate the two inner products
    vectors = roots + weights
    images = [root_map.get(v) or weight_map[v] for v in vectors]
    wg = rs.weight_gram
    r = rs.rank
    # abstract vectors pre-multiplied by the weight Gram matrix
    dual = [[sum((x[i] * wg[i][j] for i in range(r)), Fraction(0)) for j in range(r)] for x in images]
    scale = _rational(inner(vectors[0], vectors[0])) / sum(a * b for a, b in zip(dual[0], images[0]))
    for i in range(len(vectors)):
        for j in range(i, len(vectors)):
            abstract = sum(a * b for a, b in zip(dual[i], images[j]))
            if _rational(inner(vectors[i], vectors[j])) != scale * abstract:
                raise CorrespondenceError("inner products are not preserved up to scale")
    if pos_set != {v for v in roots if root_map[v] in set(rs.positive_roots)}:
        raise CorrespondenceError("positive systems disagree")
    return E6EuclideanModel(pos, roots, order, weights, MU, root_map, weight_map, scale)


def check_triple_words(model: E6EuclideanModel) -> Dict[str, object]:
    """Check the reflection words producing the explicit triple from ``MU``.

    ``delta_candidates`` lists the positive roots ``y`` with
    ``s_gamma s_y MU = MU_DOUBLE_PRIME``, whatever the transcribed delta is.
    """
    a, b, g, d = (TRIPLE_ROOTS[k] for k in ("alpha", "beta", "gamma", "delta"))
    roots = set(model.root_vectors)
    target = MU_DOUBLE_PRIME
    return {
        "alpha_beta_gamma_are_roots": all(v in roots for v in (a, b, g)),
        "mu_prime": reflect_r6(reflect_r6(MU, b), a) == MU_PRIME,
        "mu_double_prime": reflect_r6(reflect_r6(MU, d), g) == target,
        "delta_is_root": d in roots,
        "delta_candidates": [y for y in model.positive_root_vectors if reflect_r6(reflect_r6(MU, y), g) == target],
        "zero_sum": vec_add(vec_add(MU, MU_PRIME), MU_DOUBLE_PRIME) == eucvec([0] * 6),
    }
