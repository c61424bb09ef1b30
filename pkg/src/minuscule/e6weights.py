"""Combinatorics of the 27 weights of the minuscule representation of E6."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from random import Random
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import exactmath
from .permgroups import PermGroup, closure
from .rootsystems import RootSystem, WeightVec, build_root_system, e6, fundamental_weight

MINUSCULE_NODE = 0  # omega_1 in Bourbaki labels


# --- Weyl groups as permutation groups -------------------------------------


def reflection_permutations(rs: RootSystem, points: Sequence[WeightVec]) -> List[Tuple[int, ...]]:
    index = {p: i for i, p in enumerate(points)}
    return [tuple(index[rs.simple_reflect(p, i)] for p in points) for i in range(rs.rank)]


@lru_cache(maxsize=None)
def weyl_group_on_roots(type_label: str, rank: int) -> PermGroup:
    rs = build_root_system(type_label, rank)
    return closure(reflection_permutations(rs, rs.roots))


@lru_cache(maxsize=None)
def weyl_group_on_weights() -> PermGroup:
    rs = e6()
    return closure(reflection_permutations(rs, minuscule_weight_set().weights))


# --- the weight set ----------------------------------------------------------


@dataclass(frozen=True)
class WeightSet27:
    weights: Tuple[WeightVec, ...]

    def __post_init__(self) -> None:
        if len(set(self.weights)) != len(self.weights):
            raise ValueError("weights must be distinct")

    def index(self, lam: WeightVec) -> int:
        return self.weights.index(tuple(lam))

    def total(self) -> WeightVec:
        return tuple(sum(c) for c in zip(*self.weights))


@lru_cache(maxsize=None)
def minuscule_weight_set() -> WeightSet27:
    rs = e6()
    return WeightSet27(rs.weyl_orbit(fundamental_weight(6, MINUSCULE_NODE)))


@dataclass
class DepthReport:
    depth: Dict[WeightVec, int]
    # a witness sequence of roots for every weight
    roots_used: Dict[WeightVec, Tuple[WeightVec, ...]] = field(repr=False)

    @property
    def max_depth(self) -> int:
        return max(self.depth.values())

    def layer_sizes(self) -> Tuple[int, ...]:
        out = [0] * (self.max_depth + 1)
        for d in self.depth.values():
            out[d] += 1
        return tuple(out)


def reflection_depth(sigma: WeightSet27, mu: WeightVec, rs: Optional[RootSystem] = None) -> DepthReport:
    """Breadth-first search from ``mu`` using reflections in all roots."""
    rs = rs or e6()
    mu = tuple(mu)
    if mu not in sigma.weights:
        raise ValueError("mu is not in the weight set")
    depth = {mu: 0}
    used: Dict[WeightVec, Tuple[WeightVec, ...]] = {mu: ()}
    queue = deque([mu])
    while queue:
        x = queue.popleft()
        for a in rs.positive_roots:
            y = rs.reflect(x, a)
            if y not in depth:
                depth[y] = depth[x] + 1
                used[y] = used[x] + (a,)
                queue.append(y)
    if set(depth) != set(sigma.weights):
        raise ValueError("reflections leave the weight set")
    return DepthReport(depth, used)


# --- zero-sum triples --------------------------------------------------------


@dataclass
class TripleReport:
    triples: Tuple[Tuple[WeightVec, WeightVec, WeightVec], ...]
    count: int
    total_3subsets: int
    low_span: Tuple[Tuple[WeightVec, WeightVec, WeightVec], ...]

    @property
    def criteria_agree(self) -> bool:
        return self.low_span == self.triples


def zero_sum_triples(sigma: WeightSet27) -> TripleReport:
    """Scan every 3-subset: zero-sum ones and ones spanning a plane or less."""
    zero, low = [], []
    total = 0
    for t in combinations(sigma.weights, 3):
        total += 1
        if all(sum(c) == 0 for c in zip(*t)):
            zero.append(t)
        if exactmath.rank(t) <= 2:
            low.append(t)
    return TripleReport(tuple(zero), len(zero), total, tuple(low))


def _is_zero_sum(t: Sequence[Sequence[int]]) -> bool:
    return all(sum(c) == 0 for c in zip(*t))


def four_subset_check(vectors: Sequence[Sequence[int]]) -> bool:
    """True when no 4 of ``vectors`` have all four 3-subsets summing to zero."""
    for quad in combinations(vectors, 4):
        if all(_is_zero_sum(t) for t in combinations(quad, 3)):
            return False
    return True


def count_four_subsets_with_triple(vectors: Sequence[Sequence[int]]) -> int:
    return sum(
        1 for quad in combinations(vectors, 4) if any(_is_zero_sum(t) for t in combinations(quad, 3))
    )


# --- the quadratic space Lambda / 2 Lambda --------------------------------------

F2Vec = Tuple[int, ...]


class QuadraticFormError(ValueError):
    pass


@dataclass
class F2QuadSpace:
    """``V = Lambda / 2 Lambda`` with ``q(x) = (3/2) <x, x> mod 2``.

    ``form`` is the integral matrix ``3 * (omega_i, omega_j)``.
    """

    dimension: int
    form: Tuple[Tuple[int, ...], ...]

    def vectors(self) -> List[F2Vec]:
        return [tuple(v) for v in product((0, 1), repeat=self.dimension)]

    def q(self, x: Sequence[int]) -> int:
        m = self.form
        n = self.dimension
        val = sum(m[i][j] * x[i] * x[j] for i in range(n) for j in range(n))
        return (val // 2) % 2

    def b(self, x: Sequence[int], y: Sequence[int]) -> int:
        m = self.form
        n = self.dimension
        return sum(m[i][j] * x[i] * y[j] for i in range(n) for j in range(n)) % 2

    def reduce(self, lam: Sequence[int]) -> F2Vec:
        return tuple(x % 2 for x in lam)

    def is_nondegenerate(self) -> bool:
        return all(any(self.b(x, y) for y in self.vectors()) for x in self.vectors() if any(x))

    def symplectic_basis(self, rng: Optional[Random] = None) -> List[Tuple[F2Vec, F2Vec]]:
        """Symplectic basis for ``b``; a random starting basis when ``rng`` is given."""
        n = self.dimension
        basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        if rng is not None:
            basis = _random_f2_basis(n, rng)
        pairs = []
        rest = list(basis)
        while rest:
            e = rest.pop(0)
            k = next((i for i, v in enumerate(rest) if self.b(e, v)), None)
            if k is None:
                raise QuadraticFormError("bilinear form is degenerate")
            f = rest.pop(k)
            # make the remaining vectors orthogonal to e and f
            new = []
            for v in rest:
                v2 = v
                if self.b(v, f):
                    v2 = _add(v2, e)
                if self.b(v, e):
                    v2 = _add(v2, f)
                new.append(v2)
            rest = new
            pairs.append((e, f))
        return pairs

    def arf(self, rng: Optional[Random] = None) -> int:
        return sum(self.q(e) * self.q(f) for e, f in self.symplectic_basis(rng)) % 2

    def arf_by_majority(self) -> int:
        """The value ``q`` takes most often."""
        ones = sum(self.q(v) for v in self.vectors())
        return int(2 * ones > 2**self.dimension)

    def is_totally_singular(self, vecs: Sequence[F2Vec]) -> bool:
        span = _span(vecs)
        return all(self.q(v) == 0 for v in span)

    def singular_subspace_exists(self, dim: int) -> bool:
        """Exhaustive search for a totally singular subspace of the given dimension."""
        singular = [v for v in self.vectors() if any(v) and self.q(v) == 0]
        for vecs in combinations(singular, dim):
            if _f2_rank(vecs) == dim and all(self.b(x, y) == 0 for x, y in combinations(vecs, 2)):
                return True
        return False


def _add(x: F2Vec, y: F2Vec) -> F2Vec:
    return tuple((a + b) % 2 for a, b in zip(x, y))


def _span(vecs: Sequence[F2Vec]) -> set:
    n = len(vecs[0])
    out = {tuple([0] * n)}
    for v in vecs:
        out |= {_add(v, w) for w in out}
    return out


def _f2_rank(vecs: Sequence[F2Vec]) -> int:
    return len(_span(vecs)).bit_length() - 1


def _random_f2_basis(n: int, rng: Random) -> List[F2Vec]:
    while True:
        basis = [tuple(rng.randrange(2) for _ in range(n)) for _ in range(n)]
        if _f2_rank(basis) == n:
            return basis


def f2_space(rs: Optional[RootSystem] = None) -> F2QuadSpace:
    rs = rs or e6()
    det = rs.cartan_determinant()
    entries = []
    for row in rs.weight_gram:
        out = []
        for x in row:
            y = det * x
            if y.denominator != 1:
                raise QuadraticFormError("scaled form is not integral")
            out.append(int(y))
        entries.append(tuple(out))
    if any(entries[i][i] % 2 for i in range(rs.rank)):
        raise QuadraticFormError("q is not well defined: the scaled lattice is not even")
    if det != 3:
        raise QuadraticFormError("the (3/2)<x,x> normalization is specific to E6")
    return F2QuadSpace(rs.rank, tuple(entries))


def arf(space: F2QuadSpace) -> int:
    return space.arf()


def is_quadratic_refinement(space: F2QuadSpace) -> bool:
    """``q(x + y) - q(x) - q(y) = b(x, y)`` for every pair of vectors."""
    vecs = space.vectors()
    qs = {v: space.q(v) for v in vecs}
    return all(
        qs[_add(x, y)] ^ qs[x] ^ qs[y] == space.b(x, y)
        for x in vecs
        for y in vecs
    )


@dataclass
class TripleSymmetryReport:
    all_singular: bool
    orbit_size: int
    stabilizer_order: int
    stabilizer_order_profile: Tuple[Tuple[int, int], ...]


def triple_isotropy_and_transitivity(
    triples: TripleReport, space: F2QuadSpace, weyl: PermGroup, sigma: WeightSet27
) -> TripleSymmetryReport:
    singular = all(
        space.is_totally_singular([space.reduce(x) for x in t]) and _f2_rank([space.reduce(x) for x in t]) == 2
        for t in triples.triples
    )
    first = frozenset(sigma.index(x) for x in triples.triples[0])
    orbit = weyl.set_orbit(first)
    stab = weyl.stabilizer(first)
    return TripleSymmetryReport(singular, len(orbit), stab.order, stab.element_order_profile())


# --- torus involutions -------------------------------------------------------


def involution_traces(sigma: Optional[WeightSet27] = None) -> Dict[Tuple[int, ...], int]:
    """Trace on the 27 of every element of order <= 2 in the maximal torus.

    Such an element is a sign character of the weight lattice, fixed by its
    signs (as 0/1 exponents) on the fundamental weights.
    """
    sigma = sigma or minuscule_weight_set()
    out = {}
    for eps in product((0, 1), repeat=6):
        out[eps] = sum((-1) ** (sum(e * x for e, x in zip(eps, lam)) % 2) for lam in sigma.weights)
    return out


def split_cartan_dimension(rs: Optional[RootSystem] = None) -> int:
    """Dimension of the fixed space of a split Cartan involution: ``|Phi^+|``."""
    rs = rs or e6()
    return len(rs.positive_roots)
