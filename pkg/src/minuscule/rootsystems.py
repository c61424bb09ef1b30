"""Root systems of simple Lie algebras, built from Cartan matrices.

Weights are integer tuples in the fundamental-weight basis, so the pairing
``<lam, alpha_i^vee>`` is just ``lam[i]``.  Simple roots are numbered as in
Bourbaki.  Cartan convention: ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so
row ``i`` is the simple root ``alpha_i`` written in fundamental weights.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from . import exactmath

WeightVec = Tuple[int, ...]
CartanMatrix = Tuple[Tuple[int, ...], ...]

VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class RootSystemError(ValueError):
    pass


def _simple_root_gram(type_label: str, n: int) -> List[List[Fraction]]:
    """Gram matrix of the simple roots (long roots have squared length 2)."""
    if type_label not in VALID_RANKS or not VALID_RANKS[type_label](n):
        raise RootSystemError(f"no simple root system of type {type_label}{n}")
    g = [[Fraction(0)] * n for _ in range(n)]

    def link(i: int, j: int, v: Fraction | int = -1) -> None:
        g[i][j] = g[j][i] = Fraction(v)

    lengths = [Fraction(2)] * n
    if type_label in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if type_label == "B":
            lengths[-1] = Fraction(1)
        elif type_label == "C":
            lengths = [Fraction(1)] * (n - 1) + [Fraction(2)]
            for i in range(n - 2):
                link(i, i + 1, Fraction(-1, 2))
            link(n - 2, n - 1, -1)
    elif type_label == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif type_label == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif type_label == "F":
        lengths = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
        link(0, 1)
        link(1, 2)
        link(2, 3, Fraction(-1, 2))
    elif type_label == "G":
        lengths = [Fraction(2, 3), Fraction(2)]
        link(0, 1)
    for i in range(n):
        g[i][i] = lengths[i]
    return g


def cartan_matrix(type_label: str, rank: int) -> CartanMatrix:
    g = _simple_root_gram(type_label, rank)
    rows = []
    for i in range(rank):
        row = []
        for j in range(rank):
            v = 2 * g[i][j] / g[j][j]
            if v.denominator != 1:
                raise RootSystemError("non-integral Cartan entry")
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


def _check_finite_type(cartan: CartanMatrix, gram: Sequence[Sequence[Fraction]]) -> None:
    n = len(cartan)
    for i in range(n):
        if cartan[i][i] != 2:
            raise RootSystemError("Cartan diagonal must be 2")
        for j in range(n):
            if i != j and cartan[i][j] > 0:
                raise RootSystemError("Cartan off-diagonal entries must be <= 0")
    for k in range(1, n + 1):
        if exactmath.det([row[:k] for row in gram[:k]]) <= 0:
            raise RootSystemError("symmetrized Cartan matrix is not positive definite")


@dataclass(frozen=True)
class LongestElement:
    word: Tuple[int, ...]
    # -w0 sends alpha_i to alpha_{opposition[i]}
    opposition: Tuple[int, ...]


@dataclass
class RootSystem:
    type_label: str
    rank: int
    cartan: CartanMatrix
    gram: List[List[Fraction]]
    roots: Tuple[WeightVec, ...]
    positive_roots: Tuple[WeightVec, ...]
    simple_roots: Tuple[WeightVec, ...]
    root_coords: Dict[WeightVec, Tuple[int, ...]] = field(repr=False)
    coroots: Dict[WeightVec, Tuple[int, ...]] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    # -- pairings and reflections --

    def pair(self, lam: Sequence[int], root: WeightVec) -> int:
        """``<lam, root^vee>``."""
        try:
            c = self.coroots[tuple(root)]
        except KeyError:
            raise RootSystemError(f"{tuple(root)} is not a root of {self.name}") from None
        return sum(x * y for x, y in zip(c, lam))

    def reflect(self, lam: Sequence[int], root: WeightVec) -> WeightVec:
        k = self.pair(lam, root)
        return tuple(x - k * a for x, a in zip(lam, root))

    def simple_reflect(self, lam: Sequence[int], i: int) -> WeightVec:
        k = lam[i]
        return tuple(x - k * a for x, a in zip(lam, self.cartan[i]))

    def apply_word(self, word: Iterable[int], lam: Sequence[int]) -> WeightVec:
        """Apply ``s_{w[0]} s_{w[1]} ...`` to ``lam`` (rightmost first)."""
        out = tuple(lam)
        for i in reversed(tuple(word)):
            out = self.simple_reflect(out, i)
        return out

    def weyl_orbit(self, lam: Sequence[int]) -> Tuple[WeightVec, ...]:
        return tuple(sorted(_closure(tuple(lam), self.simple_reflect, self.rank)))

    def inner(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        """Invariant form on weights, normalized so long roots have length 2."""
        w = self.weight_gram
        return sum(
            (lam[i] * mu[j] * w[i][j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    @property
    def weight_gram(self) -> List[List[Fraction]]:
        cached = self.__dict__.get("_weight_gram")
        if cached is None:
            # fundamental weights: omega = A^{-1} alpha
            ainv = exactmath.inverse(self.cartan)
            cached = exactmath.mat_mul(exactmath.mat_mul(ainv, self.gram), [list(r) for r in zip(*ainv)])
            self.__dict__["_weight_gram"] = cached
        return cached

    # -- distinguished elements --

    def rho(self) -> WeightVec:
        half = [Fraction(0)] * self.rank
        for r in self.positive_roots:
            for i, x in enumerate(r):
                half[i] += Fraction(x, 2)
        if any(h.denominator != 1 for h in half):
            raise RootSystemError("rho is not integral")
        return tuple(int(h) for h in half)

    def rho_check(self) -> Tuple[Fraction, ...]:
        """Half-sum of positive coroots, in simple-coroot coordinates.

        With these coordinates ``<lam, rho_check> = sum(c_i * lam_i)``.
        """
        total = [Fraction(0)] * self.rank
        for r in self.positive_roots:
            for i, x in enumerate(self.coroots[r]):
                total[i] += Fraction(x, 2)
        return tuple(total)

    def pair_rho_check(self, lam: Sequence[int]) -> Fraction:
        return sum((c * x for c, x in zip(self.rho_check(), lam)), Fraction(0))

    def height(self, root: WeightVec) -> int:
        return sum(self.root_coords[tuple(root)])

    def highest_root(self) -> WeightVec:
        return max(self.positive_roots, key=lambda r: (self.height(r), r))

    def longest_element(self) -> LongestElement:
        # drive rho to the antidominant chamber; the word spells w0
        v = self.rho()
        word: List[int] = []
        while True:
            i = next((j for j, x in enumerate(v) if x > 0), None)
            if i is None:
                break
            v = self.simple_reflect(v, i)
            word.append(i)
        # w0 = s_{word[-1]} ... s_{word[0]}
        w0 = tuple(reversed(word))
        simple_index = {r: i for i, r in enumerate(self.simple_roots)}
        opp = []
        for a in self.simple_roots:
            img = tuple(-x for x in self.apply_word(w0, a))
            if img not in simple_index:
                raise RootSystemError("-w0 does not permute the simple roots")
            opp.append(simple_index[img])
        return LongestElement(w0, tuple(opp))

    def cartan_determinant(self) -> int:
        d = exactmath.det(self.cartan)
        return int(d)

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(x >= 0 for x in lam)


def _closure(start, step, rank, more=()):
    seen = {start, *more}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for i in range(rank):
            y = step(x, i)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Build the root system of type ``type_label`` and rank ``rank``."""
    gram = _simple_root_gram(type_label, rank)
    cartan = cartan_matrix(type_label, rank)
    _check_finite_type(cartan, gram)

    def s(k: Tuple[int, ...], j: int) -> Tuple[int, ...]:
        pairing = sum(k[i] * cartan[i][j] for i in range(rank))
        return tuple(x - pairing * (1 if i == j else 0) for i, x in enumerate(k))

    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    coords = _closure(simple[0], s, rank, simple[1:])

    root_coords: Dict[WeightVec, Tuple[int, ...]] = {}
    coroots: Dict[WeightVec, Tuple[int, ...]] = {}
    for k in coords:
        w = tuple(sum(k[i] * cartan[i][j] for i in range(rank)) for j in range(rank))
        length = sum(k[i] * k[j] * gram[i][j] for i in range(rank) if k[i] for j in range(rank) if k[j])
        c = []
        for i in range(rank):
            v = k[i] * gram[i][i] / length
            if v.denominator != 1:
                raise RootSystemError("non-integral coroot")
            c.append(int(v))
        root_coords[w] = k
        coroots[w] = tuple(c)

    roots = tuple(sorted(root_coords))
    positive = tuple(r for r in roots if all(x >= 0 for x in root_coords[r]))
    return RootSystem(
        type_label=type_label,
        rank=rank,
        cartan=cartan,
        gram=gram,
        roots=roots,
        positive_roots=positive,
        simple_roots=tuple(cartan[i] for i in range(rank)),
        root_coords=root_coords,
        coroots=coroots,
    )


def reflect(rs: RootSystem, lam: Sequence[int], root: WeightVec) -> WeightVec:
    return rs.reflect(lam, root)


def weyl_orbit(rs: RootSystem, lam: Sequence[int]) -> Tuple[WeightVec, ...]:
    return rs.weyl_orbit(lam)


def rho_and_rho_check(rs: RootSystem) -> Tuple[WeightVec, Tuple[Fraction, ...]]:
    return rs.rho(), rs.rho_check()


def longest_element(rs: RootSystem) -> LongestElement:
    return rs.longest_element()


def cartan_determinant(rs: RootSystem) -> int:
    return rs.cartan_determinant()


def fundamental_weight(rank: int, i: int) -> WeightVec:
    return tuple(int(j == i) for j in range(rank))


def e6() -> RootSystem:
    return build_root_system("E", 6)
