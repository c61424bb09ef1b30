"""Small irreducible representations of simple Lie algebras, and sl2 bookkeeping.

Dimensions come from the Weyl dimension formula evaluated in exact integer
arithmetic.  The scan enumerates dominant weights breadth first and prunes
as soon as the dimension exceeds the bound, which is safe because the Weyl
dimension is strictly increasing along ``lam -> lam + omega_i``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import exactmath
from .rootsystems import RootSystem, WeightVec, build_root_system

# rank bounds: the smallest nontrivial irrep of each classical type has
# dimension n+1, 2n+1, 2n, 2n, so these ranks cover every dimension <= 27
SCAN_RANKS: Dict[str, Tuple[int, ...]] = {
    "A": tuple(range(1, 27)),
    "B": tuple(range(2, 14)),
    "C": tuple(range(3, 14)),
    "D": tuple(range(4, 14)),
    "E": (6, 7, 8),
    "F": (4,),
    "G": (2,),
}
# one rank above each classical bound; these must contribute nothing
SENTINEL_RANKS: Dict[str, int] = {"A": 27, "B": 14, "C": 14, "D": 14}


class ScanError(ValueError):
    pass


class UnsupportedInput(ValueError):
    pass


def algebra_name(type_label: str, rank: int) -> str:
    if type_label == "A":
        return f"sl{rank + 1}"
    if type_label == "B":
        return f"so{2 * rank + 1}"
    if type_label == "C":
        return f"sp{2 * rank}"
    if type_label == "D":
        return f"so{2 * rank}"
    return f"{type_label.lower()}{rank}"


@dataclass(frozen=True)
class DominantWeight:
    type_label: str
    rank: int
    coords: WeightVec

    def __post_init__(self) -> None:
        if len(self.coords) != self.rank:
            raise ValueError("coordinate count differs from the rank")
        if any(c < 0 for c in self.coords):
            raise ValueError(f"{self.coords} is not dominant")


@dataclass(frozen=True)
class IrrepRecord:
    highest_weight: DominantWeight
    dim: int

    @property
    def algebra(self) -> Tuple[str, int]:
        return (self.highest_weight.type_label, self.highest_weight.rank)

    @property
    def rank(self) -> int:
        return self.highest_weight.rank

    @property
    def name(self) -> str:
        return algebra_name(*self.algebra)

    @property
    def is_trivial(self) -> bool:
        return not any(self.highest_weight.coords)

    @property
    def factors(self) -> Tuple["IrrepRecord", ...]:
        return (self,)

    def describe(self) -> str:
        return f"{self.name}{list(self.highest_weight.coords)}"


@dataclass(frozen=True)
class CompositeRecord:
    """Outer tensor product of nontrivial irreps of simple factors."""

    factors: Tuple[IrrepRecord, ...]

    @property
    def dim(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.dim
        return out

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def name(self) -> str:
        return "x".join(f.name for f in self.factors)

    @property
    def is_trivial(self) -> bool:
        return False

    def describe(self) -> str:
        return " (x) ".join(f.describe() for f in self.factors)


# --- Weyl dimension formula ----------------------------------------------------


def _positive_coroots(rs: RootSystem) -> List[Tuple[int, ...]]:
    return [rs.coroots[r] for r in rs.positive_roots]


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """``prod <lam + rho, b^vee> / <rho, b^vee>`` over positive roots ``b``."""
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise ValueError("weight has the wrong length")
    if any(x < 0 for x in lam):
        raise ValueError(f"{lam} is not dominant")
    num = den = 1
    for c in _positive_coroots(rs):
        h = sum(c)  # rho = (1, ..., 1) in fundamental weights
        num *= h + sum(x * y for x, y in zip(c, lam))
        den *= h
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("Weyl dimension is not an integer")
    return q


def dominant_weights_up_to(rs: RootSystem, max_dim: int) -> List[Tuple[WeightVec, int]]:
    start = (0,) * rs.rank
    seen = {start}
    out = [(start, 1)]
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        for i in range(rs.rank):
            mu = lam[:i] + (lam[i] + 1,) + lam[i + 1 :]
            if mu in seen:
                continue
            seen.add(mu)
            d = weyl_dim(rs, mu)
            if d <= max_dim:
                out.append((mu, d))
                queue.append(mu)
    return sorted(out)


def _dual(rs: RootSystem, lam: WeightVec) -> WeightVec:
    opp = rs.longest_element().opposition
    out = [0] * rs.rank
    for i, x in enumerate(lam):
        out[opp[i]] = x
    return tuple(out)


def canonical_representative(rs: RootSystem, lam: WeightVec) -> WeightVec:
    """The lexicographically smaller of ``lam`` and its dual ``-w0 lam``."""
    return min(lam, _dual(rs, lam))


def scan_algebra(type_label: str, rank: int, max_dim: int = 27) -> List[IrrepRecord]:
    rs = build_root_system(type_label, rank)
    records = {}
    for lam, d in dominant_weights_up_to(rs, max_dim):
        rep = canonical_representative(rs, lam)
        records[rep] = IrrepRecord(DominantWeight(type_label, rank, rep), d)
    return [records[k] for k in sorted(records)]


def _scan_jobs(include_sentinels: bool) -> List[Tuple[str, int]]:
    jobs = [(t, n) for t, ranks in SCAN_RANKS.items() for n in ranks]
    if include_sentinels:
        jobs += sorted(SENTINEL_RANKS.items())
    return jobs


def scan_irreps(max_dim: int = 27, include_sentinels: bool = False, threads: Optional[int] = None) -> List[IrrepRecord]:
    """All irreps of dimension <= ``max_dim`` for the simple types in range.

    Trivial representations are included (one per algebra).  Dual pairs are
    reported once.
    """
    if max_dim < 1:
        raise ScanError("max_dim must be positive")
    if max_dim > 27 and not include_sentinels:
        # the rank bounds are only justified up to 27
        raise ScanError("rank bounds only cover max_dim <= 27")
    jobs = _scan_jobs(include_sentinels)
    if threads and threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda j: scan_algebra(j[0], j[1], max_dim), jobs))
    else:
        parts = [scan_algebra(t, n, max_dim) for t, n in jobs]
    return [r for part in parts for r in part]


def sentinel_hits(max_dim: int = 27) -> List[IrrepRecord]:
    """Nontrivial records at the sentinel ranks; expected empty."""
    out = []
    for t, n in sorted(SENTINEL_RANKS.items()):
        out += [r for r in scan_algebra(t, n, max_dim) if not r.is_trivial]
    return out


def faithful_simple(records: Iterable[IrrepRecord], d: int) -> List[IrrepRecord]:
    """Nontrivial irreps of dimension ``d``; for a simple algebra these are faithful."""
    return sorted(
        (r for r in records if r.dim == d and not r.is_trivial),
        key=lambda r: (r.rank, r.name, r.highest_weight.coords),
    )


def composites(records: Iterable[IrrepRecord], d: int) -> List[CompositeRecord]:
    """Faithful irreps of dimension ``d`` of products of at least two simple algebras."""
    pool = sorted(
        (r for r in records if not r.is_trivial and r.dim > 1 and d % r.dim == 0),
        key=lambda r: (-r.dim, r.name, r.highest_weight.coords),
    )
    out = []
    for k in range(2, d.bit_length() + 1):
        for combo in combinations_with_replacement(range(len(pool)), k):
            prod = 1
            for i in combo:
                prod *= pool[i].dim
            if prod == d:
                out.append(CompositeRecord(tuple(pool[i] for i in combo)))
    return sorted(out, key=lambda c: (c.rank, c.name))


def table_rows(records: Sequence[IrrepRecord], d: int, with_composites: bool) -> List[Tuple[str, int, int]]:
    """``(algebra, d, rank)`` rows in canonical order."""
    rows = [(r.name, r.dim, r.rank) for r in faithful_simple(records, d)]
    if with_composites:
        rows += [(c.name, c.dim, c.rank) for c in composites(records, d)]
    return sorted(rows, key=lambda x: (x[2], x[0]))


# --- principal sl2 and Jordan types -------------------------------------------------


@dataclass(frozen=True)
class JordanType:
    blocks: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b < 1 for b in self.blocks):
            raise ValueError("block sizes must be positive")
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, reverse=True)))

    @property
    def dim(self) -> int:
        return sum(self.blocks)


def principal_sl2_weights(rs: RootSystem, highest_weight: Sequence[int]) -> List[int]:
    """``<lam, 2 rho^vee>`` over the weights of a multiplicity-free orbit representation."""
    hw = tuple(highest_weight)
    orbit = rs.weyl_orbit(hw)
    if len(orbit) != weyl_dim(rs, hw):
        raise UnsupportedInput("representation has weights of multiplicity > 1")
    rc = rs.rho_check()
    out = []
    for lam in orbit:
        v = 2 * sum((c * x for c, x in zip(rc, lam)), Fraction(0))
        if v.denominator != 1:
            raise ArithmeticError("non-integral principal weight")
        out.append(int(v))
    return sorted(out, reverse=True)


def sl2_string_decompose(weights: Iterable[int]) -> JordanType:
    """Peel strings ``m, m-2, ..., -m`` off the top of an sl2 character."""
    pool = Counter(weights)
    if any(pool[w] != pool[-w] for w in pool):
        raise ValueError("weight multiset is not symmetric under negation")
    blocks = []
    while +pool:
        m = max(w for w, c in pool.items() if c > 0)
        for w in range(m, -m - 1, -2):
            if pool[w] <= 0:
                raise ValueError(f"string from {m} is broken at {w}: not an sl2 character")
            pool[w] -= 1
        blocks.append(m + 1)
        pool = +pool
    return JordanType(tuple(blocks))


def jordan_tensor(m: int, n: int) -> JordanType:
    """Blocks of ``J_m (x) 1 + 1 (x) J_n`` (Clebsch-Gordan)."""
    if m < 1 or n < 1:
        raise ValueError("block sizes must be positive")
    m, n = max(m, n), min(m, n)
    return JordanType(tuple(range(m + n - 1, m - n, -2)))


def nilpotent_jordan_block(k: int) -> list:
    return [[1 if j == i + 1 else 0 for j in range(k)] for i in range(k)]


def jordan_type_of_nilpotent(mat: Sequence[Sequence[int]]) -> JordanType:
    """Block sizes of a nilpotent matrix, read from the ranks of its powers."""
    n = len(mat)
    ranks = [n]
    power = [list(r) for r in mat]
    while ranks[-1] > 0:
        ranks.append(exactmath.rank(power))
        if len(ranks) > n + 1:
            raise ValueError("matrix is not nilpotent")
        power = exactmath.mat_mul(power, mat)
    # number of blocks of size >= k is ranks[k-1] - ranks[k]
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    blocks = []
    for k in range(1, len(at_least)):
        blocks += [k] * (at_least[k - 1] - at_least[k])
    return JordanType(tuple(blocks))


def jordan_tensor_oracle(m: int, n: int) -> JordanType:
    """Brute force: Jordan type of ``N_m (x) I + I (x) N_n``."""
    a = exactmath.kron(nilpotent_jordan_block(m), exactmath.mat_identity(n))
    b = exactmath.kron(exactmath.mat_identity(m), nilpotent_jordan_block(n))
    return jordan_type_of_nilpotent([[x + y for x, y in zip(r, s)] for r, s in zip(a, b)])


def max_jordan_in_tensor(a: int, b: int) -> int:
    """Largest block of a unipotent on an ``a*b``-dim tensor product of dims ``a`` and ``b``."""
    if a < 1 or b < 1:
        raise ValueError("dimensions must be positive")
    return a + b - 1


def max_jordan_for_factorization(dims: Sequence[int]) -> int:
    out = 1
    for d in dims:
        out = max_jordan_in_tensor(out, d)
    return out
