"""Exponent assignments, their weight values, and torus points over finite fields.

An assignment is a cocharacter ``nu`` of the adjoint torus.  We search over
its slopes ``s_a = <a, nu>`` on the simple roots (all >= 1, so ``nu`` is
regular dominant) and record its coefficients on the simple coroots,
``n~ = A^{-1} s``.  The value on a weight is
``h_lam = <lam, nu> = sum_a n~_a <lam, a^vee>``.  Slopes all equal to 1 give
``nu = rho^vee``, whose values on roots are heights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from . import exactmath
from .e6weights import WeightSet27, minuscule_weight_set
from .rootsystems import RootSystem, WeightVec, e6

COXETER_NUMBER = 12
MIN_P = 2 * (27 + 1)
UNCHECKED_ASSUMPTIONS = (
    "the auxiliary primes split in the CM extension over its totally real subfield",
    "p splits completely in the auxiliary number field",
)


class SearchExhausted(RuntimeError):
    pass


class TorusPointError(ValueError):
    def __init__(self, message: str, bound: Optional[int] = None):
        super().__init__(message)
        self.bound = bound


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def _cartan_inverse() -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(r) for r in exactmath.inverse(e6().cartan))


@dataclass(frozen=True)
class ExponentAssignment:
    """Slopes on the simple roots; ``coroot_coeffs`` are the integers n~."""

    slopes: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.slopes) != 6:
            raise ValueError("need one slope per simple root")
        if any(type(s) is not int or s < 1 for s in self.slopes):
            raise ValueError(f"slopes must be positive integers, got {self.slopes}")

    @property
    def coroot_coeffs(self) -> Tuple[Fraction, ...]:
        ainv = _cartan_inverse()
        # nu = sum_j s_j omega_j^vee and omega_j^vee = sum_i (A^{-1})_{ji} alpha_i^vee
        return tuple(sum((self.slopes[j] * ainv[j][i] for j in range(6)), Fraction(0)) for i in range(6))

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coroot_coeffs)

    def value(self, lam: Sequence[int]) -> Fraction:
        return sum((c * x for c, x in zip(self.coroot_coeffs, lam)), Fraction(0))


def _values(n: ExponentAssignment, sigma: WeightSet27) -> List[int]:
    out = []
    for lam in sigma.weights:
        v = n.value(lam)
        if v.denominator != 1:
            raise ValueError("assignment is not integral on the weight lattice")
        out.append(int(v))
    return out


def all_distinct(values: Sequence[int]) -> bool:
    return len(set(values)) == len(values)


@dataclass
class HTWeightSet:
    h: Dict[WeightVec, int]
    # weights listed from largest to smallest value
    ordering: Tuple[WeightVec, ...]

    @property
    def values(self) -> List[int]:
        return sorted(self.h.values())


def ht_weight_set(n: ExponentAssignment, sigma: Optional[WeightSet27] = None) -> HTWeightSet:
    sigma = sigma or minuscule_weight_set()
    vals = _values(n, sigma)
    if not all_distinct(vals):
        raise ValueError("assignment is not admissible: weight values collide")
    h = dict(zip(sigma.weights, vals))
    return HTWeightSet(h, tuple(sorted(h, key=lambda lam: -h[lam])))


def _slope_box(cap: int):
    return product(range(1, cap + 1), repeat=6)


def find_distinct_exponents(max_value_cap: int = 4, sigma: Optional[WeightSet27] = None) -> ExponentAssignment:
    """Integral assignment with 27 distinct values, slopes in ``[1, cap]``.

    Among all such slopes the witness minimizes ``max |h|``, ties broken
    lexicographically, so the result is canonical for a given cap.
    """
    if max_value_cap < 1:
        raise ValueError("cap must be at least 1")
    sigma = sigma or minuscule_weight_set()
    ainv = _cartan_inverse()
    best = None
    for s in _slope_box(max_value_cap):
        coeffs = [sum((s[j] * ainv[j][i] for j in range(6)), Fraction(0)) for i in range(6)]
        if any(c.denominator != 1 for c in coeffs):
            continue
        ints = [int(c) for c in coeffs]
        vals = [sum(c * x for c, x in zip(ints, lam)) for lam in sigma.weights]
        if not all_distinct(vals):
            continue
        key = (max(abs(v) for v in vals), s)
        if best is None or key < best:
            best = key
    if best is None:
        raise SearchExhausted(f"no admissible assignment with slopes <= {max_value_cap}")
    return ExponentAssignment(best[1])


@dataclass
class RootExponentReport:
    exponents: Dict[WeightVec, int]  # keyed by positive root b, value e_{-b} > 0
    min_exponent: int
    max_exponent: int
    differences_nonzero: bool
    l: Optional[int]


def root_exponent_bounds(n: ExponentAssignment, rs: Optional[RootSystem] = None, sigma: Optional[WeightSet27] = None) -> RootExponentReport:
    """Exponents on the roots and the least prime ``l > 12`` that separates everything.

    ``l`` must exceed every root exponent and divide none of the weight
    differences; it is ``None`` when some difference vanishes.
    """
    rs = rs or e6()
    sigma = sigma or minuscule_weight_set()
    if not n.is_integral:
        raise ValueError("assignment is not integral")
    exps = {}
    for b in rs.positive_roots:
        e = n.value(b)
        exps[b] = int(e)
    vals = _values(n, sigma)
    diffs = [abs(x - y) for x, y in combinations(vals, 2)]
    nonzero = all(diffs)
    lo, hi = min(exps.values()), max(exps.values())
    l = None
    if nonzero and lo >= 1:
        l = max(COXETER_NUMBER, hi) + 1
        while not (is_prime(l) and all(d % l for d in diffs)):
            l += 1
    return RootExponentReport(exps, lo, hi, nonzero, l)


def check_borel_compatibility(n: ExponentAssignment, rs: Optional[RootSystem] = None, sigma: Optional[WeightSet27] = None) -> Tuple[bool, int]:
    """``h_{lam + g} > h_lam`` whenever ``lam`` and ``lam + g`` are weights, ``g > 0``.

    Returns the verdict and the number of pairs compared.
    """
    rs = rs or e6()
    sigma = sigma or minuscule_weight_set()
    ws = set(sigma.weights)
    ok = True
    count = 0
    for lam in sigma.weights:
        for g in rs.positive_roots:
            up = tuple(x + y for x, y in zip(lam, g))
            if up in ws:
                count += 1
                ok = ok and n.value(up) > n.value(lam)
    return ok, count


# --- torus points mod p ---------------------------------------------------------


@dataclass
class TorusPointModL:
    p: int
    l: int
    g: int
    exponents: Tuple[int, ...]  # residues mod l on the fundamental weights

    def weight_residues(self, sigma: Optional[WeightSet27] = None) -> List[int]:
        sigma = sigma or minuscule_weight_set()
        return [sum(r * x for r, x in zip(self.exponents, lam)) % self.l for lam in sigma.weights]

    def weight_values(self, sigma: Optional[WeightSet27] = None) -> List[int]:
        return [pow(self.g, k, self.p) for k in self.weight_residues(sigma)]


# coordinates ordered along the Dynkin diagram so that short root strings
# are fully determined early in the search
_SEARCH_ORDER = (0, 2, 3, 1, 4, 5)


def _difference_vectors(sigma: WeightSet27) -> List[Tuple[int, ...]]:
    """Differences of distinct weights, up to sign, in simple-root coordinates."""
    ainv = _cartan_inverse()
    out = set()
    for x, y in combinations(sigma.weights, 2):
        d = [sum((Fraction(a - b) * ainv[i][j] for i, (a, b) in enumerate(zip(x, y))), Fraction(0)) for j in range(6)]
        if any(c.denominator != 1 for c in d):
            raise ArithmeticError("weight difference outside the root lattice")
        v = tuple(int(c) for c in d)
        out.add(max(v, tuple(-c for c in v)))
    return sorted(out)


def separating_residues(l: int, sigma: Optional[WeightSet27] = None) -> Optional[Tuple[int, ...]]:
    """Residues mod ``l`` on the simple roots separating the 27 weights, or None.

    A character of the weight lattice with values in ``Z/l`` separates the
    weights iff it kills no weight difference; differences lie in the root
    lattice, so only the values on simple roots matter.  A solution stays a
    solution after scaling by a unit, so the first nonzero value (in search
    order) is fixed to 1, and the least solution in that order is returned.

    The first four coordinates are searched depth first.  For the last two,
    a difference with coefficients ``(c4, c5)`` forbids ``r5 = a + b*r4`` for
    constants ``a, b``; differences sharing ``b`` are handled together as an
    ``l``-bit mask rotated by ``b*r4``.
    """
    if l < 5:
        return None
    sigma = sigma or minuscule_weight_set()
    diffs = [tuple(d[i] for i in _SEARCH_ORDER) for d in _difference_vectors(sigma)]
    cols = [[d[k] for d in diffs] for k in range(6)]
    final: List[List[int]] = [[] for _ in range(6)]
    for i, d in enumerate(diffs):
        final[max(j for j, x in enumerate(d) if x)].append(i)
    live = [[i for i in range(len(diffs)) if cols[k][i] and max(j for j, x in enumerate(diffs[i]) if x) >= k] for k in range(6)]
    inv4 = {i: pow(cols[4][i], -1, l) for i in final[4]}
    inv5 = {i: pow(cols[5][i], -1, l) for i in final[5]}
    slope5 = {i: (-cols[4][i] * inv5[i]) % l for i in final[5]}
    full = (1 << l) - 1
    partial = [0] * len(diffs)
    r = [0] * 6

    def last_two(normalized: bool) -> bool:
        f4 = {(-partial[i] * inv4[i]) % l for i in final[4]}
        masks: Dict[int, int] = {}
        for i in final[5]:
            b = slope5[i]
            masks[b] = masks.get(b, 0) | (1 << ((-partial[i] * inv5[i]) % l))
        for v4 in range(l) if normalized else (0, 1):
            if v4 in f4:
                continue
            forb = 0
            for b, a in masks.items():
                sh = (b * v4) % l
                forb |= ((a << sh) | (a >> (l - sh))) & full
            free = ~forb & full
            if not (normalized or v4 == 1):
                free &= 2  # r5 must be the normalizing 1
            if free:
                r[4] = v4
                r[5] = (free & -free).bit_length() - 1
                return True
        return False

    def extend(k: int, normalized: bool) -> bool:
        if k == 4:
            return last_two(normalized)
        col = cols[k]
        idx = live[k]
        for v in range(l) if normalized else (0, 1):
            if v:
                for i in idx:
                    partial[i] += v * col[i]
            if all(partial[i] % l for i in final[k]):
                r[k] = v
                if extend(k + 1, normalized or v == 1):
                    return True
            if v:
                for i in idx:
                    partial[i] -= v * col[i]
        return False

    if not extend(0, False):
        return None
    out = [0] * 6
    for pos, i in enumerate(_SEARCH_ORDER):
        out[i] = r[pos]
    return tuple(out)


def weight_residues_from_roots(root_residues: Sequence[int], l: int) -> Tuple[int, ...]:
    """Values on the fundamental weights of the character with given values on simple roots."""
    if l == 3:
        raise ValueError("the weight lattice is not determined by the root lattice mod 3")
    ainv = _cartan_inverse()
    out = []
    for j in range(6):
        v = sum((ainv[j][i] * root_residues[i] for i in range(6)), Fraction(0))
        out.append(v.numerator * pow(v.denominator, -1, l) % l)
    return tuple(out)


def _check_primes(l: int, p: int) -> None:
    if not is_prime(l) or not is_prime(p):
        raise TorusPointError(f"l = {l} and p = {p} must both be prime")
    if l <= COXETER_NUMBER:
        raise TorusPointError(f"l = {l} must exceed the Coxeter number {COXETER_NUMBER}")
    if p <= MIN_P:
        raise TorusPointError(f"p = {p} must exceed {MIN_P}")
    if (p - 1) % l or (p - 1) % (l * l) == 0:
        raise TorusPointError(f"need l || p - 1, got l = {l}, p = {p}")


def find_torus_point(l: int, p: int, sigma: Optional[WeightSet27] = None, exhaustive: bool = False) -> TorusPointModL:
    """A point of order ``l`` in the torus mod ``p`` separating the 27 weights.

    With fewer than 27 residues available there is nothing to search; pass
    ``exhaustive=True`` to run the search anyway.
    """
    _check_primes(l, p)
    sigma = sigma or minuscule_weight_set()
    n = len(sigma.weights)
    if l < n and not exhaustive:
        raise TorusPointError(f"27 distinct residues mod {l} are impossible: need l >= {n}", bound=n)
    roots = separating_residues(l, sigma)
    if roots is None:
        raise TorusPointError(f"no separating point of order {l} (exhaustive search)", bound=n)
    r = weight_residues_from_roots(roots, l)
    g = next(x for x in (pow(h, (p - 1) // l, p) for h in range(2, p)) if x != 1)
    pt = TorusPointModL(p, l, g, r)
    vals = pt.weight_values(sigma)
    if not all_distinct(vals):  # pragma: no cover - guaranteed by the residues
        raise TorusPointError("weight values collide mod p")
    return pt


def find_prime_pair(l: int) -> int:
    """Least prime ``p > 56`` with ``l`` dividing ``p - 1`` exactly once."""
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    p = MIN_P + 1
    while True:
        if (p - 1) % l == 0 and (p - 1) % (l * l) and is_prime(p):
            return p
        p += 1


def first_workable_l(start: int = COXETER_NUMBER + 1, sigma: Optional[WeightSet27] = None) -> Tuple[int, int, TorusPointModL]:
    l = start
    while True:
        if is_prime(l):
            p = find_prime_pair(l)
            try:
                return l, p, find_torus_point(l, p, sigma)
            except TorusPointError:
                pass
        l += 1
