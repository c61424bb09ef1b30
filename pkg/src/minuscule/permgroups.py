"""Finite permutation groups small enough to enumerate.

A permutation of degree ``n`` is a tuple ``p`` with ``p[x]`` the image of
``x``.  Products compose right to left: ``mul(p, q)[x] == p[q[x]]``.
Groups are enumerated in full by breadth-first closure; stabilizers are
read off the element list.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from operator import itemgetter
from random import Random
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

Permutation = Tuple[int, ...]

DEFAULT_CAP = 10**6


class GroupTooLarge(RuntimeError):
    pass


def check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation")


def identity(n: int) -> Permutation:
    return tuple(range(n))


def mul(p: Permutation, q: Permutation) -> Permutation:
    """``p * q``: apply ``q`` first, then ``p``."""
    if len(q) == 1:
        return (p[q[0]],)
    return itemgetter(*q)(p)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def cycles(p: Permutation) -> List[Tuple[int, ...]]:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen:
            continue
        c = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            c.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(c))
    return out


def perm_order(p: Permutation) -> int:
    return math.lcm(*(len(c) for c in cycles(p)))


def power(p: Permutation, k: int) -> Permutation:
    out = [0] * len(p)
    for c in cycles(p):
        m = len(c)
        for i, x in enumerate(c):
            out[x] = c[(i + k) % m]
    return tuple(out)


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_prime_power_of(n: int, p: int) -> bool:
    return n >= 1 and p_part(n, p) == n


@dataclass
class PermGroup:
    degree: int
    generators: Tuple[Permutation, ...]
    elements: Tuple[Permutation, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def element_set(self) -> FrozenSet[Permutation]:
        cached = self.__dict__.get("_set")
        if cached is None:
            cached = frozenset(self.elements)
            self.__dict__["_set"] = cached
        return cached

    def __contains__(self, p: Permutation) -> bool:
        return tuple(p) in self.element_set

    def orbit(self, point: int) -> Tuple[int, ...]:
        if not 0 <= point < self.degree:
            raise ValueError("point outside the domain")
        return tuple(sorted(_orbit(point, self.generators, lambda g, x: g[x])))

    def orbits(self) -> List[Tuple[int, ...]]:
        seen: set = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                o = self.orbit(x)
                seen.update(o)
                out.append(o)
        return out

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def set_orbit(self, points: Iterable[int]) -> Tuple[FrozenSet[int], ...]:
        start = frozenset(points)
        orb = _orbit(start, self.generators, lambda g, s: frozenset(g[x] for x in s))
        return tuple(sorted(orb, key=sorted))

    def stabilizer(self, obj: Union[int, Iterable[int]]) -> "PermGroup":
        """Pointwise stabilizer of a point, or setwise stabilizer of a set."""
        if isinstance(obj, int):
            if not 0 <= obj < self.degree:
                raise ValueError("point outside the domain")
            elems = [g for g in self.elements if g[obj] == obj]
        else:
            s = frozenset(obj)
            if any(not 0 <= x < self.degree for x in s):
                raise ValueError("set outside the domain")
            elems = [g for g in self.elements if all(g[x] in s for x in s)]
        return PermGroup.from_elements(self.degree, elems)

    def element_order_profile(self) -> Tuple[Tuple[int, int], ...]:
        """Sorted (element order, count) pairs; an isomorphism invariant."""
        counts: dict = {}
        for g in self.elements:
            k = perm_order(g)
            counts[k] = counts.get(k, 0) + 1
        return tuple(sorted(counts.items()))

    @staticmethod
    def from_elements(degree: int, elements: Iterable[Permutation]) -> "PermGroup":
        elems = tuple(sorted(set(elements)))
        eset = set(elems)
        gens: List[Permutation] = []
        current = {identity(degree)}
        for g in elems:
            if g not in current:
                gens.append(g)
                current = set(_enumerate(degree, gens, DEFAULT_CAP))
            if len(current) == len(elems):
                break
        if current != eset:
            raise ValueError("elements do not form a group")
        return PermGroup(degree, tuple(gens), elems)


def _orbit(start, gens, act):
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = act(g, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _enumerate(degree: int, gens: Sequence[Permutation], cap: int) -> set:
    e = identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise GroupTooLarge(f"group order exceeds cap {cap}")
        frontier = nxt
    return seen


def closure(generators: Iterable[Sequence[int]], degree: Optional[int] = None, cap: int = DEFAULT_CAP) -> PermGroup:
    """Enumerate the group generated by ``generators``."""
    gens = [tuple(g) for g in generators]
    if not gens and degree is None:
        raise ValueError("degree is required when there are no generators")
    n = degree if degree is not None else len(gens[0])
    for g in gens:
        if len(g) != n:
            raise ValueError("generators have different degrees")
        check_perm(g)
    elems = _enumerate(n, gens, cap)
    return PermGroup(n, tuple(gens), tuple(sorted(elems)))


# --- Sylow subgroups -------------------------------------------------------


def _normalizes(g: Permutation, gens: Sequence[Permutation], members: FrozenSet[Permutation]) -> bool:
    gi = inverse(g)
    return all(mul(mul(g, x), gi) in members for x in gens)


def sylow(group: PermGroup, p: int, seed: int = 0, random_tries: int = 200) -> PermGroup:
    """A Sylow ``p``-subgroup of ``group``.

    Grows a ``p``-subgroup by adjoining ``p``-elements of its normalizer.
    Candidates come from random elements raised to their ``p'``-part; when
    those run dry the element list is scanned in canonical order.
    """
    if p < 2 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
        raise ValueError(f"{p} is not prime")
    if group.order % p:
        raise ValueError(f"{p} does not divide the group order {group.order}")
    target = p_part(group.order, p)
    rng = Random(seed)
    n = group.degree
    gens: List[Permutation] = []
    members = frozenset({identity(n)})

    def candidate(g: Permutation) -> Optional[Permutation]:
        k = perm_order(g)
        h = power(g, k // p_part(k, p))
        if h in members or not _normalizes(h, gens, members):
            return None
        return h

    while len(members) < target:
        found = None
        for _ in range(random_tries):
            found = candidate(rng.choice(group.elements))
            if found is not None:
                break
        if found is None:
            for g in group.elements:
                if is_prime_power_of(perm_order(g), p):
                    found = candidate(g)
                    if found is not None:
                        break
        if found is None:  # pragma: no cover - impossible for a finite group
            raise RuntimeError("no p-element normalizes the current p-subgroup")
        gens.append(found)
        members = frozenset(_enumerate(n, gens, group.order))
    return PermGroup(n, tuple(gens), tuple(sorted(members)))


def sylow_transitivity_check(group: PermGroup, p: int, seed: int = 0) -> bool:
    """True when ``group`` and one of its Sylow ``p``-subgroups agree on transitivity."""
    if not is_prime_power_of(group.degree, p):
        raise ValueError(f"degree {group.degree} is not a power of {p}")
    if group.order % p:
        # trivial Sylow subgroup
        return group.is_transitive() == (group.degree == 1)
    return group.is_transitive() == sylow(group, p, seed).is_transitive()


def orbit(group: PermGroup, point: int) -> Tuple[int, ...]:
    return group.orbit(point)


def is_transitive(group: PermGroup) -> bool:
    return group.is_transitive()


def stabilizer(group: PermGroup, obj) -> PermGroup:
    return group.stabilizer(obj)


# --- random test groups ------------------------------------------------------

# S3 wr S3 on 9 points: its conjugates contain a Sylow 3-subgroup of S9
_WREATH_GENS = (
    (1, 0, 2, 3, 4, 5, 6, 7, 8),
    (1, 2, 0, 3, 4, 5, 6, 7, 8),
    (3, 4, 5, 6, 7, 8, 0, 1, 2),
    (3, 4, 5, 0, 1, 2, 6, 7, 8),
)


def random_subgroup_9(rng: Random) -> PermGroup:
    """A random subgroup of S9 small enough to enumerate quickly.

    Either a cyclic group of a random permutation, or a subgroup generated
    by random words in a random conjugate of S3 wr S3.
    """
    n = 9
    if rng.random() < 0.25:
        p = list(range(n))
        rng.shuffle(p)
        return closure([tuple(p)])
    c = list(range(n))
    rng.shuffle(c)
    c = tuple(c)
    ci = inverse(c)
    gens = []
    for _ in range(rng.randint(1, 3)):
        g = identity(n)
        for _ in range(rng.randint(1, 8)):
            g = mul(rng.choice(_WREATH_GENS), g)
        gens.append(mul(mul(c, g), ci))
    return closure(gens)


def random_sylow_suite(cases: int = 50, seed: int = 0) -> Tuple[int, int]:
    """Run :func:`sylow_transitivity_check` with p = 3 on random degree-9 groups.

    Returns (number passing, number of cases).
    """
    rng = Random(seed)
    passed = 0
    for k in range(cases):
        g = random_subgroup_9(rng)
        passed += sylow_transitivity_check(g, 3, seed=k)
    return passed, cases
