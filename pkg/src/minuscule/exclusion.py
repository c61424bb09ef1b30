"""Rule out every reducible decomposition of the 27-dimensional representation.

A reducible faithful action would split the 27 weights into irreducible
parts.  The unipotent with Jordan blocks 17, 9, 1 restricts to each part,
so the parts correspond to set partitions of the block multiset.  Each part
is then tested against the small-irrep scan using rank constraints coming
from the weight combinatorics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import e6weights
from .repscan import CompositeRecord, IrrepRecord, composites, faithful_simple, max_jordan_for_factorization

BLOCKS = (17, 9, 1)
RANK_CAP = 6  # rank of E6
DEFAULT_TORUS_CAP = 1

Record = Union[IrrepRecord, CompositeRecord]


@dataclass(frozen=True)
class Part:
    dim: int
    blocks: Tuple[int, ...]


@dataclass(frozen=True)
class SplitCandidate:
    parts: Tuple[Part, ...]
    provenance: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for p in self.parts:
            if p.dim != sum(p.blocks):
                raise ValueError("part dimension differs from the sum of its blocks")

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(p.dim for p in self.parts)


@dataclass
class Step:
    constraint: str
    reference: str
    witness: str


@dataclass
class ExclusionCertificate:
    candidate: SplitCandidate
    steps: List[Step] = field(default_factory=list)
    verdict: str = "survives"
    # surviving records per part index
    survivors: Dict[int, List[str]] = field(default_factory=dict)


class ScanIncomplete(ValueError):
    pass


def _set_partitions(items: Sequence[int]) -> List[List[List[int]]]:
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    out = []
    for p in _set_partitions(rest):
        out.append([[first]] + p)
        for i in range(len(p)):
            out.append(p[:i] + [[first] + p[i]] + p[i + 1 :])
    return out


def candidate_splits(blocks: Sequence[int] = BLOCKS) -> List[SplitCandidate]:
    """One candidate per set partition of the blocks, parts sorted by dimension."""
    seen = set()
    out = []
    for partition in _set_partitions(list(blocks)):
        parts = sorted(
            (Part(sum(g), tuple(sorted(g, reverse=True))) for g in partition),
            key=lambda p: (-p.dim, p.blocks),
        )
        key = tuple(parts)
        if key in seen:
            continue
        seen.add(key)
        out.append(SplitCandidate(key, tuple(p.blocks for p in parts)))
    return sorted(out, key=lambda c: (len(c.parts), tuple(-d for d in c.dims)))


def rank_floor(part_dim: int, sigma: Optional[e6weights.WeightSet27] = None) -> int:
    """Least rank of a quotient acting faithfully on a part of this dimension.

    Four weights of a part acting through rank <= 2 would have every 3-subset
    summing to zero, which no 4 weights of the 27 do.  A 26-dim part misses
    one nonzero weight; its 26 weights sum to minus that weight, hence span
    the whole lattice, giving rank 6.
    """
    if part_dim > 27 or part_dim < 1:
        raise ValueError("part dimension must be between 1 and 27")
    if part_dim == 26:
        return 6
    if part_dim >= 4:
        return 3
    return 0


def rank_floor_witnesses(sigma: Optional[e6weights.WeightSet27] = None) -> Dict[str, bool]:
    """The weight facts backing :func:`rank_floor`, recomputed."""
    sigma = sigma or e6weights.minuscule_weight_set()
    return {
        "four_subset_check": e6weights.four_subset_check(sigma.weights),
        "weights_sum_to_zero": all(x == 0 for x in sigma.total()),
        "no_zero_weight": all(any(lam) for lam in sigma.weights),
    }


@lru_cache(maxsize=None)
def _floor_facts() -> Dict[str, bool]:
    return rank_floor_witnesses()


def records_of_dim(scan: Sequence[IrrepRecord], d: int) -> List[Record]:
    return list(faithful_simple(scan, d)) + list(composites(scan, d))


def _rank_ok(rank: int, floor: int, torus_cap: int) -> Optional[int]:
    """A torus rank making ``floor <= rank + t <= 6`` feasible, else None.

    On an irreducible part a torus commuting with the semisimple part acts
    by scalars, so at most one torus dimension acts faithfully however large
    the cap.
    """
    for t in range(min(torus_cap, 1) + 1):
        if floor <= rank + t <= RANK_CAP:
            return t
    return None


def exclude(
    candidate: SplitCandidate,
    scan: Sequence[IrrepRecord],
    torus_cap: int = DEFAULT_TORUS_CAP,
    max_dim: int = 27,
) -> ExclusionCertificate:
    if max_dim < 27 or not scan:
        raise ScanIncomplete("exclusion needs the irrep scan up to dimension 27")
    cert = ExclusionCertificate(candidate)
    if len(candidate.parts) == 1:
        cert.steps.append(Step("irreducible", "single-part candidate", "nothing to exclude"))
    excluded = False
    for idx, part in enumerate(candidate.parts):
        if part.dim == 1:
            cert.survivors[idx] = ["torus"]
            continue
        floor = rank_floor(part.dim)
        facts = _floor_facts()
        if floor == 6:
            backing = f"weights_sum_to_zero={facts['weights_sum_to_zero']}, no_zero_weight={facts['no_zero_weight']}"
        elif floor == 3:
            backing = f"four_subset_check={facts['four_subset_check']}"
        else:
            backing = "no constraint below dimension 4"
        cert.steps.append(Step("rank-floor", f"dim {part.dim} forces rank >= {floor}", backing))
        alive = []
        for rec in records_of_dim(scan, part.dim):
            if isinstance(rec, CompositeRecord):
                top = max_jordan_for_factorization([f.dim for f in rec.factors])
                if top < part.blocks[0]:
                    cert.steps.append(
                        Step(
                            "tensor-indecomposable",
                            "Jordan blocks of a tensor product",
                            f"part {part.dim}: {rec.name} {[f.dim for f in rec.factors]} has blocks <= {top} < {part.blocks[0]}",
                        )
                    )
                    continue
            t = _rank_ok(rec.rank, floor, torus_cap)
            if t is None:
                cert.steps.append(
                    Step(
                        "rank",
                        f"rank floor {floor} for dim {part.dim}, rank cap {RANK_CAP}, torus <= {min(torus_cap, 1)}",
                        f"part {part.dim}: {rec.name} rank {rec.rank} ({rec.describe()})",
                    )
                )
                continue
            alive.append(f"{rec.name}+t{t}" if t else rec.name)
        cert.survivors[idx] = alive
        if not alive:
            excluded = True
            cert.steps.append(Step("no-survivor", f"part {part.dim}", "every scan record of this dimension fails"))
    cert.verdict = "excluded" if excluded else "survives"
    return cert


STEP_KINDS = ("irreducible", "rank-floor", "tensor-indecomposable", "rank", "no-survivor", "shared-part")


def exclude_all(scan: Sequence[IrrepRecord], torus_cap: int = DEFAULT_TORUS_CAP) -> List[ExclusionCertificate]:
    """Certificates for every candidate; parts already decided are cross-referenced."""
    certs = [exclude(c, scan, torus_cap) for c in candidate_splits()]
    seen: Dict[Part, str] = {}
    for cert in certs:
        label = "+".join(str(d) for d in cert.candidate.dims)
        for idx, part in enumerate(cert.candidate.parts):
            if part.dim == 1:
                continue
            if part in seen:
                cert.steps.append(
                    Step("shared-part", f"part {part.dim} with blocks {list(part.blocks)}", f"same record set as in {seen[part]}: {cert.survivors[idx]}")
                )
            else:
                seen[part] = label
    return certs


def verdicts(certs: Iterable[ExclusionCertificate]) -> Dict[Tuple[int, ...], str]:
    return {c.candidate.dims: c.verdict for c in certs}


def torus_cap_stability(scan: Sequence[IrrepRecord], caps: Iterable[int] = range(4)) -> Dict[int, Dict[Tuple[int, ...], str]]:
    return {k: verdicts(exclude_all(scan, k)) for k in caps}
