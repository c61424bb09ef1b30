"""Command-line runner: ``minuscule verify <suite>``.

Each check produces a certificate pairing a stated claim with the value the
engine computed.  The run exits 0 iff no certificate fails; checks whose
inputs are outside the engine's reach are reported as
``assumption-unchecked`` and do not fail the run.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from random import Random
from typing import Callable, Dict, List, Optional, Sequence

from . import __version__, e6weights, euclidean, exclusion, permgroups, repscan, seedsearch
from .exactmath import QuadRat, det, inner
from .rootsystems import build_root_system, e6, fundamental_weight

SUITES = ("roots", "weyl", "weights", "quadspace", "irreps", "sl2", "exclusion", "seedsearch")
PASS, FAIL, UNCHECKED = "pass", "fail", "assumption-unchecked"

# small faithful irreps of simple (and, for d = 26, two-factor) algebras as
# (algebra, dimension, rank) rows
EXPECTED_TABLE = {
    17: [("sl2", 17, 1), ("so17", 17, 8), ("sl17", 17, 16)],
    26: [
        ("sl2", 26, 1),
        ("f4", 26, 4),
        ("so13xsl2", 26, 7),
        ("sl13xsl2", 26, 13),
        ("sp26", 26, 13),
        ("so26", 26, 13),
        ("sl26", 26, 25),
    ],
    18: [("sl2", 18, 1), ("sp18", 18, 9), ("so18", 18, 9), ("sl18", 18, 17)],
}


def encode(x) -> str:
    """Canonical string form of an exact value."""
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return "none"
    if isinstance(x, (int, Fraction, QuadRat)):
        return str(x)
    if isinstance(x, dict):
        return "{" + ", ".join(f"{encode(k)}: {encode(v)}" for k, v in sorted(x.items(), key=lambda kv: encode(kv[0]))) + "}"
    if isinstance(x, (set, frozenset)):
        return "{" + ", ".join(sorted(encode(v) for v in x)) + "}"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(encode(v) for v in x) + "]"
    raise TypeError(f"cannot encode {type(x).__name__}")


@dataclass
class Certificate:
    check_id: str
    paper_ref: str
    expected: str
    computed: str
    verdict: str
    elapsed_ms: Optional[int] = None

    def as_dict(self, timings: bool) -> Dict[str, str]:
        out = {
            "check_id": self.check_id,
            "paper_ref": self.paper_ref,
            "expected": self.expected,
            "computed": self.computed,
            "verdict": self.verdict,
        }
        if timings and self.elapsed_ms is not None:
            out["elapsed_ms"] = str(self.elapsed_ms)
        return out


@dataclass
class Options:
    max_dim: int = 27
    cap: int = 4
    seed_l: Optional[int] = None
    seed_p: Optional[int] = None


class Collector:
    def __init__(self) -> None:
        self.certs: List[Certificate] = []
        self._t = time.perf_counter()

    def _elapsed(self) -> int:
        now = time.perf_counter()
        ms = int((now - self._t) * 1000)
        self._t = now
        return ms

    def check(self, check_id: str, ref: str, expected, computed, verdict: Optional[str] = None) -> None:
        if verdict is None:
            verdict = PASS if expected == computed else FAIL
        self.certs.append(Certificate(check_id, ref, encode(expected), encode(computed), verdict, self._elapsed()))

    def unchecked(self, check_id: str, ref: str, statement: str) -> None:
        self.certs.append(Certificate(check_id, ref, statement, "not computed", UNCHECKED, self._elapsed()))


# --- cached inputs -------------------------------------------------------------


@lru_cache(maxsize=None)
def _scan(max_dim: int):
    threads = int(os.environ.get("MINUSCULE_THREADS", "1") or 1)
    return tuple(repscan.scan_irreps(max_dim, threads=threads))


@lru_cache(maxsize=None)
def _triples():
    return e6weights.zero_sum_triples(e6weights.minuscule_weight_set())


@lru_cache(maxsize=None)
def _model():
    return euclidean.euclidean_model_e6()


# --- suites ----------------------------------------------------------------------


def suite_roots(c: Collector, opts: Options) -> None:
    rs = e6()
    c.check("roots.count", "E6 root system has 72 roots", 72, len(rs.roots))
    c.check("roots.positive", "36 positive roots", 36, len(rs.positive_roots))
    c.check("roots.cartan_det", "root lattice has discriminant 3", 3, rs.cartan_determinant())
    c.check("roots.coxeter", "Coxeter number 12 (height of highest root + 1)", 12, rs.height(rs.highest_root()) + 1)
    c.check("roots.opposition", "-w0 is the diagram involution 1<->6, 3<->5", (5, 1, 4, 3, 2, 0), rs.longest_element().opposition)
    c.check("roots.w0_length", "longest element has length |Phi+|", 36, len(rs.longest_element().word))
    m = _model()
    c.check("roots.euclid_count", "explicit R^6 model has 72 roots", 72, len(m.root_vectors))
    c.check("roots.euclid_lengths", "explicit R^6 roots all have squared length 2", {QuadRat(2)}, {inner(v, v) for v in m.root_vectors})
    c.check("roots.euclid_scale", "explicit model matches the Cartan construction with scale 1", 1, m.scale)
    c.check("roots.euclid_rho", "rho = (4 sqrt3, 4, 3, 2, 1, 0)", rs.rho(), m.to_weight(euclidean.RHO))
    c.check("roots.euclid_mu", "mu = (2 sqrt3 / 3, 0, ..., 0) is the minuscule fundamental weight", fundamental_weight(6, 0), m.to_weight(euclidean.MU))


def suite_weyl(c: Collector, opts: Options) -> None:
    w = e6weights.weyl_group_on_roots("E", 6)
    c.check("weyl.order", "|W(E6)| = 2^7 * 3^4 * 5", 2**7 * 3**4 * 5, w.order)
    wt = e6weights.weyl_group_on_weights()
    c.check("weyl.order_on_weights", "W(E6) acts faithfully on the 27 weights", w.order, wt.order)
    f4 = e6weights.weyl_group_on_roots("F", 4)
    c.check("weyl.f4_order", "|W(F4)| = 1152 by closure on 48 roots", 1152, f4.order)
    stab = wt.stabilizer(0)
    c.check("weyl.weight_orbit", "W-orbit of a weight has size 27", 27, len(wt.orbit(0)))
    c.check("weyl.weight_stabilizer", "weight stabilizer has order 51840 / 27", 51840 // 27, stab.order)
    p = permgroups.sylow(wt, 3)
    c.check("sylow.order", "Sylow 3-subgroup of W(E6) has order 3^4", 81, p.order)
    c.check("sylow.transitive", "a Sylow 3-subgroup acts transitively on the 27 weights", True, p.is_transitive())
    c.check("sylow.stabilizer_3part", "3-part of a weight stabilizer has order 3", 3, permgroups.p_part(stab.order, 3))
    c.check("sylow.order5", "Sylow 5-subgroup has order 5", 5, permgroups.sylow(wt, 5).order)
    c.check("sylow.check_e6", "transitivity agrees for W(E6) and its Sylow 3-subgroup", True, permgroups.sylow_transitivity_check(wt, 3))
    c.check("sylow.random_suite", "Sylow transitivity agrees on 50 random subgroups of S9", (50, 50), permgroups.random_sylow_suite(50, seed=0))


def suite_weights(c: Collector, opts: Options) -> None:
    rs = e6()
    sigma = e6weights.minuscule_weight_set()
    mu = fundamental_weight(6, 0)
    c.check("weights.count", "27 weights", 27, len(sigma.weights))
    c.check("weights.sum", "the 27 weights sum to zero", (0,) * 6, sigma.total())
    c.check("weights.no_zero", "no weight is zero", False, (0,) * 6 in sigma.weights)
    depth = e6weights.reflection_depth(sigma, mu)
    c.check("weights.depth", "every weight is within 2 root reflections of mu", 2, depth.max_depth)
    moved = sum(1 for b in rs.positive_roots if rs.pair(mu, b) != 0)
    c.check("weights.depth_one", "weights at depth 1 = positive roots not orthogonal to mu", moved, depth.layer_sizes()[1])
    c.check("weights.dim", "Weyl dimension of the minuscule weight", 27, repscan.weyl_dim(rs, mu))

    tr = _triples()
    c.check("triples.count", "exactly 45 zero-sum triples", 45, tr.count)
    c.check("triples.total", "C(27, 3) = 2925 triples scanned", 2925, tr.total_3subsets)
    c.check("triples.span_criterion", "triples spanning a plane are exactly the zero-sum ones", True, tr.criteria_agree)
    m = _model()
    explicit = frozenset(m.to_weight(v) for v in (euclidean.MU, euclidean.MU_PRIME, euclidean.MU_DOUBLE_PRIME))
    c.check("triples.explicit_member", "the explicit triple (mu, mu', mu'') is zero-sum", True, explicit in {frozenset(t) for t in tr.triples})
    words = euclidean.check_triple_words(m)
    c.check("triples.words.mu_prime", "mu' = s_alpha s_beta mu for the explicit alpha, beta", True, words["mu_prime"])
    c.check("triples.words.mu_double_prime", "mu'' = s_gamma s_delta mu for the explicit gamma, delta", True, words["mu_double_prime"])
    c.check("triples.words.delta_is_root", "the explicit delta is a root", True, words["delta_is_root"])
    c.check("triples.words.delta_repair", "exactly one root y has s_gamma s_y mu = mu''", 1, len(words["delta_candidates"]))
    c.check("triples.explicit_zero_sum", "mu + mu' + mu'' = 0 in the explicit model", True, words["zero_sum"])

    c.check("fours.check", "no 4 weights have all four 3-subsets zero-sum", True, e6weights.four_subset_check(sigma.weights))
    c.check("fours.self_test", "the 4-subset detector fires on four zero vectors", False, e6weights.four_subset_check([(0, 0)] * 4))
    c.check("fours.with_triple", "4-subsets containing a zero-sum triple = 45 * 24", 45 * 24, e6weights.count_four_subsets_with_triple(sigma.weights))

    traces = set(e6weights.involution_traces(sigma).values())
    c.check("involutions.no_unit_trace", "no torus involution has trace +1 or -1 on the 27", True, not traces & {1, -1})
    c.check("involutions.traces", "trace set over the 64 torus involutions", {27, 3, -5}, traces)
    c.check("split_cartan.dim", "fixed space of a split Cartan involution has dimension 36", 36, e6weights.split_cartan_dimension())
    c.check("split_cartan.dim_g", "dim e6 = 6 + 2 * 36", 78, rs.rank + 2 * e6weights.split_cartan_dimension())


def suite_quadspace(c: Collector, opts: Options) -> None:
    sigma = e6weights.minuscule_weight_set()
    rs = e6()
    v = e6weights.f2_space(rs)
    c.check("quad.form", "3 (omega_i, omega_j) is even with odd determinant 3^6 / 3", (True, 243), (all(v.form[i][i] % 2 == 0 for i in range(6)), det(v.form)))
    c.check("quad.arf", "Arf invariant of (Lambda / 2 Lambda, q) is 1", 1, v.arf())
    c.check("quad.arf_majority", "majority value of q agrees with the Arf invariant", 1, v.arf_by_majority())
    c.check("quad.arf_random_bases", "Arf invariant from 10 random symplectic bases", [1] * 10, [v.arf(Random(i)) for i in range(10)])
    c.check("quad.nondegenerate", "b is nondegenerate", True, v.is_nondegenerate())
    c.check("quad.refinement", "q(x+y) + q(x) + q(y) = b(x, y) on all 4096 pairs", True, e6weights.is_quadratic_refinement(v))
    c.check("quad.injective", "the 27 weights inject into Lambda / 2 Lambda", 27, len({v.reduce(x) for x in sigma.weights}))
    c.check("quad.q_weights", "q vanishes on every weight", {0}, {v.q(v.reduce(x)) for x in sigma.weights})
    c.check("quad.q_roots", "q is 1 on every root", {1}, {v.q(v.reduce(x)) for x in rs.roots})
    c.check("quad.no_singular_3space", "maximal totally singular subspaces have dimension 2", (True, False), (v.singular_subspace_exists(2), v.singular_subspace_exists(3)))
    rep = e6weights.triple_isotropy_and_transitivity(_triples(), v, e6weights.weyl_group_on_weights(), sigma)
    c.check("quad.triples_isotropic", "each triple spans a totally singular plane", True, rep.all_singular)
    c.check("quad.triple_orbit", "W(E6) is transitive on the 45 triples", 45, rep.orbit_size)
    c.check("quad.triple_stabilizer", "setwise stabilizer of a triple has order |W(F4)| = 1152", e6weights.weyl_group_on_roots("F", 4).order, rep.stabilizer_order)
    c.check("quad.stabilizer_profile", "stabilizer and W(F4) have the same element-order profile", e6weights.weyl_group_on_roots("F", 4).element_order_profile(), rep.stabilizer_order_profile)


def _rows(rows) -> List[str]:
    return [f"{n}:{d}:{r}" for n, d, r in sorted(rows, key=lambda x: (x[2], x[0]))]


def suite_irreps(c: Collector, opts: Options) -> None:
    scan = _scan(opts.max_dim)
    for d in (17, 18, 26):
        expected = _rows(EXPECTED_TABLE[d])
        computed = _rows(repscan.table_rows(scan, d, with_composites=(d == 26)))
        c.check(f"irreps.table.d{d}", f"small irreps of dimension {d}", expected, computed)
    simple26 = [row for row in EXPECTED_TABLE[26] if "x" not in row[0]]
    c.check("irreps.table.d26.simple", "simple algebras with a 26-dim irrep", _rows(simple26), _rows(repscan.table_rows(scan, 26, False)))
    c.check("irreps.sentinels", "no irreps of dim <= 27 one rank above each classical bound", [], [r.describe() for r in repscan.sentinel_hits(opts.max_dim)])
    e6_ = e6()
    c.check("irreps.sanity.e6", "e6 has irreps of dimension 27 and 78", (27, 78), (repscan.weyl_dim(e6_, fundamental_weight(6, 0)), repscan.weyl_dim(e6_, fundamental_weight(6, 1))))
    e7 = build_root_system("E", 7)
    c.check("irreps.sanity.e7_min", "smallest nontrivial e7 irrep has dimension 56", 56, min(repscan.weyl_dim(e7, fundamental_weight(7, i)) for i in range(7)))
    f4 = build_root_system("F", 4)
    c.check("irreps.sanity.f4", "f4 has irreps of dimension 26 and 52", (26, 52), tuple(sorted(repscan.weyl_dim(f4, fundamental_weight(4, i)) for i in range(4))[:2]))
    g2 = build_root_system("G", 2)
    c.check("irreps.sanity.g2", "g2 fundamental irreps have dimensions 7 and 14", (7, 14), tuple(sorted(repscan.weyl_dim(g2, fundamental_weight(2, i)) for i in range(2))))
    e8 = build_root_system("E", 8)
    c.check("irreps.sanity.e8", "e8 adjoint has dimension 248", 248, repscan.weyl_dim(e8, e8.highest_root()))


def suite_sl2(c: Collector, opts: Options) -> None:
    rs = e6()
    w = repscan.principal_sl2_weights(rs, fundamental_weight(6, 0))
    c.check("sl2.principal_blocks", "principal sl2 decomposes the 27 as S^16 + S^8 + S^0", (17, 9, 1), repscan.sl2_string_decompose(w).blocks)
    c.check("sl2.top_weight", "top principal weight <mu, 2 rho^vee> = 16", 16, max(w))
    bad = [(m, n) for m in range(1, 9) for n in range(1, m + 1) if repscan.jordan_tensor(m, n) != repscan.jordan_tensor_oracle(m, n)]
    c.check("sl2.jordan_oracle", "Clebsch-Gordan block rule matches nilpotent matrices for n <= m <= 8", [], bad)
    facts = {(a, 18 // a): repscan.max_jordan_in_tensor(a, 18 // a) for a in range(2, 10) if 18 % a == 0}
    c.check("sl2.tensor_18", "every factorization 18 = a * b has blocks of size < 17", True, all(x < 17 for x in facts.values()))
    c.check("sl2.tensor_18_values", "largest tensor block for 18 = a * b", {(2, 9): 10, (3, 6): 8, (6, 3): 8, (9, 2): 10}, facts)
    cross = all(
        repscan.sl2_string_decompose([i + j for i in range(a, -a - 1, -2) for j in range(b, -b - 1, -2)]) == repscan.jordan_tensor(a + 1, b + 1)
        for a in range(11)
        for b in range(11)
    )
    c.check("sl2.cross_module", "string peeling of S^a (x) S^b matches the block rule for a, b <= 10", True, cross)


def suite_exclusion(c: Collector, opts: Options) -> None:
    scan = _scan(27)
    c.unchecked("exclusion.assumptions", "monodromy hypotheses", "component group, rank and formal character are constant in the compatible system")
    cands = exclusion.candidate_splits()
    c.check("exclusion.candidates", "27 = 26+1 = 18+9 = 17+10 = 17+9+1", [(27,), (26, 1), (18, 9), (17, 10), (17, 9, 1)], [x.dims for x in cands])
    facts = exclusion.rank_floor_witnesses()
    c.check("exclusion.floor_facts", "weight facts behind the rank floors", {"four_subset_check": True, "no_zero_weight": True, "weights_sum_to_zero": True}, facts)
    for cert in exclusion.exclude_all(scan):
        key = "+".join(str(d) for d in cert.candidate.dims)
        expected = "survives" if len(cert.candidate.parts) == 1 else "excluded"
        c.check(f"exclusion.verdict.{key}", f"decomposition {key}", expected, cert.verdict)
        cited = bool(cert.steps) and all(st.constraint in exclusion.STEP_KINDS and st.witness for st in cert.steps)
        c.check(
            f"exclusion.steps.{key}",
            f"every step for {key} cites a weight fact or scan record",
            "cited steps",
            [f"{st.constraint}: {st.reference}: {st.witness}" for st in cert.steps],
            PASS if cited else FAIL,
        )
        empty = any(not v for v in cert.survivors.values())
        c.check(f"exclusion.survivors.{key}", f"some part of {key} has no surviving record", expected == "excluded", empty)
        c.certs[-1].computed = encode({cert.candidate.parts[i].dim: v for i, v in cert.survivors.items()})
    stab = exclusion.torus_cap_stability(scan)
    c.check("exclusion.torus_stability", "verdicts identical for torus caps 0-3", True, len({tuple(sorted(v.items())) for v in stab.values()}) == 1)


def suite_seedsearch(c: Collector, opts: Options) -> None:
    rs = e6()
    n = seedsearch.find_distinct_exponents(opts.cap)
    h = seedsearch.ht_weight_set(n)
    c.check("seed.exponents.distinct", "an assignment with 27 distinct weight values exists", 27, len(set(h.h.values())))
    c.check("seed.exponents.witness", "canonical distinct-value assignment (slopes; coroot coefficients)", True, n.is_integral, PASS if n.is_integral else FAIL)
    c.certs[-1].computed = encode({"slopes": n.slopes, "coroot_coeffs": n.coroot_coeffs, "values": h.values})
    c.check("seed.exponents.sum", "weight values sum to 0", 0, sum(h.values))
    mu = fundamental_weight(6, 0)
    c.check("seed.exponents.top", "largest value is at the highest weight", mu, h.ordering[0])
    ok, pairs = seedsearch.check_borel_compatibility(n)
    c.check("seed.borel", "the ordering by value refines the Borel ordering on weights", True, ok)
    c.check("seed.borel_pairs", "pairs (lam, lam + root) compared", 216, pairs)
    bounds = seedsearch.root_exponent_bounds(n)
    c.check("seed.l_bound", "least admissible l exceeds the Coxeter number 12", True, bounds.l is not None and bounds.l > 12)
    c.certs[-1].computed = encode({"l": bounds.l, "max_root_exponent": bounds.max_exponent})
    ones = seedsearch.root_exponent_bounds(seedsearch.ExponentAssignment((1,) * 6))
    c.check("seed.heights", "for slopes 1 the root exponents are the heights 1..11", (1, 11), (ones.min_exponent, ones.max_exponent))
    c.check("seed.heights_exact", "slopes 1: exponent of each root equals its height", True, all(ones.exponents[b] == rs.height(b) for b in rs.positive_roots))

    small = {}
    for l in (q for q in range(2, 24) if seedsearch.is_prime(q)):
        try:
            seedsearch.find_torus_point(l, seedsearch.find_prime_pair(l), exhaustive=l > 12)
            small[l] = "found"
        except seedsearch.TorusPointError:
            small[l] = "none"
    c.check("seed.torus.small_l", "no separating torus point for primes l <= 23", {l: "none" for l in small}, small)
    p29 = seedsearch.find_prime_pair(29)
    c.check("seed.prime_pair.29", "least p > 56 with 29 || p - 1", 59, p29)
    try:
        seedsearch.find_torus_point(29, p29)
        at29 = "found"
    except seedsearch.TorusPointError:
        at29 = "none (exhaustive)"
    c.check("seed.torus.l29", "a separating torus point of order 29 exists", "found", at29)
    l, p, pt = seedsearch.first_workable_l()
    ok_pt = seedsearch.all_distinct(pt.weight_values()) and seedsearch.all_distinct(pt.weight_residues())
    c.check("seed.torus.first_workable", "some prime l admits a torus point with 27 distinct weight values", True, ok_pt)
    c.certs[-1].computed = encode({"l": l, "p": p, "g": pt.g, "residues": pt.exponents, "distinct": ok_pt})
    pairs_checked = [(l, p), (29, p29)]
    if opts.seed_l is not None:
        sp = opts.seed_p if opts.seed_p is not None else seedsearch.find_prime_pair(opts.seed_l)
        try:
            pt2 = seedsearch.find_torus_point(opts.seed_l, sp)
            res = seedsearch.all_distinct(pt2.weight_values())
        except seedsearch.TorusPointError as e:
            res = f"error: {e}"
        c.check("seed.torus.override", f"torus point for l = {opts.seed_l}, p = {sp}", True, res)
        pairs_checked.append((opts.seed_l, sp))
    c.check(
        "seed.constraints",
        "every reported (l, p) has l > 12, p > 56, l || p - 1",
        True,
        all(a > 12 and b > 56 and (b - 1) % a == 0 and (b - 1) % (a * a) for a, b in pairs_checked),
    )
    for i, text in enumerate(seedsearch.UNCHECKED_ASSUMPTIONS):
        c.unchecked(f"seed.assumptions.{i}", "number-field splitting conditions", text)


SUITE_FUNCS: Dict[str, Callable[[Collector, Options], None]] = {
    "roots": suite_roots,
    "weyl": suite_weyl,
    "weights": suite_weights,
    "quadspace": suite_quadspace,
    "irreps": suite_irreps,
    "sl2": suite_sl2,
    "exclusion": suite_exclusion,
    "seedsearch": suite_seedsearch,
}


# --- report ----------------------------------------------------------------------


def run(selector: str, opts: Optional[Options] = None) -> List[Certificate]:
    opts = opts or Options()
    if selector != "all" and selector not in SUITE_FUNCS:
        raise ValueError(f"unknown suite {selector!r}")
    names = SUITES if selector == "all" else (selector,)
    threads = int(os.environ.get("MINUSCULE_THREADS", "1") or 1)

    def one(name: str) -> List[Certificate]:
        col = Collector()
        SUITE_FUNCS[name](col, opts)
        return col.certs

    if threads > 1 and len(names) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(one, names))
    else:
        parts = [one(n) for n in names]
    certs = [x for part in parts for x in part]
    ids = [x.check_id for x in certs]
    if len(ids) != len(set(ids)):
        raise RuntimeError("duplicate check ids")
    return sorted(certs, key=lambda x: x.check_id)


def summarize(certs: Sequence[Certificate]) -> Dict[str, int]:
    return {
        "pass": sum(x.verdict == PASS for x in certs),
        "fail": sum(x.verdict == FAIL for x in certs),
        "assumptions": sum(x.verdict == UNCHECKED for x in certs),
    }


def build_report(certs: Sequence[Certificate], timings: bool = False, timestamp: Optional[str] = None) -> Dict:
    s = summarize(certs)
    return {
        "version": __version__,
        "timestamp": timestamp or datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
        "checks": [x.as_dict(timings) for x in certs],
        "summary": {k: str(v) for k, v in s.items()},
    }


def render_text(report: Dict) -> str:
    lines = []
    for ch in report["checks"]:
        tag = {"pass": "PASS", "fail": "FAIL", UNCHECKED: "ASSUME"}[ch["verdict"]]
        line = f"[{tag}] {ch['check_id']}: {ch['paper_ref']}"
        if ch["verdict"] == FAIL:
            line += f"\n       expected {ch['expected']}\n       computed {ch['computed']}"
        elif ch["verdict"] == UNCHECKED:
            line += f"\n       assumed: {ch['expected']}"
        elif ch["verdict"] == PASS:
            line += f" -> {ch['computed']}"
        if "elapsed_ms" in ch:
            line += f" ({ch['elapsed_ms']} ms)"
        lines.append(line)
    s = report["summary"]
    lines.append(f"{s['pass']} pass / {s['fail']} fail / {s['assumptions']} assumptions")
    return "\n".join(lines) + "\n"


def exit_status(summary: Dict[str, str]) -> int:
    return 0 if int(summary["fail"]) == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="minuscule", description="Exact checks on the minuscule representation of E6.")
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a suite of checks and print certificates")
    v.add_argument("suite", choices=("all",) + SUITES)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", help="write the report here instead of standard output")
    v.add_argument("--max-dim", type=int, default=27, help="irrep scan bound (default 27)")
    v.add_argument("--cap", type=int, default=4, help="slope cap for the exponent search (default 4)")
    v.add_argument("--seed-l", type=int, help="extra prime l for the torus-point search")
    v.add_argument("--seed-p", type=int, help="prime p to pair with --seed-l")
    v.add_argument("--timings", action="store_true", help="include elapsed_ms per certificate")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_dim < 1 or args.max_dim > 27:
        print("minuscule: --max-dim must be between 1 and 27", file=sys.stderr)
        return 2
    if args.cap < 1:
        print("minuscule: --cap must be positive", file=sys.stderr)
        return 2
    if args.seed_p is not None and args.seed_l is None:
        print("minuscule: --seed-p needs --seed-l", file=sys.stderr)
        return 2
    opts = Options(args.max_dim, args.cap, args.seed_l, args.seed_p)
    certs = run(args.suite, opts)
    report = build_report(certs, timings=args.timings)
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=False) + "\n"
    else:
        text = render_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"{report['summary']['pass']} pass / {report['summary']['fail']} fail / {report['summary']['assumptions']} assumptions")
    else:
        sys.stdout.write(text)
    return exit_status(report["summary"])


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
