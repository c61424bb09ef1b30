"""Acceptance criteria 1-13, each under its runtime budget.

Every criterion evaluates all of its parts before asserting, so a failing
criterion reports exactly which parts disagree.  One PASS/FAIL line per
criterion is printed in the terminal summary.
"""

from __future__ import annotations

import gc
import json
import subprocess
import sys
import time
from contextlib import contextmanager
from typing import List

import pytest

import minuscule
from minuscule import cli, e6weights, euclidean, exclusion, permgroups, repscan, rootsystems, seedsearch
from minuscule.exactmath import QuadRat, inner
from minuscule.rootsystems import build_root_system, e6, fundamental_weight

RESULTS: List[str] = []


def _clear_caches() -> None:
    for mod in (rootsystems, e6weights, euclidean, repscan, exclusion, seedsearch, cli):
        for name in dir(mod):
            fn = getattr(mod, name)
            if callable(getattr(fn, "cache_clear", None)):
                fn.cache_clear()
    gc.collect()


class Criterion:
    def __init__(self, number: int, title: str, budget: float):
        self.number = number
        self.title = title
        self.budget = budget
        self.failures: List[str] = []

    def check(self, label: str, ok: bool, detail: object = "") -> None:
        if not ok:
            self.failures.append(f"{label}{': ' + str(detail) if detail != '' else ''}")


@contextmanager
def criterion(number: int, title: str, budget: float, cold: bool = True):
    if cold:
        _clear_caches()
    c = Criterion(number, title, budget)
    t0 = time.perf_counter()
    try:
        yield c
    except Exception as e:  # an exception is a failed criterion, not a crash of the suite
        c.failures.append(f"raised {type(e).__name__}: {e}")
    elapsed = time.perf_counter() - t0
    c.check(f"runtime {elapsed:.2f}s over budget {budget}s", elapsed < budget)
    verdict = "FAIL" if c.failures else "PASS"
    line = f"{verdict} criterion {number}: {title} ({elapsed:.2f}s / {budget}s)"
    if c.failures:
        line += " -- " + "; ".join(c.failures)
    RESULTS.append(line)
    print(line)
    assert not c.failures, line


def test_criterion_01_root_system():
    with criterion(1, "E6 roots, positive roots, Cartan determinant, Euclidean lengths", 1.0) as c:
        rs = e6()
        c.check("72 roots", len(rs.roots) == 72, len(rs.roots))
        c.check("36 positive", len(rs.positive_roots) == 36)
        c.check("det 3", rs.cartan_determinant() == 3)
        m = euclidean.euclidean_model_e6(rs)
        c.check("squared length 2", {inner(v, v) for v in m.root_vectors} == {QuadRat(2)})
        c.check("72 Euclidean roots", len(m.root_vectors) == 72)


def test_criterion_02_weyl_order():
    with criterion(2, "Weyl group closure on 72 roots has order 51840", 10.0) as c:
        w = e6weights.weyl_group_on_roots("E", 6)
        c.check("order", w.order == 51840 == 2**7 * 3**4 * 5, w.order)
        c.check("degree", w.degree == 72)


def test_criterion_03_minuscule_orbit():
    with criterion(3, "orbit of mu: 27 weights, multiplicity-free, sum 0, no zero, depth <= 2", 1.0) as c:
        rs = e6()
        mu = fundamental_weight(6, 0)
        sigma = e6weights.minuscule_weight_set()
        c.check("27 weights", len(sigma.weights) == 27)
        c.check("multiplicity-free", repscan.weyl_dim(rs, mu) == len(set(sigma.weights)) == 27)
        c.check("sum zero", sigma.total() == (0,) * 6)
        c.check("no zero weight", (0,) * 6 not in sigma.weights)
        depth = e6weights.reflection_depth(sigma, mu, rs)
        c.check("depth <= 2", depth.max_depth <= 2 and len(depth.depth) == 27, depth.layer_sizes())


def test_criterion_04_triples():
    with criterion(4, "45 zero-sum triples, span criterion agrees, explicit triple and reflection words", 2.0) as c:
        sigma = e6weights.minuscule_weight_set()
        rep = e6weights.zero_sum_triples(sigma)
        c.check("45 of 2925", (rep.count, rep.total_3subsets) == (45, 2925), (rep.count, rep.total_3subsets))
        c.check("span criterion agrees", rep.criteria_agree)
        m = euclidean.euclidean_model_e6()
        triple = frozenset(m.to_weight(v) for v in (euclidean.MU, euclidean.MU_PRIME, euclidean.MU_DOUBLE_PRIME))
        c.check("explicit triple among the 45", triple in {frozenset(t) for t in rep.triples})
        words = euclidean.check_triple_words(m)
        c.check("mu' = s_alpha s_beta mu", words["mu_prime"])
        c.check(
            "mu'' = s_gamma s_delta mu with the transcribed delta",
            words["mu_double_prime"],
            f"delta is a root: {words['delta_is_root']}; the unique root that works is {[str(x) for x in words['delta_candidates'][0]]}",
        )


def test_criterion_05_quadratic_space():
    with criterion(5, "Arf 1, triples isotropic, transitive on triples, stabilizer = |W(F4)| = 1152", 30.0) as c:
        sigma = e6weights.minuscule_weight_set()
        v = e6weights.f2_space(e6())
        c.check("Arf 1", v.arf() == 1 and v.arf_by_majority() == 1)
        rep = e6weights.triple_isotropy_and_transitivity(e6weights.zero_sum_triples(sigma), v, e6weights.weyl_group_on_weights(), sigma)
        f4 = e6weights.weyl_group_on_roots("F", 4)
        c.check("triples isotropic", rep.all_singular)
        c.check("transitive", rep.orbit_size == 45, rep.orbit_size)
        c.check("stabilizer 1152", rep.stabilizer_order == 1152 == f4.order, (rep.stabilizer_order, f4.order))
        c.check("same element-order profile as W(F4)", rep.stabilizer_order_profile == f4.element_order_profile())


def test_criterion_06_sylow():
    with criterion(6, "Sylow-3 of order 81 transitive on 27 weights, stabilizer 3-part 3, random suite", 30.0) as c:
        w = e6weights.weyl_group_on_weights()
        p = permgroups.sylow(w, 3)
        c.check("order 81", p.order == 81, p.order)
        c.check("transitive", p.is_transitive())
        c.check("stabilizer 3-part 3", permgroups.p_part(w.stabilizer(0).order, 3) == 3)
        passed, cases = permgroups.random_sylow_suite(50, seed=0)
        c.check("random suite", cases >= 50 and passed == cases, (passed, cases))


PUBLISHED = {
    17: {("sl2", 1), ("so17", 8), ("sl17", 16)},
    18: {("sl2", 1), ("sp18", 9), ("so18", 9), ("sl18", 17)},
    26: {("sl2", 1), ("f4", 4), ("so13xsl2", 7), ("sl13xsl2", 13), ("sp26", 13), ("so26", 13), ("sl26", 25)},
}


def test_criterion_07_irrep_table():
    with criterion(7, "irrep scan reproduces the small-representation table for d = 17, 18, 26 plus sanity values", 60.0) as c:
        scan = repscan.scan_irreps(27)
        for d in (17, 18, 26):
            got = {(n, r) for n, _, r in repscan.table_rows(scan, d, with_composites=(d == 26))}
            c.check(f"d = {d}", got == PUBLISHED[d], f"extra {sorted(got - PUBLISHED[d])}, missing {sorted(PUBLISHED[d] - got)}")
        e7 = build_root_system("E", 7)
        f4 = build_root_system("F", 4)
        g2 = build_root_system("G", 2)
        rs = e6()
        c.check("E6 {27, 78}", {repscan.weyl_dim(rs, fundamental_weight(6, 0)), repscan.weyl_dim(rs, rs.highest_root())} == {27, 78})
        c.check("E7 min 56", min(repscan.weyl_dim(e7, fundamental_weight(7, i)) for i in range(7)) == 56)
        c.check("F4 {26, 52}", sorted(repscan.weyl_dim(f4, fundamental_weight(4, i)) for i in range(4))[:2] == [26, 52])
        c.check("G2 {7, 14}", sorted(repscan.weyl_dim(g2, fundamental_weight(2, i)) for i in range(2)) == [7, 14])


def test_criterion_08_principal_sl2():
    with criterion(8, "principal sl2 strings on the 27 have lengths [17, 9, 1]", 1.0) as c:
        w = repscan.principal_sl2_weights(e6(), fundamental_weight(6, 0))
        blocks = repscan.sl2_string_decompose(w).blocks
        c.check("blocks", list(blocks) == [17, 9, 1], blocks)


def test_criterion_09_jordan():
    with criterion(9, "Jordan tensor rule matches nilpotent oracle for n <= m <= 8; 18 = a*b gives blocks < 17", 5.0) as c:
        for m in range(1, 9):
            for n in range(1, m + 1):
                c.check(f"{m} x {n}", repscan.jordan_tensor(m, n) == repscan.jordan_tensor_oracle(m, n))
        for a in range(2, 10):
            if 18 % a == 0:
                top = repscan.max_jordan_in_tensor(a, 18 // a)
                c.check(f"18 = {a}*{18 // a}", top <= 10 < 17, top)


@pytest.fixture(scope="module")
def scan_for_exclusion():
    return repscan.scan_irreps(27)


def test_criterion_10_exclusion(scan_for_exclusion):
    with criterion(10, "candidates {27},{26,1},{18,9},{17,10},{17,9,1}; nontrivial ones excluded with cited steps; stable for torus caps 0-3", 5.0, cold=False) as c:
        scan = scan_for_exclusion
        cands = [x.dims for x in exclusion.candidate_splits()]
        c.check("candidates", cands == [(27,), (26, 1), (18, 9), (17, 10), (17, 9, 1)], cands)
        certs = exclusion.exclude_all(scan)
        for cert in certs:
            want = "survives" if len(cert.candidate.parts) == 1 else "excluded"
            c.check(f"verdict {cert.candidate.dims}", cert.verdict == want, cert.verdict)
            c.check(f"cited {cert.candidate.dims}", bool(cert.steps) and all(s.constraint in exclusion.STEP_KINDS and s.witness for s in cert.steps))
        stab = exclusion.torus_cap_stability(scan, range(4))
        c.check("torus-cap stability", len({tuple(sorted(v.items())) for v in stab.values()}) == 1)


def test_criterion_11_involutions():
    with criterion(11, "torus sign-character traces on the 27 avoid +1 and -1", 1.0) as c:
        traces = e6weights.involution_traces()
        c.check("64 characters", len(traces) == 64)
        c.check("no +-1", not set(traces.values()) & {1, -1}, sorted(set(traces.values())))


def test_criterion_12_seed_search():
    with criterion(12, "seed search: exponents, heights [1, 11], torus points, prime pairs, assumptions", 30.0) as c:
        n = seedsearch.find_distinct_exponents(4)
        c.check("distinct exponents", seedsearch.all_distinct(seedsearch.ht_weight_set(n).values))
        c.check("Borel compatible", seedsearch.check_borel_compatibility(n)[0])
        ones = seedsearch.root_exponent_bounds(seedsearch.ExponentAssignment((1,) * 6))
        c.check("heights [1, 11]", (ones.min_exponent, ones.max_exponent) == (1, 11))
        for l in (q for q in range(2, 24) if seedsearch.is_prime(q)):
            try:
                seedsearch.find_torus_point(l, seedsearch.find_prime_pair(l), exhaustive=l > 12)
                c.check(f"l = {l} fails", False)
            except seedsearch.TorusPointError:
                pass
        p29 = seedsearch.find_prime_pair(29)
        c.check("find_prime_pair(29) = 59", p29 == 59, p29)
        try:
            seedsearch.find_torus_point(29, p29)
            ok29 = True
        except seedsearch.TorusPointError as e:
            ok29 = False
            msg = str(e)
        l, p, pt = seedsearch.first_workable_l()
        c.check("succeeds at l = 29", ok29, f"{msg}; first workable prime is l = {l} (p = {p})" if not ok29 else "")
        c.check("first workable point separates", seedsearch.all_distinct(pt.weight_values()))
        for a, b in ((29, p29), (l, p)):
            c.check(f"constraints ({a}, {b})", a > 12 and b > 56 and (b - 1) % a == 0 and (b - 1) % (a * a) != 0)
        rep = cli.run("seedsearch")
        unchecked = [x for x in rep if x.verdict == cli.UNCHECKED]
        c.check("splitting conditions stamped unchecked", len(unchecked) == len(seedsearch.UNCHECKED_ASSUMPTIONS) == 2)


def _verify_all():
    out = subprocess.run([sys.executable, "-m", "minuscule.cli", "verify", "all", "--format", "json"], capture_output=True, text=True, timeout=180)
    rep = json.loads(out.stdout)
    rep.pop("timestamp")
    return out.stdout, rep


def test_criterion_13_determinism():
    with criterion(13, "two 'verify all' runs give identical reports modulo timestamp", 360.0, cold=False) as c:
        t0 = time.perf_counter()
        raw1, a = _verify_all()
        t1 = time.perf_counter() - t0
        raw2, b = _verify_all()
        t2 = time.perf_counter() - t0 - t1
        c.check("identical", a == b)
        strip = lambda raw: "\n".join(x for x in raw.splitlines() if '"timestamp"' not in x)
        c.check("byte-identical modulo timestamp", strip(raw1) == strip(raw2))
        c.check("each run < 3 min", t1 < 180 and t2 < 180, (round(t1, 1), round(t2, 1)))
        c.check("version", a["version"] == minuscule.__version__)
