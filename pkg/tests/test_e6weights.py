from __future__ import annotations

from itertools import combinations
from random import Random

import pytest

from minuscule import e6weights as ew
from minuscule.rootsystems import e6, fundamental_weight


@pytest.fixture(scope="module")
def sigma():
    return ew.minuscule_weight_set()


def test_weight_set(sigma):
    assert len(sigma.weights) == 27
    assert sigma.total() == (0,) * 6
    assert (0,) * 6 not in sigma.weights
    with pytest.raises(ValueError):
        ew.WeightSet27(((1, 0), (1, 0)))


def test_reflection_depth(sigma):
    rep = ew.reflection_depth(sigma, fundamental_weight(6, 0))
    assert rep.layer_sizes() == (1, 16, 10)
    assert rep.max_depth == 2
    rs = e6()
    moved = [b for b in rs.positive_roots if rs.pair(fundamental_weight(6, 0), b) != 0]
    assert len(moved) == 16


def test_triples_against_brute_force(sigma):
    rep = ew.zero_sum_triples(sigma)
    brute = [t for t in combinations(sigma.weights, 3) if all(sum(c) == 0 for c in zip(*t))]
    assert rep.count == len(brute) == 45
    assert rep.total_3subsets == 2925
    assert rep.criteria_agree
    # each weight lies in exactly 5 triples
    for lam in sigma.weights:
        assert sum(lam in t for t in rep.triples) == 5


def test_four_subsets(sigma):
    assert ew.four_subset_check(sigma.weights)
    assert not ew.four_subset_check([(0, 0)] * 4)
    assert ew.count_four_subsets_with_triple(sigma.weights) == 45 * 24


def _hyperbolic():
    return ew.F2QuadSpace(2, ((0, 1), (1, 0)))


def _anisotropic():
    return ew.F2QuadSpace(2, ((2, 1), (1, 2)))


def test_arf_small_planes():
    assert _hyperbolic().arf() == 0
    assert _hyperbolic().arf_by_majority() == 0
    assert _anisotropic().arf() == 1
    assert _anisotropic().arf_by_majority() == 1


def test_e6_quadratic_space(sigma):
    v = ew.f2_space(e6())
    assert v.is_nondegenerate()
    assert ew.is_quadratic_refinement(v)
    assert v.arf() == 1 == v.arf_by_majority()
    assert {v.arf(Random(s)) for s in range(5)} == {1}
    assert len({v.reduce(x) for x in sigma.weights}) == 27
    assert {v.q(v.reduce(x)) for x in sigma.weights} == {0}
    assert {v.q(v.reduce(b)) for b in e6().roots} == {1}
    assert v.singular_subspace_exists(2) and not v.singular_subspace_exists(3)


def test_arf_counts_singular_vectors():
    # Arf 1 in dimension 2m: 2^(2m-1) - 2^(m-1) singular vectors
    v = ew.f2_space(e6())
    zeros = sum(1 for x in v.vectors() if v.q(x) == 0)
    assert zeros == 2**5 - 2**2


def test_triple_symmetry(sigma):
    rep = ew.triple_isotropy_and_transitivity(ew.zero_sum_triples(sigma), ew.f2_space(e6()), ew.weyl_group_on_weights(), sigma)
    assert rep.all_singular
    assert rep.orbit_size == 45
    assert rep.stabilizer_order == 1152
    assert rep.stabilizer_order_profile == ew.weyl_group_on_roots("F", 4).element_order_profile()


def test_involution_traces(sigma):
    traces = ew.involution_traces(sigma)
    assert len(traces) == 64
    assert set(traces.values()) == {27, 3, -5}
    assert traces[(0,) * 6] == 27


def test_split_cartan():
    assert ew.split_cartan_dimension() == 36
