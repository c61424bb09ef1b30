from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest

from minuscule import euclidean
from minuscule.e6weights import weyl_group_on_roots
from minuscule.exactmath import SQRT3, QuadRat, eucvec, inner
from minuscule.rootsystems import RootSystemError, build_root_system, e6, fundamental_weight

ROOT_COUNTS = {("A", 1): 2, ("A", 4): 20, ("B", 3): 18, ("C", 3): 18, ("D", 4): 24, ("G", 2): 12, ("F", 4): 48, ("E", 6): 72, ("E", 7): 126}


@pytest.mark.parametrize("key,count", sorted(ROOT_COUNTS.items()))
def test_root_counts(key, count):
    rs = build_root_system(*key)
    assert len(rs.roots) == count
    assert len(rs.positive_roots) == count // 2


@pytest.mark.parametrize("t,n,order", [("A", 3, factorial(4)), ("B", 3, 48), ("G", 2, 12), ("D", 4, 192)])
def test_weyl_orders_by_closure(t, n, order):
    assert weyl_group_on_roots(t, n).order == order


@pytest.mark.parametrize("t,n", [("A", 0), ("B", 1), ("D", 3), ("E", 5), ("F", 3), ("X", 2)])
def test_invalid_types(t, n):
    with pytest.raises((RootSystemError, ValueError)):
        build_root_system(t, n)


def test_e6_basics():
    rs = e6()
    assert rs.cartan_determinant() == 3
    assert rs.height(rs.highest_root()) == 11
    w0 = rs.longest_element()
    assert len(w0.word) == 36
    assert w0.opposition == (5, 1, 4, 3, 2, 0)
    assert rs.rho() == (1,) * 6
    assert rs.rho_check() == (8, 11, 15, 21, 15, 8)


def test_pairings_integral_and_reflection_involutive():
    rs = e6()
    mu = fundamental_weight(6, 0)
    for b in rs.roots:
        assert rs.pair(b, b) == 2
        assert rs.reflect(rs.reflect(mu, b), b) == mu


def test_euclidean_model_matches():
    m = euclidean.euclidean_model_e6()
    assert len(m.root_vectors) == 72
    assert {inner(v, v) for v in m.root_vectors} == {QuadRat(2)}
    assert m.to_weight(euclidean.MU) == fundamental_weight(6, 0)
    assert m.to_weight(euclidean.RHO) == e6().rho()
    assert len(m.weight_vectors) == 27


def test_triple_words():
    words = euclidean.check_triple_words(euclidean.euclidean_model_e6())
    assert words["mu_prime"]
    assert words["zero_sum"]
    assert words["alpha_beta_gamma_are_roots"]
    # the transcribed delta has an odd number of minus signs, so it is not a root
    assert not words["delta_is_root"]
    assert not words["mu_double_prime"]
    (y,) = words["delta_candidates"]
    half = Fraction(1, 2)
    assert y == eucvec([half * SQRT3, half, half, half, -half, -half])
