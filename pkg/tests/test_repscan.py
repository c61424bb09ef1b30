from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minuscule import repscan as rp
from minuscule.rootsystems import build_root_system, e6, fundamental_weight


@given(st.integers(0, 40))
def test_sl2_dims(k):
    assert rp.weyl_dim(build_root_system("A", 1), (k,)) == k + 1


@given(st.integers(0, 12), st.integers(0, 12))
def test_sl3_dims(a, b):
    assert rp.weyl_dim(build_root_system("A", 2), (a, b)) == (a + 1) * (b + 1) * (a + b + 2) // 2


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_sln_exterior_powers(n):
    rs = build_root_system("A", n - 1)
    for k in range(1, n):
        assert rp.weyl_dim(rs, fundamental_weight(n - 1, k - 1)) == comb(n, k)


def test_weyl_dim_matches_orbit_size_for_minuscule():
    rs = e6()
    mu = fundamental_weight(6, 0)
    assert rp.weyl_dim(rs, mu) == len(rs.weyl_orbit(mu)) == 27


def test_table(scan27):
    assert sorted(rp.table_rows(scan27, 17, False)) == sorted([("sl2", 17, 1), ("so17", 17, 8), ("sl17", 17, 16)])
    rows18 = {r[0] for r in rp.table_rows(scan27, 18, False)}
    assert rows18 == {"sl2", "so18", "sp18", "sl18"}
    rows26 = {r[0] for r in rp.table_rows(scan27, 26, True)}
    assert {"f4", "so13xsl2", "sl13xsl2", "so26", "sp26", "sl26", "sl2"} <= rows26
    # 26 = 13 * 2 also arises from sl2 x sl2 acting on S^12 (x) S^1
    assert "sl2xsl2" in rows26


def test_canonical_representative_dual_pairs():
    rs = e6()
    assert rp.canonical_representative(rs, (0, 0, 0, 0, 0, 1)) == rp.canonical_representative(rs, (1, 0, 0, 0, 0, 0))


def test_sentinels_empty():
    assert rp.sentinel_hits(27) == []


def test_scan_bounds():
    with pytest.raises(rp.ScanError):
        rp.scan_irreps(0)
    with pytest.raises(rp.ScanError):
        rp.scan_irreps(28)


def test_principal_sl2():
    w = rp.principal_sl2_weights(e6(), fundamental_weight(6, 0))
    assert rp.sl2_string_decompose(w).blocks == (17, 9, 1)
    with pytest.raises(rp.UnsupportedInput):
        rp.principal_sl2_weights(e6(), e6().highest_root())


@pytest.mark.parametrize("m", range(1, 9))
def test_jordan_rule_against_matrices(m):
    for n in range(1, m + 1):
        assert rp.jordan_tensor(m, n) == rp.jordan_tensor_oracle(m, n)
        assert rp.jordan_tensor(m, n).blocks == tuple(range(m + n - 1, m - n, -2))


def test_max_jordan_for_18():
    for a in (2, 3, 6, 9):
        assert rp.max_jordan_in_tensor(a, 18 // a) <= 10 < 17
    assert rp.max_jordan_for_factorization([13, 2]) == 14


def test_jordan_type_of_nilpotent_block():
    for k in range(1, 7):
        assert rp.jordan_type_of_nilpotent(rp.nilpotent_jordan_block(k)).blocks == (k,)
