"""Sum sides against frozen expansions, exact identity pairs, and the
catalog plumbing."""
import pytest

from qreflect.identities import (BuiltCheck, andrews_even, andrews_odd,
                                 bressoud79_sum, bressoud_finite,
                                 bressoud_reflected, cap43, cap43_rhs, cap71,
                                 cap71_reflected, cap71_reflected_rhs,
                                 cap71_rhs, cap_reflected_even,
                                 cap_reflected_even_rhs, cap_reflected_odd,
                                 cap_reflected_odd_rhs, capparelli_analytic,
                                 catalog, eqid, eqid_sweep, f_general,
                                 kr_finite, kr_finite_x, kr_infinite,
                                 kr_product, rogers_sum, rr_sum, s_recursion,
                                 schur_finite, BRESSOUD79_PRODUCTS,
                                 ROGERS_PRODUCTS, CAP_EVEN_LIMIT,
                                 CAP_ODD_LIMIT)
from qreflect.partition_oracle import GAP23, count_by_parts
from qreflect.qfactory import parse_product
from qreflect.series import agree_to_order, first_discrepancy


def coeffs(s):
    return {k: s.coefficient(k) for k in s.support()}


# small-index values of the five bounded sums, frozen from an
# independent dict-polynomial evaluation of the displayed summands
KR_SMALL = {
    (1, 0): {0: 1},
    (1, 1): {0: 1, 1: 1},
    (1, 2): {0: 1, 1: 1, 2: 1, 3: 1},
    (1, 3): {0: 1, 1: 1, 2: 1, 3: 2, 4: 1, 6: 1},
    (1, 4): {0: 1, 1: 1, 2: 1, 3: 2, 4: 2, 5: 1, 6: 2, 7: 1},
    (2, 0): {0: 1},
    (2, 1): {0: 1},
    (2, 2): {0: 1, 2: 1},
    (2, 3): {0: 1, 2: 1, 3: 1, 6: 1},
    (2, 4): {0: 1, 2: 1, 3: 1, 4: 1, 6: 2},
    (3, 0): {0: 1},
    (3, 1): {0: 1},
    (3, 2): {0: 1},
    (3, 3): {0: 1, 3: 1, 6: 1},
    (3, 4): {0: 1, 3: 1, 4: 1, 6: 1},
    (4, 0): {0: 1},
    (4, 1): {0: 1},
    (4, 2): {0: 1, 2: 1},
    (4, 3): {0: 1, 2: 1, 3: 1, 5: 1},
    (4, 4): {0: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 8: 1},
    (5, 0): {},
    (5, 1): {0: 1, 1: 1},
    (5, 2): {0: 1, 1: 1, 2: 1},
    (5, 3): {0: 1, 1: 1, 2: 1, 3: 1, 4: 1},
    (5, 4): {0: 1, 1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 1, 7: 1, 8: 1},
}

# partition counts into parts congruent to 2,3,5,8 mod 9
FAMILY4_PRODUCT_PREFIX = [1, 0, 1, 1, 1, 2, 2, 2, 4, 3, 5, 6, 7]


def test_kr_finite_small_values():
    for (i, N), want in KR_SMALL.items():
        assert coeffs(kr_finite(i, N)) == want, (i, N)


def test_kr_finite_family5_starts_empty():
    # no lattice point satisfies the bounds at index 0
    assert kr_finite(5, 0).is_zero()


def test_kr_finite_window_matches_exact():
    for i in range(1, 6):
        for N in (3, 7, 10):
            full = kr_finite(i, N)
            for w in (0, 4, 9):
                cut = kr_finite(i, N, window=w)
                for k in range(w + 1):
                    assert cut.coefficient(k) == full.coefficient(k), (i, N, w)


def test_kr_finite_members_stabilize():
    for i in range(1, 6):
        for N in range(1, 16):
            a, b = kr_finite(i, N), kr_finite(i, N + 1)
            assert agree_to_order(a, b, N), (i, N)


def test_s_recursion_small():
    assert coeffs(s_recursion(0)) == {0: 1}
    assert coeffs(s_recursion(2)) == {0: 1, 2: 1}
    assert coeffs(s_recursion(3)) == {0: 1, 2: 1, 3: 1, 5: 1}


def test_s_recursion_equals_family4_sum():
    for N in range(26):
        assert s_recursion(N) == kr_finite(4, N), N


def test_kr_finite_x_refines_by_part_count():
    b = kr_finite_x(4, 3)
    assert b.coefficient(2, 5) == 1
    assert b.coefficient(0, 0) == 1
    for i in range(1, 5):
        assert kr_finite_x(i, 0).total() == kr_finite(i, 0)
        for N in range(1, 9):
            assert kr_finite_x(i, N).total() == kr_finite(i, N), (i, N)


def test_kr_finite_x_family4_counts_partitions():
    b = kr_finite_x(4, 9)
    for total in range(12):
        by_parts = count_by_parts(GAP23, total, 9)
        for j in range(6):
            assert b.coefficient(j, total) == by_parts.get(j, 0), (total, j)


def test_kr_infinite_prefix_of_finite():
    for i in range(1, 6):
        inf = kr_infinite(i, 20)
        fin = kr_finite(i, 30, window=20)
        assert agree_to_order(inf, fin, 20), i


def test_kr_infinite_first_family_constant():
    assert kr_infinite(1, 0).coefficient(0) == 1


def test_kr_product_family4_prefix():
    s = kr_product(4, 12)
    assert [s.coefficient(k) for k in range(13)] == FAMILY4_PRODUCT_PREFIX


def test_kr_product_family3_smallest_part():
    s = kr_product(3, 4)
    assert [s.coefficient(k) for k in range(5)] == [1, 0, 0, 1, 1]


def test_kr_sum_matches_product_prefix():
    # the five mod-9 correspondences, numerically through q^40
    for i in range(1, 6):
        assert agree_to_order(kr_infinite(i, 40), kr_product(i, 40), 40), i


# -- the binomial identity sweep -----------------------------------------------

def test_eqid_zero_for_small_arguments():
    for L in range(41):
        assert eqid(L).is_zero(), L


def test_eqid_sweep_clean():
    assert eqid_sweep(60) == []


def test_eqid_sweep_detects_an_injected_error():
    assert eqid_sweep(20, _corrupt=(13, 2)) == [13]
    assert eqid_sweep(20, _corrupt=(0, 0)) == [0]


# -- capparelli forms ------------------------------------------------------------

def test_cap43_frozen_values():
    assert coeffs(cap43(2)) == {0: 1, 2: 1, 3: 1, 4: 1, 6: 1}
    assert coeffs(cap43(3)) == {0: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 2,
                                7: 1, 8: 1, 9: 2, 10: 1, 12: 1}


def test_cap43_pair():
    for N in range(9):
        assert cap43(N) == cap43_rhs(N), N


def test_cap71_frozen_values():
    assert coeffs(cap71(1)) == {0: 1, 2: 1, 3: 1, 4: 1}
    assert coeffs(cap71(2)) == {0: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 2, 7: 1,
                                8: 1, 9: 1, 10: 2, 11: 1, 12: 1, 13: 1, 14: 1}


def test_cap71_pair():
    for N in range(8):
        assert cap71(N) == cap71_rhs(N), N


def test_cap71_reflected_frozen_values():
    assert coeffs(cap71_reflected(1)) == {0: 1, 1: 1, 2: 1, 4: 1}
    assert coeffs(cap71_reflected(2)) == {0: 1, 1: 1, 2: 1, 3: 1, 4: 2,
                                          5: 1, 6: 1, 7: 1, 8: 2, 9: 1,
                                          10: 1, 11: 1, 12: 1, 14: 1}


def test_cap71_reflected_pair():
    for N in range(8):
        assert cap71_reflected(N) == cap71_reflected_rhs(N), N


def test_cap71_reflected_window_matches_exact():
    for N in (4, 7):
        full = cap71_reflected(N)
        cut = cap71_reflected(N, window=12)
        for k in range(13):
            assert cut.coefficient(k) == full.coefficient(k), (N, k)


def test_cap_reflected_pairs():
    for M in range(7):
        assert cap_reflected_even(M) == cap_reflected_even_rhs(M), M
        assert cap_reflected_odd(M) == cap_reflected_odd_rhs(M), M


def test_cap_reflected_limits_parse():
    # members near index order/3 have already stabilized on the window
    even = parse_product(CAP_EVEN_LIMIT).expand(30)
    odd = parse_product(CAP_ODD_LIMIT).expand(30)
    assert agree_to_order(cap_reflected_even(12, window=30), even, 30)
    assert agree_to_order(cap_reflected_odd(12, window=30), odd, 30)


def test_capparelli_analytic_sides_agree():
    lhs, rhs = capparelli_analytic(50)
    assert agree_to_order(lhs, rhs, 50)


# -- classical pairs --------------------------------------------------------------

def test_bressoud_finite_small():
    lhs, rhs = bressoud_finite(1)
    assert coeffs(lhs) == {0: 1, 1: 1}
    assert lhs == rhs
    for N in range(12):
        lhs, rhs = bressoud_finite(N)
        assert lhs == rhs, N


def test_bressoud_reflected_small():
    for N in range(12):
        lhs, rhs = bressoud_reflected(N)
        assert lhs == rhs, N


def test_schur_finite_small():
    for N in range(14):
        lhs, rhs = schur_finite(N)
        assert lhs == rhs, N


def test_andrews_pairs_small():
    for M in range(12):
        le, re_ = andrews_even(M)
        lo, ro = andrews_odd(M)
        assert le == re_, M
        assert lo == ro, M


def test_rr_sum_against_product():
    order = 40
    prod = parse_product(ROGERS_PRODUCTS["rr"]).expand(order)
    assert agree_to_order(rr_sum(order), prod, order)
    assert [rr_sum(8).coefficient(k) for k in range(9)] == \
        [1, 1, 1, 1, 2, 2, 3, 3, 4]


def test_rogers_sums_against_products():
    order = 40
    for parity, key in ((0, "even"), (1, "odd")):
        prod = parse_product(ROGERS_PRODUCTS[key]).expand(order)
        assert agree_to_order(rogers_sum(parity, order), prod, order), key


def test_bressoud79_sums_against_products():
    order = 40
    for variant in ("a", "b"):
        prod = parse_product(BRESSOUD79_PRODUCTS[variant]).expand(order)
        assert agree_to_order(bressoud79_sum(variant, order), prod, order)


# -- the recurrence family ---------------------------------------------------------

def test_f_general_small_values():
    assert coeffs(f_general(0, 0)) == {0: 1}
    assert coeffs(f_general(2, 1)) == {0: 1, 1: 1}
    assert coeffs(f_general(4, 2)) == {0: 1, 1: 1, 2: 1, 3: 2, 4: 1}


def test_f_general_specializes_to_first_family():
    for N in range(12):
        assert f_general(N + 1, (2 * N) // 3 + 1) == kr_finite(1, N), N


def test_f_general_recurrence():
    for N in range(2, 16):
        if N % 3 == 0:
            continue
        for M in range(8):
            lhs = f_general(N, M)
            rhs = f_general(N - 1, M).add(
                f_general(N - 2, M - 1).scale(1, N - 1))
            assert lhs == rhs, (N, M)


# -- catalog shape ------------------------------------------------------------------

def test_catalog_ids_and_statuses():
    entries = catalog()
    assert len(entries) == 60
    for eid, entry in entries.items():
        assert entry.id == eid
        assert entry.status in ("proved", "conjectural")
        assert entry.description
        assert entry.defaults, eid


def test_catalog_builds_an_exact_entry():
    entry = catalog()["bressoud-finite"]
    check = entry.build({"N": 5}, None, 600)
    assert isinstance(check, BuiltCheck)
    assert check.order is None
    assert check.lhs == check.rhs


def test_catalog_builds_a_windowed_entry():
    entry = catalog()["rr-product"]
    check = entry.build({}, 30, 600)
    assert check.order == 30
    assert first_discrepancy(check.lhs, check.rhs, 30) is None


def test_catalog_rejects_recurrence_index_divisible_by_three():
    entry = catalog()["f-recurrence"]
    with pytest.raises(ValueError):
        entry.build({"N": 27, "M": 5}, None, 600)


def test_catalog_dual_reading_entries():
    entry = catalog()["rk-linear-3"]
    assert entry.defaults == ({"reading": "substituted"},)
    good = entry.build({"reading": "substituted"}, 60, 600)
    assert first_discrepancy(good.lhs, good.rhs, 60) is None
    bad = entry.build({"reading": "literal"}, 60, 600)
    assert first_discrepancy(bad.lhs, bad.rhs, 60) == 0
