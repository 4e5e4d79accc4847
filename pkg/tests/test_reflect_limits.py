"""Reflected polynomials, their limits, and the closed comparison forms."""
import pytest

from qreflect.identities import kr_finite
from qreflect.qfactory import parse_product
from qreflect.reflect_limits import (BRACKET_COMBOS, MOD45_PRODUCTS,
                                     StabilizationError, combo_series,
                                     linear_relation_sides,
                                     normalization_exponent, positivity_scan,
                                     rk_ab_finite, rk_ab_infinite, rk_finite,
                                     rk_limit, stabilized_limit)
from qreflect.series import LaurentSeries, agree_to_order, first_discrepancy


def coeffs(s):
    return {k: s.coefficient(k) for k in s.support()}


# -- normalization ---------------------------------------------------------------

def test_normalization_exponent_spot_values():
    assert normalization_exponent(4, 0) == 0
    assert normalization_exponent(4, 3) == 5
    assert normalization_exponent(4, 4) == 8
    assert normalization_exponent(4, 5) == 10
    assert normalization_exponent(1, 3) == 6
    assert normalization_exponent(2, 2) == 2
    assert normalization_exponent(3, 5) == 9
    assert normalization_exponent(5, 2) == 2


def test_normalization_exponent_is_the_degree():
    for i in range(1, 6):
        for N in range(13):
            if (i, N) == (5, 0):
                continue  # the empty sum has no degree
            assert kr_finite(i, N).degree() == \
                normalization_exponent(i, N), (i, N)


def test_rk_finite_is_the_reflection():
    for i in range(1, 6):
        for N in range(1, 10):
            e = normalization_exponent(i, N)
            assert rk_finite(i, N) == kr_finite(i, N).reflect(e), (i, N)


def test_rk_finite_base_cases():
    assert coeffs(rk_finite(4, 0)) == {0: 1}
    assert coeffs(rk_finite(4, 3)) == {0: 1, 2: 1, 3: 1, 5: 1}
    assert rk_finite(5, 0).is_zero()


def test_rk_finite_exponent_floor():
    # families 1, 4, 5 reflect to genuine polynomials; 2 and 3 may dip
    # finitely far below zero
    for i in (1, 4, 5):
        for N in range(13):
            s = rk_finite(i, N)
            if not s.is_zero():
                assert s.low >= 0, (i, N)
    for i in (2, 3):
        for N in range(13):
            s = rk_finite(i, N)
            assert s.low >= -4, (i, N)


def test_rk_finite_window_matches_exact():
    for i in range(1, 6):
        for N in (4, 9, 11):
            full = rk_finite(i, N)
            cut = rk_finite(i, N, window=6)
            for k in range(full.low, 7):
                assert cut.coefficient(k) == full.coefficient(k), (i, N, k)


# -- stabilization -----------------------------------------------------------------

def test_stabilized_limit_constant_family():
    series, j = stabilized_limit(lambda _: LaurentSeries.one(), 10)
    assert series == LaurentSeries.one()
    assert j >= 4


def test_stabilized_limit_raises_at_the_ceiling():
    def never(j):
        return LaurentSeries.from_coeffs([(j, 1)], exact=False, valid_to=40)

    with pytest.raises(StabilizationError) as err:
        stabilized_limit(never, 30, ceiling=25)
    assert err.value.order == 30
    assert err.value.ceiling == 25


def test_rk_limit_reports_the_member_used():
    series, j = rk_limit(4, 0, 20)
    assert j % 3 == 0 and j > 0
    assert series.valid_to >= 20


# -- closed forms -------------------------------------------------------------------

def test_ab_finite_matches_reflection():
    for i in (4, 5):
        for c in (0, 1, 2):
            for M in range(5):
                got = rk_ab_finite(i, c, M)
                want = rk_finite(i, 3 * M + c)
                assert got == want, (i, c, M)


def test_ab_infinite_matches_stabilized_limit():
    order = 30
    for i in (1, 2, 3):
        for c in (0, 1, 2):
            series, _ = rk_limit(i, c, order)
            closed = rk_ab_infinite(i, c, order)
            assert agree_to_order(series, closed, order), (i, c)


def test_mod45_products_match_limits():
    order = 35
    for (i, c), text in MOD45_PRODUCTS.items():
        series, _ = rk_limit(i, c, order)
        prod = parse_product(text).expand(order)
        assert agree_to_order(series, prod, order), (i, c)


def test_bracket_combos_cover_both_forms():
    assert len(BRACKET_COMBOS) == 12
    assert {(i, c) for (i, c, _) in BRACKET_COMBOS} == \
        {(i, c) for i in (1, 2, 3) for c in (0, 2)}
    for key, rows in BRACKET_COMBOS.items():
        assert len(rows) == 3, key
        for sign, shift, cs in rows:
            assert sign in (1, -1)
            assert len(cs) == 4


def test_combo_series_match_limits():
    order = 30
    for i, c in ((1, 0), (2, 2), (3, 0)):
        series, _ = rk_limit(i, c, order)
        for form in ("a", "b"):
            combo = combo_series(i, c, form, order)
            assert agree_to_order(series, combo, order), (i, c, form)


# -- linear relations ----------------------------------------------------------------

def test_linear_relations_hold():
    for i in (1, 2, 4, 5):
        lhs, rhs = linear_relation_sides(i, 80)
        assert agree_to_order(lhs, rhs, 80), i


def test_third_family_literal_reading_fails_immediately():
    lhs, rhs = linear_relation_sides(3, 40, reading="literal")
    assert first_discrepancy(lhs, rhs, 40) == 0


def test_third_family_substituted_reading_holds():
    lhs, rhs = linear_relation_sides(3, 80, reading="substituted")
    assert agree_to_order(lhs, rhs, 80)


# -- positivity ---------------------------------------------------------------------

def test_positivity_scan_clean_at_low_order():
    scan = positivity_scan(60)
    assert set(scan) == set(BRACKET_COMBOS)
    assert all(where is None for where in scan.values())
