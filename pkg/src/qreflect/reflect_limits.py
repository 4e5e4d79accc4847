"""Reflected sums, their stabilized limits, and product comparisons.

Reflecting the i-th bounded sum about its degree produces a second
family of polynomials whose coefficients stabilize as the bound grows
along a fixed residue class mod 3.  This module computes the reflected
polynomials (exactly or through a window), drives the stabilization,
and holds the closed forms the limits are checked against: single
a,b-sums, modulus-45 products, and three-term combinations of theta
quotients written br(c1,c2,c3,c4).
"""
from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .series import LaurentSeries, first_discrepancy
from .qfactory import ProductFactor, ProductSpec, bracket, qbinomial, \
    qbinomial_window, geometric_divide
from .identities import _ONE_PLUS_Q, _binomial, _kr_terms, kr_finite


class StabilizationError(RuntimeError):
    """Raised when members keep disagreeing below the requested order."""

    def __init__(self, order, ceiling):
        super().__init__(
            f"no stabilization through q^{order} below index {ceiling}")
        self.order = order
        self.ceiling = ceiling


def normalization_exponent(i, N):
    """Degree of the i-th bounded sum at index N."""
    assert 1 <= i <= 5
    M, r = divmod(N, 3)
    table = {
        1: (3 * M * (M + 1), 3 * M * (M + 1) + 1, 3 * (M + 1) ** 2),
        2: (3 * M * (M + 1), 3 * M * (M + 1), 3 * (M + 1) ** 2 - 1),
        3: (3 * M * (M + 1), 3 * M * (M + 1), 3 * M * (M + 2)),
        4: (M * (3 * M + 2), M * (3 * M + 5), (M + 1) * (3 * M + 2)),
        5: (M * (3 * M + 1), (M + 1) * (3 * M + 1), (M + 2) * (3 * M + 1)),
    }
    return table[i][r]


@lru_cache(maxsize=None)
def rk_finite(i, N, window=None):
    """The i-th bounded sum reflected about its degree.

    With a window, each reflected term is rebuilt directly from the
    palindromic binomials (reversal fixes them), so the cost depends on
    the window rather than on N.
    """
    e = normalization_exponent(i, N)
    if window is None:
        return kr_finite(i, N).reflect(e)
    total = LaurentSeries.zero()
    for shift, _, b1, b2, doubled in _kr_terms(i, N):
        t1, m, base1, star = b1
        t2, n, base2, _ = b2
        deg = (shift + base1 * m * (t1 - m) + base2 * n * (t2 - n)
               + (1 if doubled else 0))
        offset = e - deg
        if offset > window:
            continue
        cap = window - offset
        term = _binomial(t1, m, base1, star, cap).mul(
            _binomial(t2, n, base2, False, cap))
        if doubled:
            term = term.mul(_ONE_PLUS_Q)
        total = total.add(term.scale(1, offset))
    return total.truncate(window)


def stabilized_limit(member, order, ceiling=600, start=None):
    """Drive member(j) until two consecutive members agree through the
    order; returns (series, index of the accepted member).

    Disagreement at exponent d jumps the index by about (order - d) / 3,
    matching the linear rate at which fresh terms enter.  Raises
    StabilizationError at the ceiling.
    """
    cache = {}

    def get(j):
        if j not in cache:
            cache[j] = member(j)
        return cache[j]

    j = max(2, isqrt(order) + 1) if start is None else start
    while j < ceiling:
        d = first_discrepancy(get(j), get(j + 1), order)
        if d is None:
            return get(j + 1), j + 1
        j += max(1, (order - d) // 3 + 1)
    raise StabilizationError(order, ceiling)


@lru_cache(maxsize=None)
def rk_limit(i, c, order, ceiling=600):
    """Stabilized limit of the reflected i-th sum along N = 3j + c."""
    assert 0 <= c <= 2
    series, j = stabilized_limit(
        lambda j: rk_finite(i, 3 * j + c, window=order), order, ceiling)
    return series, 3 * j + c


# -- closed forms for the limits ----------------------------------------------

# finite a,b-forms of the reflected sums for families 4 and 5: rows are
# (u, v, la, lb, const, doubled) for the term
#   q^(quad + la*a + lb*b + const) [3b-a+u, a] [M+a-b+v, b]_3
# with quad = a^2 - 3ab + 3b^2, doubled meaning an extra (1+q)
_AB_FINITE = {
    (4, 0): ((0, 0, 0, 1, 0, False),),
    (4, 1): ((-1, 1, 0, 1, -2, False),),
    (4, 2): ((1, 0, 0, 1, 0, False),),
    (5, 0): ((1, -1, 0, 2, 0, True), (2, -2, -1, 5, 2, False)),
    (5, 1): ((0, 0, 0, 2, 0, True), (1, -1, -1, 5, 2, False)),
    (5, 2): ((-1, 1, 0, 2, -2, True), (0, 0, -1, 5, 0, False)),
}

# infinite a,b-sums for families 1..3: rows are (u, la, lb, const) for
#   q^(quad + la*a + lb*b + const) [3b-a+u, a] / (q^3;q^3)_b
# and a flag prepending a bare 1 to the sum
_AB_INFINITE = {
    (1, 0): (((-1, 0, 0, -1),), False),
    (1, 1): (((1, 0, 0, 0),), False),
    (1, 2): (((0, 0, 0, 0),), False),
    (2, 0): (((0, -1, 3, 0),), False),
    (2, 1): (((2, -1, 3, 0),), False),
    (2, 2): (((1, -1, 3, 0),), False),
    (3, 0): (((-2, 1, 0, 0),), True),
    (3, 1): (((0, 1, 0, 0),), False),
    (3, 2): (((-1, 1, 0, -2),), False),
}


def rk_ab_finite(i, c, M):
    """Single-sum-per-term closed form of rk_finite(i, 3M + c), exact."""
    rows = _AB_FINITE[(i, c)]
    total = LaurentSeries.zero()
    for u, v, la, lb, const, doubled in rows:
        for b in range(0, 2 * M + 5):
            for a in range(0, (3 * b + u) // 2 + 1):
                if 3 * b - a + u < a or M + a - b + v < b:
                    continue
                quad = a * a - 3 * a * b + 3 * b * b
                shift = quad + la * a + lb * b + const
                term = qbinomial(3 * b - a + u, a).mul(
                    qbinomial(M + a - b + v, b, 3))
                if doubled:
                    term = term.mul(_ONE_PLUS_Q)
                total = total.add(term.scale(1, shift))
    return total


def rk_ab_infinite(i, c, order):
    """Limit of the reflected sum for families 1..3 as a single a,b-sum."""
    rows, leading_one = _AB_INFINITE[(i, c)]
    total = [0] * (order + 1)
    if leading_one:
        total[0] += 1
    # along a = 3b/2 the quadratic form drops to (3/4) b^2, so the sum
    # can reach the window out to roughly 2 sqrt(order / 3)
    bmax = 2 * isqrt(order + 4) + 8
    inv3 = [0] * (order + 1)
    inv3[0] = 1
    for b in range(0, bmax + 1):
        if b > 0:
            # inv3 holds the dense window of 1/(q^3;q^3)_b
            geometric_divide(inv3, 3 * b)
        for u, la, lb, const in rows:
            for a in range(0, (3 * b + u) // 2 + 1):
                if 3 * b - a + u < a:
                    continue
                quad = a * a - 3 * a * b + 3 * b * b
                shift = quad + la * a + lb * b + const
                if shift > order:
                    continue
                cap = order - shift
                bino = qbinomial_window(3 * b - a + u, a, cap)
                for k in range(bino.low, min(bino.valid_to, cap) + 1):
                    ck = bino.coefficient(k)
                    if ck == 0:
                        continue
                    for idx in range(0, cap - k + 1):
                        if inv3[idx]:
                            total[shift + k + idx] += ck * inv3[idx]
    return LaurentSeries(0, total, order, exact=False)


# modulus-45 products conjectured for the limits of families 4 and 5
MOD45_PRODUCTS = {
    (4, 0): "1/((q^2;q^3)(q^3,q^9,q^12,q^21,q^30,q^36,q^39;q^45))",
    (4, 1): "1/((q^2;q^3)(q^3,q^12,q^18,q^21,q^27,q^30,q^39;q^45))",
    (5, 1): "1/((q;q^3)(q^6,q^9,q^15,q^24,q^33,q^36,q^42;q^45))",
    (5, 2): "1/((q;q^3)(q^6,q^15,q^18,q^24,q^27,q^33,q^42;q^45))",
}

# bracket combinations conjectured for the limits of families 1..3,
# two independent forms per limit: rows are (sign, shift, quadruple)
BRACKET_COMBOS = {
    (1, 0, "a"): ((1, 0, (2, 8, 11, 20)), (1, 3, (2, 14, 20, 22)),
                  (-1, 8, (17, 19, 20, 22))),
    (1, 0, "b"): ((1, 0, (1, 8, 13, 20)), (-1, 1, (4, 7, 13, 20)),
                  (1, 5, (7, 16, 17, 20))),
    (1, 2, "a"): ((1, 0, (1, 7, 11, 20)), (1, 6, (11, 13, 14, 20)),
                  (-1, 6, (8, 14, 19, 20))),
    (1, 2, "b"): ((1, 0, (1, 4, 17, 20)), (-1, 4, (2, 16, 19, 20)),
                  (-1, 5, (4, 16, 20, 22))),
    (2, 0, "a"): ((1, 0, (2, 5, 14, 22)), (-1, 2, (5, 7, 16, 17)),
                  (-1, 5, (5, 17, 19, 22))),
    (2, 0, "b"): ((1, -3, (1, 5, 8, 13)), (-1, -3, (2, 5, 8, 11)),
                  (-1, -2, (4, 5, 7, 13))),
    (2, 2, "a"): ((1, 0, (2, 5, 16, 19)), (-1, 2, (5, 8, 14, 19)),
                  (1, 2, (5, 11, 13, 14))),
    (2, 2, "b"): ((1, -4, (1, 4, 5, 17)), (-1, -4, (1, 5, 7, 11)),
                  (-1, 1, (4, 5, 16, 22))),
    (3, 0, "a"): ((1, 0, (4, 7, 10, 13)), (-1, 4, (7, 10, 16, 17)),
                  (-1, 7, (10, 17, 19, 22))),
    (3, 0, "b"): ((1, -1, (1, 8, 10, 13)), (-1, -1, (2, 8, 10, 11)),
                  (-1, 2, (2, 10, 14, 22))),
    (3, 2, "a"): ((1, 0, (2, 10, 16, 19)), (1, 1, (4, 10, 16, 22)),
                  (-1, 2, (8, 10, 14, 19))),
    (3, 2, "b"): ((1, -4, (1, 4, 10, 17)), (-1, -4, (1, 7, 10, 11)),
                  (-1, 2, (10, 11, 13, 14))),
}


def combo_series(i, c, form, order):
    """Expand one bracket combination through the order."""
    total = LaurentSeries.zero()
    for sign, shift, cs in BRACKET_COMBOS[(i, c, form)]:
        total = total.add(bracket(cs, order - shift).scale(sign, shift))
    return total


@lru_cache(maxsize=None)
def _bracket_positive_part(cs, order):
    # br(...) times (q^3;q^3)/(q^45;q^45): just the four inverse pairs
    factors = []
    for cj in cs:
        factors.append(ProductFactor(-1, cj, 45, "den"))
        factors.append(ProductFactor(-1, 45 - cj, 45, "den"))
    return ProductSpec(tuple(factors)).expand(order)


def positivity_scan(order=200):
    """Coefficient signs of every bracket combination after clearing the
    common prefactor; returns {(i, c, form): first negative exponent}
    with None marking an all-nonnegative expansion."""
    out = {}
    for key in sorted(BRACKET_COMBOS):
        total = LaurentSeries.zero()
        for sign, shift, cs in BRACKET_COMBOS[key]:
            total = total.add(
                _bracket_positive_part(cs, order - shift).scale(sign, shift))
        bad = None
        for k in range(total.low, order + 1):
            if total.coefficient(k) < 0:
                bad = k
                break
        out[key] = bad
    return out


# linear relations among the three stabilized limits of one family;
# each side is a list of (coefficient exponent, class) pairs
_LINEAR = {
    1: (((0, 1),), ((1, 0), (0, 2))),
    2: (((0, 1),), ((0, 0), (0, 2))),
    4: (((0, 2),), ((0, 0), (2, 1))),
    5: (((0, 0),), ((0, 1), (2, 2))),
}


def linear_relation_sides(i, order, ceiling=600, reading="substituted"):
    """Both sides of the family's relation on stabilized limits.

    Family 3 has two readings: the one printed alongside the others
    (literal, same shape as family 2) and the one obtained by matching
    powers after substitution (substituted, with a q^2 on the last
    class).  They differ, and only the substituted one holds.
    """
    if i == 3:
        lhs_rows = ((0, 1),)
        rhs_rows = ((0, 0), (2, 2)) if reading == "substituted" \
            else ((0, 0), (0, 2))
    else:
        lhs_rows, rhs_rows = _LINEAR[i]

    def side(rows):
        total = LaurentSeries.zero()
        for exp, c in rows:
            total = total.add(rk_limit(i, c, order, ceiling)[0].scale(1, exp))
        return total

    return side(lhs_rows), side(rhs_rows)
