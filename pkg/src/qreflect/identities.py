"""Sum sides, product sides, and the verification catalog.

The central objects are five families of bounded double sums indexed by
i = 1..5 (kr_finite) together with their unbounded versions and their
conjectured infinite products.  Around them sit the classical finite
identities used to calibrate the machinery, a pair of trinomial-style
identities with exact polynomial sides (cap43, cap71, and their
reflections), and a catalog that packages every statement this library
can check into a uniform record.

Everything here is exact integer arithmetic; "order" arguments always
mean a hard truncation window, never a tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import LaurentSeries, series_sum
from .qfactory import (ProductSpec, geometric_divide, pochhammer_finite,
                       qbinomial, qbinomial_star, qbinomial_window)


def _binomial(top, bottom, base, star, cap=None):
    if cap is None:
        f = qbinomial_star if star else qbinomial
        return f(top, bottom, base)
    if star and top == -1 and bottom == 0:
        return LaurentSeries.one()
    return qbinomial_window(top, bottom, cap, base)


def _kr_terms(i, N):
    """Yield the lattice terms of the i-th bounded double sum.

    Each item is (shift, xdeg, first, second, doubled): the term is
    q^shift times the product of the two Gaussian binomials described by
    the (top, bottom, base, starred) tuples, and carries an extra factor
    (1+q) when doubled is set.  xdeg is the exponent of the marking
    variable in the refined version; the (1+q) of a doubled term refines
    to slices xdeg and xdeg+1.
    """
    if i == 5:
        d = 1 if (N - 2) % 3 == 0 else 0
        for n in range(0, N // 3 + 2):
            for m in range(0, N + 2):
                quad = m * m + 3 * m * n + 3 * n * n
                t1 = N - m - 3 * n - 1
                t2 = 2 * (N - 1) // 3 - m - n + d
                if t1 >= m and t2 >= n:
                    yield (quad + 2 * m + 4 * n, m + 2 * n,
                           (t1, m, 1, False), (t2, n, 3, False), True)
                u1 = N - m - 3 * n - 2
                u2 = 2 * (N - 2) // 3 - m - n
                if u1 >= m and u2 >= n:
                    yield (quad + 3 * m + 7 * n + 2, m + 2 * n + 1,
                           (u1, m, 1, False), (u2, n, 3, False), False)
        return
    for n in range(0, N // 3 + 2):
        for m in range(0, N + 2):
            quad = m * m + 3 * m * n + 3 * n * n
            if i == 1:
                t1 = N - m - 3 * n + 1
                t2 = (2 * N) // 3 - m - n + 1
                lin = 0
            elif i == 2:
                t1 = N - m - 3 * n
                t2 = (2 * N) // 3 - m - n
                lin = m + 3 * n
            elif i == 3:
                t1 = N - m - 3 * n - 1
                t2 = (2 * N) // 3 - m - n
                lin = 2 * m + 3 * n
            elif i == 4:
                t1 = N - m - 3 * n
                t2 = (2 * (N - 1)) // 3 - m - n + 1
                lin = m + 2 * n
            else:
                raise ValueError(f"no family {i}")
            star = i == 3
            ok1 = t1 >= m or (star and t1 == -1 and m == 0)
            if ok1 and t2 >= n:
                yield (quad + lin, m + 2 * n,
                       (t1, m, 1, star), (t2, n, 3, False), False)


_ONE_PLUS_Q = LaurentSeries.from_coeffs([(0, 1), (1, 1)])


@lru_cache(maxsize=None)
def kr_finite(i, N, window=None):
    """The i-th bounded double sum at index N.

    Exact when no window is given; otherwise valid through the window,
    with terms entering above it skipped entirely.
    """
    assert 1 <= i <= 5 and N >= 0
    total = LaurentSeries.zero()
    for shift, _, b1, b2, doubled in _kr_terms(i, N):
        if window is not None and shift > window:
            continue
        cap = None if window is None else window - shift
        term = _binomial(*b1, cap).mul(_binomial(*b2, cap))
        if doubled:
            term = term.mul(_ONE_PLUS_Q)
        total = total.add(term.scale(1, shift))
    if window is not None:
        total = total.truncate(window)
    return total


def kr_finite_x(i, N):
    """The refined sum: each term is marked by a power of the second
    variable recording the number of parts it accounts for."""
    from .series import BivariateSeries
    terms = []
    for shift, xdeg, b1, b2, doubled in _kr_terms(i, N):
        base = _binomial(*b1, None).mul(_binomial(*b2, None)).scale(1, shift)
        if doubled:
            terms.append((xdeg, base))
            terms.append((xdeg + 1, base.scale(1, 1)))
        else:
            terms.append((xdeg, base))
    return BivariateSeries.from_terms(terms)


def _inverse_pochhammer_rows(step, count, order):
    """Dense rows of 1/(q^step; q^step)_j for j = 0..count."""
    rows = []
    cur = [0] * (order + 1)
    cur[0] = 1
    rows.append(cur[:])
    for j in range(1, count + 1):
        geometric_divide(cur, step * j)
        rows.append(cur[:])
    return rows


def _convolve(a, b, order):
    out = [0] * (order + 1)
    for i, c in enumerate(a):
        if c == 0 or i > order:
            continue
        top = order - i
        for j, d in enumerate(b):
            if j > top:
                break
            if d:
                out[i + j] += c * d
    return out


def kr_infinite(i, order):
    """The unbounded version of the i-th double sum, truncated."""
    assert 1 <= i <= 5
    mmax = 0
    while mmax * mmax <= order:
        mmax += 1
    nmax = 0
    while 3 * nmax * nmax <= order:
        nmax += 1
    inv1 = _inverse_pochhammer_rows(1, mmax, order)
    inv3 = _inverse_pochhammer_rows(3, nmax, order)
    total = [0] * (order + 1)
    for n in range(nmax + 1):
        for m in range(mmax + 1):
            quad = m * m + 3 * m * n + 3 * n * n
            if quad > order:
                break
            lin = {1: 0, 2: m + 3 * n, 3: 2 * m + 3 * n,
                   4: m + 2 * n, 5: 2 * m + 4 * n}[i]
            shift = quad + lin
            if shift > order:
                continue
            term = _convolve(inv1[m], inv3[n], order - shift)
            if i == 5:
                # multiplier 1 + q + q^(m+3n+2)
                mult = term[:]
                for k in range(len(term) - 1):
                    mult[k + 1] += term[k]
                e = m + 3 * n + 2
                for k in range(len(term) - e):
                    mult[k + e] += term[k]
                term = mult
            for k, c in enumerate(term):
                if c:
                    total[shift + k] += c
    return LaurentSeries(0, total, order, exact=False)


_KR_PRODUCTS = {
    1: "1/(q,q^3,q^6,q^8;q^9)",
    2: "1/(q^2,q^3,q^6,q^7;q^9)",
    3: "1/(q^3,q^4,q^5,q^6;q^9)",
    4: "1/(q^2,q^3,q^5,q^8;q^9)",
    5: "1/(q,q^4,q^6,q^7;q^9)",
}


def kr_product(i, order):
    """The conjectured modulus-9 product partner of the i-th family."""
    return ProductSpec.parse(_KR_PRODUCTS[i]).expand(order)


_S_CACHE = {}


def s_recursion(N):
    """The fourth family computed through its four-term recursion."""
    if N < 0:
        return LaurentSeries.zero()
    if N in _S_CACHE:
        return _S_CACHE[N]
    for k in range(len(_S_CACHE), N + 1):
        if k == 0:
            s = LaurentSeries.one()
        else:
            r = k % 3
            if r == 0:
                inner = s_recursion(k - 3).mul(
                    LaurentSeries.from_coeffs([(0, 1), (k - 1, 1)]))
                inner = inner.add(s_recursion(k - 4).scale(1, k - 2))
            elif r == 1:
                inner = s_recursion(k - 2).add(s_recursion(k - 3).scale(1, k))
            else:
                inner = s_recursion(k - 2)
            s = s_recursion(k - 1).add(inner.scale(1, k))
        _S_CACHE[k] = s
    return _S_CACHE[N]


# -- interlocking rectangle sums ----------------------------------------------

@lru_cache(maxsize=None)
def f_general(N, M):
    """The two-parameter sum specializing to the first family when the
    second bound rides at two thirds of the first."""
    total = LaurentSeries.zero()
    for n in range(0, M + 2):
        for m in range(0, N + 1):
            if N - m - 3 * n < m or M - m - n < n:
                continue
            quad = m * m + 3 * m * n + 3 * n * n
            term = qbinomial(N - m - 3 * n, m).mul(
                qbinomial(M - m - n, n, 3))
            total = total.add(term.scale(1, quad))
    return total


# -- the vanishing combination ------------------------------------------------

def eqid(L):
    """The alternating Laurent combination that vanishes identically."""
    total = LaurentSeries.zero()
    for a in range(0, L // 2 + 3):
        comb = qbinomial(L - a - 1, a).add(qbinomial(L - a, a)).sub(
            qbinomial(L - a + 1, a))
        if not comb.is_zero():
            total = total.add(comb.scale(1, a * (a - L)))
    return total


def eqid_sweep(max_L, digit_bits=224, _corrupt=None):
    """Check the vanishing combination for every L = 0..max_L.

    Binomial coefficient rows are packed into big integers at a fixed
    digit width, so each L costs a few shifted additions instead of a
    polynomial sum.  The width must exceed the coefficients, which grow
    no faster than Fibonacci numbers along these antidiagonals; 224 bits
    is comfortable out to L around 400.  Returns the list of failing L
    (empty when everything vanishes).  _corrupt=(L, digit) injects an
    error to prove the harness can see one.
    """
    from gmpy2 import mpz

    B = digit_bits
    one = mpz(1)
    failures = []
    rows = {-2: [], -1: []}  # rows[s][a] packs [s - a, a]
    for s in range(0, max_L + 2):
        prev1, prev2 = rows[s - 1], rows[s - 2]
        row = [one]  # [s, 0] = 1
        for a in range(1, s // 2 + 1):
            g = prev2[a - 1] if a - 1 < len(prev2) else mpz(0)
            if a < len(prev1):
                g = g + (prev1[a] << (B * a))
            row.append(g)
        rows[s] = row
        L = s - 1
        if L < 0:
            continue
        lo = min((a * (a - L) for a in range(0, L // 2 + 2)), default=0)
        z = mpz(0)
        for a in range(0, L // 2 + 2):
            g = mpz(0)
            for src, sgn in ((rows[L - 1], 1), (rows[L], 1), (rows[L + 1], -1)):
                if 0 <= a < len(src):
                    g += sgn * src[a]
            if g:
                z += g << (B * (a * (a - L) - lo))
        if _corrupt is not None and _corrupt[0] == L:
            z += one << (B * _corrupt[1])
        if z != 0:
            failures.append(L)
        del rows[s - 2]
    return failures


# -- exact trinomial-style identities -----------------------------------------

def _capq(m, n):
    return 2 * (m * m + 3 * m * n + 3 * n * n)


def capparelli_analytic(order):
    """Both sides of the analytic double-sum = product identity.

    Returns (sum_side, product_side), each valid through the order.
    """
    mmax = 0
    while 2 * mmax * mmax <= order:
        mmax += 1
    nmax = 0
    while 6 * nmax * nmax <= order:
        nmax += 1
    inv1 = _inverse_pochhammer_rows(1, mmax, order)
    inv3 = _inverse_pochhammer_rows(3, nmax, order)
    total = [0] * (order + 1)
    for n in range(nmax + 1):
        for m in range(mmax + 1):
            shift = _capq(m, n)
            if shift > order:
                break
            term = _convolve(inv1[m], inv3[n], order - shift)
            for k, c in enumerate(term):
                if c:
                    total[shift + k] += c
    lhs = LaurentSeries(0, total, order, exact=False)
    rhs = ProductSpec.parse("(-q^2,-q^4;q^6)(-q^3;q^3)").expand(order)
    return lhs, rhs


def cap43(N):
    """Sum side of the exact identity with the even staircase right side."""
    total = LaurentSeries.zero()
    for n in range(0, N + 1):
        for m in range(0, 3 * N + 1):
            t1 = 3 * N - 3 * m - 6 * n
            t2 = 2 * N - 2 * m - 3 * n
            if t1 < m or t2 < n:
                continue
            term = qbinomial(t1, m).mul(qbinomial(t2, n, 3))
            total = total.add(term.scale(1, _capq(m, n)))
    return total


def _even_staircase(c):
    return pochhammer_finite(2, 6, c, sign=1).mul(
        pochhammer_finite(4, 6, c, sign=1))


def cap43_rhs(N):
    total = LaurentSeries.zero()
    for l in range(0, N // 2 + 1):
        s = N - 2 * l
        term = qbinomial(N, 2 * l, 3).mul(_even_staircase(l))
        total = total.add(term.scale(1, 3 * s * (s - 1) // 2))
    return total


def cap_reflected_even(M, window=None):
    """Mirror image of cap43 at even index, as a double sum in (a, b)."""
    total = LaurentSeries.zero()
    for b in range(0, 2 * M + 2):
        for a in range(0, (3 * b) // 2 + 1):
            if 2 * b > M + a:
                continue
            shift = 2 * (a * a - 3 * a * b + 3 * b * b)
            if window is not None and shift > window:
                continue
            cap = None if window is None else window - shift
            term = _binomial(3 * b, 2 * a, 1, False, cap).mul(
                _binomial(M + a, 2 * b, 3, False, cap))
            total = total.add(term.scale(1, shift))
    return total if window is None else total.truncate(window)


def cap_reflected_even_rhs(M):
    total = LaurentSeries.zero()
    for c in range(0, M + 1):
        term = qbinomial(2 * M, 2 * c, 3).mul(_even_staircase(M - c))
        total = total.add(term.scale(1, 3 * c))
    return total


def cap_reflected_odd(M, window=None):
    """Mirror image of cap43 at odd index."""
    total = LaurentSeries.zero()
    for b in range(0, 2 * M + 2):
        for a in range(0, (3 * b) // 2 + 1):
            if 2 * b > M + a:
                continue
            shift = 2 * (a * a - 3 * a * b + 3 * b * b) + 2 * a - 3 * b - 1
            if window is not None and shift > window:
                continue
            cap = None if window is None else window - shift
            term = _binomial(3 * b, 2 * a + 1, 1, False, cap).mul(
                _binomial(M + a, 2 * b, 3, False, cap))
            total = total.add(term.scale(1, shift))
    return total if window is None else total.truncate(window)


def cap_reflected_odd_rhs(M):
    total = LaurentSeries.zero()
    for c in range(0, M):
        term = qbinomial(2 * M - 1, 2 * c + 1, 3).mul(_even_staircase(M - 1 - c))
        total = total.add(term.scale(1, 3 * c))
    return total


CAP_EVEN_LIMIT = ("1/((q^2,q^10;q^12)"
                  "(q^3,q^6,q^9,q^9,q^12,q^15,q^15,q^21,q^27,q^33,q^33,"
                  "q^36,q^39,q^39,q^42,q^45;q^48))")
CAP_ODD_LIMIT = ("1/((q^2,q^10;q^12)"
                 "(q^3,q^3,q^9,q^12,q^15,q^18,q^21,q^21,q^27,q^27,q^30,"
                 "q^33,q^36,q^39,q^45,q^45;q^48))")


# -- the multinomial identity and its mirror ----------------------------------

def _multinomial_quotient_start(N, n, order):
    """Dense window of the quotient at m = 0: the full q^3 product over
    the two q^3 blocks of sizes n and N - 2n, divided by nothing yet."""
    r = N - 2 * n
    start = qbinomial(N, n, 3).mul(qbinomial(N - n, r, 3))
    d = [0] * (order + 1)
    for k in range(min(start.valid_to, order) + 1):
        d[k] = start.coefficient(k)
    for j in range(1, n + 1):
        # (q;q) tail over (m+1..m+n) at m = 0, and the triple factors
        if j <= order:
            for idx in range(order, j - 1, -1):
                d[idx] -= d[idx - j]
        _sparse_mul_triple(d, j)
    return d


def _sparse_mul_triple(d, j):
    # multiply in place by 1 + q^j + q^2j
    top = len(d) - 1
    for idx in range(top, j - 1, -1):
        d[idx] += d[idx - j]
        if idx >= 2 * j:
            d[idx] += d[idx - 2 * j]


def _sparse_mul_one_minus(d, s):
    if s <= len(d) - 1:
        for idx in range(len(d) - 1, s - 1, -1):
            d[idx] -= d[idx - s]


def cap71(N):
    """Sum side of the exact identity whose right side is a theta-like
    single sum of q^3 binomials; returns an exact polynomial."""
    degs = []
    for n in range(0, N // 2 + 1):
        for m in range(0, N - 2 * n + 1):
            degs.append(_capq(m, n) + _quotient_degree(N, m, n))
    order = max(degs, default=0)
    total = [0] * (order + 1)
    for n in range(0, N // 2 + 1):
        d = _multinomial_quotient_start(N, n, order)
        for m in range(0, N - 2 * n + 1):
            shift = _capq(m, n)
            for k in range(0, order - shift + 1):
                if d[k]:
                    total[shift + k] += d[k]
            if m < N - 2 * n:
                # step m -> m+1: multiply by (1-q^3r), divide by (1-q^(m+1))
                _sparse_mul_one_minus(d, 3 * (N - m - 2 * n))
                geometric_divide(d, m + 1)
    return LaurentSeries(0, total, exact=True)


def _quotient_degree(N, m, n):
    r = N - m - 2 * n
    return (3 * n * (N - n) + 3 * r * (m + n)
            + n * m + n * (n + 1) // 2 + (m + n) * (m + n + 1))


def cap71_rhs(N):
    total = LaurentSeries.zero()
    for l in range(-N, N + 1):
        term = qbinomial(2 * N, N + l, 3)
        total = total.add(term.scale(1, l * (3 * l + 1)))
    return total


def cap71_reflected(N, window=None):
    """Mirror image of the multinomial identity; signed sum over the
    q and q^3 block sizes, exact when no window is given."""
    if window is None:
        degs = [n * (3 * n + 1) // 2 + k * (3 * N + 1)
                + _quotient_degree(N, N - k - 2 * n, n)
                for n in range(0, N // 2 + 1)
                for k in range(0, N - 2 * n + 1)]
        order = max(degs, default=0)
    else:
        order = window
    total = [0] * (order + 1)
    for n in range(0, N // 2 + 1):
        base = n * (3 * n + 1) // 2
        if window is not None and base > order:
            break
        sign = -1 if n % 2 else 1
        # the m = 0 start sits at the top of the k range; walk m upward
        # so k = (N - 2n) - m runs back down to zero
        d = _multinomial_quotient_start(N, n, order)
        kmax = N - 2 * n
        for m in range(0, kmax + 1):
            k = kmax - m
            shift = base + k * (3 * N + 1)
            if shift <= order:
                for idx in range(0, order - shift + 1):
                    if d[idx]:
                        total[shift + idx] += sign * d[idx]
            if m < kmax:
                # step m -> m+1: multiply by (1-q^3k), divide by (1-q^(m+1))
                _sparse_mul_one_minus(d, 3 * k)
                geometric_divide(d, m + 1)
    if window is None:
        return LaurentSeries(0, total, exact=True)
    return LaurentSeries(0, total, order, exact=False)


def cap71_reflected_rhs(N):
    total = LaurentSeries.zero()
    for l in range(-N, N + 1):
        term = qbinomial(2 * N, N + l, 3)
        total = total.add(term.scale(1, N - l))
    return total


# -- calibration identities with exact finite sides ---------------------------

def bressoud_finite(N):
    lhs = series_sum(qbinomial(N, n).scale(1, n * n) for n in range(N + 1))
    rhs = LaurentSeries.zero()
    for k in range(-(N // 2) - 1, N // 2 + 2):
        term = qbinomial(2 * N, N + 2 * k).scale(
            -1 if k % 2 else 1, k * (5 * k + 1) // 2)
        rhs = rhs.add(term)
    return lhs, rhs


def bressoud_reflected(N):
    lhs = series_sum(qbinomial(N, n).scale(1, n * N) for n in range(N + 1))
    rhs = LaurentSeries.zero()
    for k in range(-(N // 2) - 1, N // 2 + 2):
        term = qbinomial(2 * N, N + 2 * k).scale(
            -1 if k % 2 else 1, k * (3 * k - 1) // 2)
        rhs = rhs.add(term)
    return lhs, rhs


def schur_finite(N):
    lhs = series_sum(qbinomial(N - n, n).scale(1, n * n)
                     for n in range(N // 2 + 1))
    rhs = LaurentSeries.zero()
    for k in range(-N, N + 1):
        term = qbinomial(N, (N + 5 * k + 1) // 2).scale(
            -1 if k % 2 else 1, k * (5 * k + 1) // 2)
        rhs = rhs.add(term)
    return lhs, rhs


def andrews_even(M):
    lhs = series_sum(qbinomial(M + n, 2 * n).scale(1, n * n)
                     for n in range(M + 1))
    rhs = LaurentSeries.zero()
    for k in range(-M - 1, M + 2):
        j = (5 * k + 1) // 2
        term = qbinomial(2 * M, M + j).scale(
            -1 if k % 2 else 1, j * j - k * (5 * k + 1) // 2)
        rhs = rhs.add(term)
    return lhs, rhs


def andrews_odd(M):
    lhs = series_sum(qbinomial(M + n + 1, 2 * n + 1).scale(1, n * n + n)
                     for n in range(M + 1))
    rhs = LaurentSeries.zero()
    for k in range(-M - 1, M + 2):
        j = (5 * k) // 2
        term = qbinomial(2 * M + 1, M + j + 1).scale(
            -1 if k % 2 else 1, j * j + j - k * (5 * k + 1) // 2)
        rhs = rhs.add(term)
    return lhs, rhs


def bressoud79_sum(variant, order):
    """Double sums over mixed q and q^2 blocks with known product sides."""
    assert variant in ("a", "b")
    mmax = 0
    while mmax * mmax <= order:
        mmax += 1
    nmax = 0
    while 2 * nmax * nmax <= order:
        nmax += 1
    inv1 = _inverse_pochhammer_rows(1, mmax, order)
    inv2 = _inverse_pochhammer_rows(2, nmax, order)
    total = [0] * (order + 1)
    for n in range(nmax + 1):
        for m in range(mmax + 1):
            shift = m * m + 2 * m * n + 2 * n * n
            if variant == "b":
                shift += m + 2 * n
            if shift > order:
                break
            term = _convolve(inv1[m], inv2[n], order - shift)
            for k, c in enumerate(term):
                if c:
                    total[shift + k] += c
    return LaurentSeries(0, total, order, exact=False)


BRESSOUD79_PRODUCTS = {
    "a": "(q^3;q^3)^2/((q;q)(q^6;q^6))",
    "b": "(q^6;q^6)^2/((q^2;q^2)(q^3;q^3))",
}

ROGERS_PRODUCTS = {
    "rr": "1/(q,q^4;q^5)",
    "even": "1/((q;q^2)(q^4,q^16;q^20))",
    "odd": "1/((q,q^2,q^8,q^9;q^10)(q^5,q^6,q^14,q^15;q^20))",
}


def rr_sum(order):
    """The classic single sum q^(n^2) over (q;q)_n, truncated."""
    nmax = 0
    while nmax * nmax <= order:
        nmax += 1
    inv1 = _inverse_pochhammer_rows(1, nmax, order)
    total = [0] * (order + 1)
    for n in range(nmax + 1):
        if n * n > order:
            break
        row = inv1[n]
        for k in range(0, order - n * n + 1):
            if row[k]:
                total[n * n + k] += row[k]
    return LaurentSeries(0, total, order, exact=False)


def rogers_sum(parity, order):
    """Limit of the staircase-binomial sums: q^(n^2 + parity*n) over
    (q;q)_(2n + parity), truncated."""
    assert parity in (0, 1)
    nmax = 0
    while nmax * nmax <= order:
        nmax += 1
    inv1 = _inverse_pochhammer_rows(1, 2 * nmax + 2, order)
    total = [0] * (order + 1)
    for n in range(nmax + 1):
        shift = n * n + parity * n
        if shift > order:
            break
        row = inv1[2 * n + parity]
        for k in range(0, order - shift + 1):
            if row[k]:
                total[shift + k] += row[k]
    return LaurentSeries(0, total, order, exact=False)


# -- the catalog ----------------------------------------------------------

@dataclass(frozen=True)
class BuiltCheck:
    """One constructed comparison: lhs against rhs, compared exactly
    when order is None and through q^order otherwise."""
    lhs: LaurentSeries
    rhs: LaurentSeries
    order: int | None
    note: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    status: str          # "proved" or "conjectural"
    order_key: str | None
    defaults: tuple      # parameter dicts run when none are given
    build: object        # callable(params, order, ceiling) -> BuiltCheck


def _exact(fn, *names):
    def build(params, order, ceiling):
        lhs, rhs = fn(*(params[k] for k in names))
        return BuiltCheck(lhs, rhs, None)
    return build


def _pair(lhs_fn, rhs_fn, *names):
    def build(params, order, ceiling):
        args = tuple(params[k] for k in names)
        return BuiltCheck(lhs_fn(*args), rhs_fn(*args), None)
    return build


_CATALOG = None


def catalog():
    """id -> CatalogEntry for everything this library can verify."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _assemble_catalog()
    return _CATALOG


def _assemble_catalog():
    from . import partition_oracle as po
    from . import reflect_limits as rl

    entries = {}

    def add(id, description, status, order_key, defaults, build):
        entries[id] = CatalogEntry(id, description, status, order_key,
                                   tuple(defaults), build)

    def product_check(sum_fn, text):
        def build(params, order, ceiling):
            return BuiltCheck(sum_fn(order),
                              ProductSpec.parse(text).expand(order), order)
        return build

    def stabilized_check(member_fn, rhs_fn):
        def build(params, order, ceiling):
            series, j = rl.stabilized_limit(
                lambda k: member_fn(k, order), order, ceiling)
            return BuiltCheck(series, rhs_fn(order), order,
                              note=f"stabilized at index {j}")
        return build

    add("bressoud-finite",
        "bounded quadratic-exponent sum equals an alternating sum of "
        "central binomials with pentagonal-type shifts",
        "proved", None, ({"N": 40},), _exact(bressoud_finite, "N"))
    add("bressoud-reflected",
        "the same sum with reflected exponents equals its alternating "
        "central-binomial partner",
        "proved", None, ({"N": 40},), _exact(bressoud_reflected, "N"))
    add("rr-product",
        "limit of the quadratic-exponent sum is the modulus-5 product",
        "proved", "agree_order", ({},),
        product_check(rr_sum, ROGERS_PRODUCTS["rr"]))
    add("schur-finite",
        "bounded sum with shifted binomials equals an alternating "
        "single-binomial sum",
        "proved", None, ({"N": 40},), _exact(schur_finite, "N"))
    add("andrews-even",
        "staircase-binomial sum at even offset equals an alternating "
        "central-binomial sum",
        "proved", None, ({"M": 40},), _exact(andrews_even, "M"))
    add("andrews-odd",
        "staircase-binomial sum at odd offset equals an alternating "
        "central-binomial sum",
        "proved", None, ({"M": 40},), _exact(andrews_odd, "M"))
    add("rogers-even",
        "limit of the even staircase-binomial sum is a modulus-20 product",
        "proved", "agree_order", ({},),
        product_check(lambda o: rogers_sum(0, o), ROGERS_PRODUCTS["even"]))
    add("rogers-odd",
        "limit of the odd staircase-binomial sum is a modulus-20 product",
        "proved", "agree_order", ({},),
        product_check(lambda o: rogers_sum(1, o), ROGERS_PRODUCTS["odd"]))
    add("bressoud79-a",
        "double sum over mixed q and q^2 blocks equals a quotient of "
        "triple products",
        "proved", "agree_order", ({},),
        product_check(lambda o: bressoud79_sum("a", o),
                      BRESSOUD79_PRODUCTS["a"]))
    add("bressoud79-b",
        "the companion double sum with linear exponent corrections",
        "proved", "agree_order", ({},),
        product_check(lambda o: bressoud79_sum("b", o),
                      BRESSOUD79_PRODUCTS["b"]))

    add("capparelli-analytic",
        "double sum over q and q^3 blocks with doubled quadratic "
        "exponent equals a positive triple product",
        "proved", "agree_order", ({},),
        lambda params, order, ceiling:
            BuiltCheck(*capparelli_analytic(order), order))
    add("capparelli-finite-43",
        "bounded form of the doubled-exponent double sum equals a "
        "staircase-product single sum",
        "proved", None, ({"N": 24},), _pair(cap43, cap43_rhs, "N"))
    add("capparelli-reflected-even",
        "reflected bounded form, even block sizes, equals its "
        "staircase-product single sum",
        "proved", None, ({"M": 12},),
        _pair(cap_reflected_even, cap_reflected_even_rhs, "M"))
    add("capparelli-reflected-odd",
        "reflected bounded form, odd block sizes, equals its "
        "staircase-product single sum",
        "proved", None, ({"M": 12},),
        _pair(cap_reflected_odd, cap_reflected_odd_rhs, "M"))
    add("capparelli-reflected-even-limit",
        "limit of the even reflected form is a modulus-48 product",
        "proved", "agree_order", ({},),
        stabilized_check(lambda M, o: cap_reflected_even(M, window=o),
                         lambda o: ProductSpec.parse(CAP_EVEN_LIMIT).expand(o)))
    add("capparelli-reflected-odd-limit",
        "limit of the odd reflected form is a modulus-48 product",
        "proved", "agree_order", ({},),
        stabilized_check(lambda M, o: cap_reflected_odd(M, window=o),
                         lambda o: ProductSpec.parse(CAP_ODD_LIMIT).expand(o)))
    add("capparelli-finite-71",
        "bounded multinomial sum equals a theta-like single sum of "
        "q^3 binomials",
        "proved", None, ({"N": 24},), _pair(cap71, cap71_rhs, "N"))
    add("capparelli-reflected-71",
        "reflected bounded multinomial sum equals the matching "
        "single sum",
        "proved", None, ({"N": 24},),
        _pair(cap71_reflected, cap71_reflected_rhs, "N"))
    add("capparelli-reflected-71-limit",
        "limit of the reflected multinomial sum collapses to "
        "1/(q;q^3)",
        "proved", "agree_order", ({},),
        stabilized_check(lambda N, o: cap71_reflected(N, window=o),
                         lambda o: ProductSpec.parse("1/(q;q^3)").expand(o)))

    def eqid_build(params, order, ceiling):
        max_L = params["max_L"]
        fails = eqid_sweep(max_L)
        dense = [0] * (max_L + 1)
        for L in fails:
            dense[L] = 1
        lhs = LaurentSeries(0, dense, max_L, exact=False)
        return BuiltCheck(lhs, LaurentSeries.zero(), max_L,
                          note="packed digit sweep; a discrepancy at "
                               "exponent L marks a failing index")
    add("eqid",
        "three-binomial alternating Laurent combination vanishes for "
        "every index L",
        "proved", None, ({"max_L": 300},), eqid_build)

    add("kr-finite-vs-recursion",
        "family 4 bounded sum satisfies its four-term recursion",
        "proved", None, ({"N": 40},),
        _pair(lambda N: kr_finite(4, N), s_recursion, "N"))

    def partitions_build(params, order, ceiling):
        N, cap = params["N"], params["size_cap"]
        lhs = po.generating_polynomial(po.GAP23, N, max_total=cap)
        return BuiltCheck(lhs, kr_finite(4, N), cap)
    add("kr-partitions",
        "counts of gap-constrained partitions with bounded parts match "
        "the family 4 bounded sum",
        "proved", None, ({"N": 12, "size_cap": 50},), partitions_build)

    def motions_build(params, order, ceiling):
        N = params["N"]
        total = LaurentSeries.zero()
        for m in range(0, N + 2):
            for n in range(0, N // 2 + 2):
                for lam in po.generate_by_motions(m, n, N):
                    total = total.add(LaurentSeries.monomial(sum(lam)))
        return BuiltCheck(total, kr_finite(4, N), None)
    add("kr-motions",
        "partitions grown by staircase motions from minimal "
        "configurations exhaust the gap-constrained set",
        "proved", None, ({"N": 10},), motions_build)

    for i in range(1, 6):
        add(f"kr-limit-{i}",
            f"family {i} bounded sums stabilize to the conjectured "
            "modulus-9 product",
            "conjectural", "kr_limit_order", ({},),
            stabilized_check(
                lambda k, o, i=i: kr_finite(i, k, window=o),
                lambda o, i=i: kr_product(i, o)))

    for i in (4, 5):
        for c in (0, 1, 2):
            add(f"rk-sum-{i}-{c}mod3",
                f"reflected family {i} sum on class {c} mod 3 equals "
                "its single-binomial double sum, exactly",
                "proved", None, ({"M": 12},),
                _pair(lambda M, i=i, c=c: rl.rk_finite(i, 3 * M + c),
                      lambda M, i=i, c=c: rl.rk_ab_finite(i, c, M), "M"))
    for i in (1, 2, 3):
        for c in (0, 1, 2):
            def build(params, order, ceiling, i=i, c=c):
                series, idx = rl.rk_limit(i, c, order, ceiling)
                return BuiltCheck(series, rl.rk_ab_infinite(i, c, order),
                                  order, note=f"stabilized at index {idx}")
            add(f"rk-sum-{i}-{c}mod3",
                f"stabilized reflected family {i} limit on class {c} "
                "mod 3 equals its single a,b-sum",
                "proved", "limit_order", ({},), build)

    for (i, c), text in sorted(rl.MOD45_PRODUCTS.items()):
        def build(params, order, ceiling, i=i, c=c, text=text):
            series, idx = rl.rk_limit(i, c, order, ceiling)
            return BuiltCheck(series, ProductSpec.parse(text).expand(order),
                              order, note=f"stabilized at index {idx}")
        add(f"rk-product-{i}-{c}mod3",
            f"stabilized reflected family {i} limit on class {c} mod 3 "
            "equals the conjectured modulus-45 product",
            "conjectural", "limit_order", ({},), build)
    for i in (1, 2, 3):
        for c in (0, 2):
            def build(params, order, ceiling, i=i, c=c):
                form = params["form"]
                if form not in ("a", "b"):
                    raise ValueError("form must be a or b")
                series, idx = rl.rk_limit(i, c, order, ceiling)
                return BuiltCheck(series,
                                  rl.combo_series(i, c, form, order),
                                  order, note=f"stabilized at index {idx}")
            add(f"rk-product-{i}-{c}mod3",
                f"stabilized reflected family {i} limit on class {c} "
                "mod 3 equals a three-term theta-quotient combination "
                "(two independent forms)",
                "conjectural", "limit_order",
                ({"form": "a"}, {"form": "b"}), build)

    for i in range(1, 6):
        def build(params, order, ceiling, i=i):
            kwargs = {}
            if i == 3:
                reading = params.get("reading", "substituted")
                if reading not in ("substituted", "literal"):
                    raise ValueError("reading must be substituted or literal")
                kwargs["reading"] = reading
            lhs, rhs = rl.linear_relation_sides(i, order, ceiling, **kwargs)
            return BuiltCheck(lhs, rhs, order)
        desc = (f"three stabilized limits of family {i} satisfy a "
                "monomial-coefficient linear relation")
        if i == 3:
            desc += ("; the substituted reading holds while the literal "
                     "one does not")
            add(f"rk-linear-{i}", desc, "proved", "linear_order",
                ({"reading": "substituted"},), build)
        else:
            add(f"rk-linear-{i}", desc, "proved", "linear_order",
                ({},), build)

    add("f-general",
        "two-parameter sum at the coupled bound reproduces family 1",
        "proved", None, ({"N": 30},),
        _pair(lambda N: f_general(N + 1, (2 * N) // 3 + 1),
              lambda N: kr_finite(1, N), "N"))

    def f_rec_build(params, order, ceiling):
        N, M = params["N"], params["M"]
        if N % 3 == 0:
            raise ValueError("the recurrence requires N not divisible by 3")
        rhs = f_general(N - 1, M).add(f_general(N - 2, M - 1).scale(1, N - 1))
        return BuiltCheck(f_general(N, M), rhs, None)
    add("f-recurrence",
        "two-parameter sum satisfies its two-term recurrence off "
        "multiples of 3",
        "proved", None, ({"N": 29, "M": 20},), f_rec_build)

    return entries
