"""Exact truncated Laurent series over arbitrary-precision integers.

A LaurentSeries stores dense integer coefficients for exponents
low..valid_to.  When ``exact`` is true the value is a complete Laurent
polynomial and every coefficient outside the stored range is zero; when
false the coefficients above ``valid_to`` are unknown and asking for them
is a hard error (silent truncation is the classic bug in this business).
Coefficients below ``low`` are zero in both cases: every operation here
tracks lows pessimistically, so nothing nonzero can hide underneath.

All values are immutable; operations return fresh objects.
"""
from __future__ import annotations


class WindowError(Exception):
    """Raised when a coefficient is requested beyond a series' validity."""


class NotExactError(Exception):
    """Raised when an operation needs a complete polynomial but got a
    truncated series."""


class LaurentSeries:
    __slots__ = ("low", "coeffs", "valid_to", "exact")

    def __init__(self, low, coeffs, valid_to=None, exact=True):
        coeffs = list(coeffs)
        if exact:
            # canonical form: trim zeros on both ends, zero -> (0, [], -1)
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            k = 0
            while k < len(coeffs) and coeffs[k] == 0:
                k += 1
            coeffs = coeffs[k:]
            low += k
            if not coeffs:
                low = 0
            valid_to = low + len(coeffs) - 1
        else:
            if valid_to is None:
                valid_to = low + len(coeffs) - 1
            assert len(coeffs) == valid_to - low + 1
        self.low = low
        self.coeffs = coeffs
        self.valid_to = valid_to
        self.exact = exact

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return LaurentSeries(0, [], exact=True)

    @staticmethod
    def monomial(exponent, coefficient=1):
        if coefficient == 0:
            return LaurentSeries.zero()
        return LaurentSeries(exponent, [coefficient], exact=True)

    @staticmethod
    def one():
        return LaurentSeries(0, [1], exact=True)

    @staticmethod
    def from_coeffs(pairs, exact=True, valid_to=None):
        """Build from an iterable of (exponent, coefficient) pairs."""
        d = {}
        for k, v in pairs:
            d[k] = d.get(k, 0) + v
        if not d:
            if exact:
                return LaurentSeries.zero()
            return LaurentSeries(0, [0] * (valid_to + 1), valid_to, exact=False)
        lo, hi = min(d), max(d)
        if not exact and valid_to is not None:
            hi = valid_to
        cs = [d.get(k, 0) for k in range(lo, hi + 1)]
        return LaurentSeries(lo, cs, None if exact else hi, exact)

    # -- access ------------------------------------------------------------

    def coefficient(self, k):
        if k < self.low:
            return 0
        if k > self.valid_to:
            if self.exact:
                return 0
            raise WindowError(
                f"coefficient of q^{k} requested but series is only valid to q^{self.valid_to}")
        return self.coeffs[k - self.low]

    def degree(self):
        """Largest exponent with a nonzero coefficient (exact input only)."""
        if not self.exact:
            raise NotExactError("degree of a truncated series is unknown")
        return self.valid_to if self.coeffs else None

    def is_zero(self):
        if self.exact:
            return not self.coeffs
        return all(c == 0 for c in self.coeffs)

    def support(self):
        return [self.low + i for i, c in enumerate(self.coeffs) if c]

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.exact and other.exact:
            return self.low == other.low and self.coeffs == other.coeffs
        # inexact comparison: same window and same values on it
        return (self.exact == other.exact and self.valid_to == other.valid_to
                and first_discrepancy(self, other, self.valid_to) is None)

    def __hash__(self):
        return hash((self.low, tuple(self.coeffs), self.exact))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = self.low + i
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{k}" if c != 1 else f"q^{k}")
            if len(terms) > 8:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        tail = "" if self.exact else f" + O(q^{self.valid_to + 1})"
        return f"<{body}{tail}>"

    # -- arithmetic --------------------------------------------------------

    def add(self, other):
        a, b = self, other
        exact = a.exact and b.exact
        if exact:
            if not a.coeffs:
                return b
            if not b.coeffs:
                return a
            lo = min(a.low, b.low)
            hi = max(a.valid_to, b.valid_to)
        else:
            lo = min(a.low, b.low)
            hi = min(a.valid_to if not a.exact else b.valid_to,
                     b.valid_to if not b.exact else a.valid_to)
            if hi < lo:
                # empty window; below it both operands are below their lows
                return LaurentSeries(hi + 1, [], hi, exact=False)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(a.coeffs):
            k = a.low + i
            if lo <= k <= hi:
                out[k - lo] += c
        for i, c in enumerate(b.coeffs):
            k = b.low + i
            if lo <= k <= hi:
                out[k - lo] += c
        return LaurentSeries(lo, out, None if exact else hi, exact)

    def negate(self):
        return LaurentSeries(self.low, [-c for c in self.coeffs],
                             None if self.exact else self.valid_to, self.exact)

    def sub(self, other):
        return self.add(other.negate())

    def scale(self, coefficient, exponent=0):
        """Multiply by coefficient * q^exponent."""
        if coefficient == 0:
            return LaurentSeries.zero() if self.exact else \
                LaurentSeries(self.low + exponent,
                              [0] * len(self.coeffs),
                              self.valid_to + exponent, exact=False)
        return LaurentSeries(self.low + exponent,
                             [coefficient * c for c in self.coeffs],
                             None if self.exact else self.valid_to + exponent,
                             self.exact)

    def mul(self, other):
        a, b = self, other
        exact = a.exact and b.exact
        if a.is_zero() or b.is_zero():
            if exact:
                return LaurentSeries.zero()
        lo = a.low + b.low
        if exact:
            if not a.coeffs or not b.coeffs:
                return LaurentSeries.zero()
            hi = a.valid_to + b.valid_to
        else:
            va = a.valid_to + b.low if not a.exact else None
            vb = b.valid_to + a.low if not b.exact else None
            hi = min(v for v in (va, vb) if v is not None)
        out = [0] * (hi - lo + 1)
        # convolve the shorter operand into the longer one
        if len(a.coeffs) > len(b.coeffs):
            a, b = b, a
        width = hi - lo
        for i, ca in enumerate(a.coeffs):
            if ca == 0:
                continue
            base = a.low + i + b.low - lo
            top = min(len(b.coeffs), width - base + 1)
            if top <= 0:
                continue
            if ca == 1:
                for j in range(top):
                    out[base + j] += b.coeffs[j]
            else:
                for j in range(top):
                    out[base + j] += ca * b.coeffs[j]
        return LaurentSeries(lo, out, None if exact else hi, exact)

    def truncate(self, order):
        """Restrict validity to exponents <= order.  Truncation can only
        shrink a window, never extend one."""
        if self.exact:
            if self.valid_to <= order:
                return self
        elif order > self.valid_to:
            raise WindowError(
                f"cannot extend validity from q^{self.valid_to} to q^{order}")
        if order < self.low:
            return LaurentSeries(order + 1, [], order, exact=False)
        out = [self.coefficient(k) for k in range(self.low, order + 1)]
        return LaurentSeries(self.low, out, order, exact=False)

    def invert(self, order):
        """Multiplicative inverse as a series valid to the given order.

        The lowest nonzero coefficient must be a unit (+1 or -1).
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero series")
        lead_idx = next(i for i, c in enumerate(self.coeffs) if c != 0)
        lead = self.coeffs[lead_idx]
        if lead not in (1, -1):
            raise ValueError(f"leading coefficient {lead} is not a unit")
        v = self.low + lead_idx
        n = order + v  # number of coefficients of the shifted inverse - 1
        if n < 0:
            # the inverse starts at q^-v, above the requested window
            return LaurentSeries(order + 1, [], order, exact=False)
        # work with the unit-normalized power series part
        avail = self.valid_to - v
        src = self.coeffs[lead_idx:]
        inv = [0] * (n + 1)
        inv[0] = lead  # 1/lead == lead for units
        for k in range(1, n + 1):
            if not self.exact and k > avail:
                raise WindowError(
                    f"inverting to order {order} needs input valid to "
                    f"q^{order + v + v}, have q^{self.valid_to}")
            s = 0
            for j in range(1, min(k, len(src) - 1) + 1):
                cj = src[j]
                if cj:
                    s += cj * inv[k - j]
            inv[k] = -lead * s
        return LaurentSeries(-v, inv, order, exact=False)

    def reflect(self, e):
        """Return q^e * f(1/q) for an exact Laurent polynomial f.

        The coefficient of q^k in the result is the input coefficient of
        q^(e-k).
        """
        if not self.exact:
            raise NotExactError("reflection of a truncated series is meaningless")
        if not self.coeffs:
            return LaurentSeries.zero()
        return LaurentSeries(e - self.valid_to, self.coeffs[::-1], exact=True)

    def substitute_power(self, e):
        """Substitute q -> q^e (e a positive integer)."""
        assert e >= 1
        if e == 1:
            return self
        if not self.coeffs:
            return self if self.exact else \
                LaurentSeries(self.low * e, [], self.low * e - 1, exact=False)
        out = [0] * ((len(self.coeffs) - 1) * e + 1)
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        if self.exact:
            return LaurentSeries(self.low * e, out, exact=True)
        # window scales: exponents k*e for low <= k <= valid_to are known,
        # and so is everything between (gaps are zero)
        return LaurentSeries(self.low * e, out, self.low * e + len(out) - 1,
                             exact=False)


# -- module-level helpers ---------------------------------------------------

def add(a, b):
    return a.add(b)


def sub(a, b):
    return a.sub(b)


def negate(a):
    return a.negate()


def mul(a, b):
    return a.mul(b)


def invert(a, order):
    return a.invert(order)


def reflect(p, e):
    return p.reflect(e)


def monomial(exponent, coefficient=1):
    return LaurentSeries.monomial(exponent, coefficient)


def coefficient(a, k):
    return a.coefficient(k)


def first_discrepancy(a, b, order):
    """Smallest exponent <= order where a and b differ, or None.

    Both series must be valid through the requested order.
    """
    for s in (a, b):
        if not s.exact and s.valid_to < order:
            raise WindowError(
                f"comparison to order {order} but operand only valid to "
                f"q^{s.valid_to}")
    lo = min(a.low, b.low)
    for k in range(lo, order + 1):
        if a.coefficient(k) != b.coefficient(k):
            return k
    return None


def agree_to_order(a, b, order):
    return first_discrepancy(a, b, order) is None


def series_sum(items):
    total = LaurentSeries.zero()
    for s in items:
        total = total.add(s)
    return total


class BivariateSeries:
    """A series in q with one extra grading variable; slice j is the
    coefficient of the j-th power of the statistic."""

    __slots__ = ("slices",)

    def __init__(self, slices):
        self.slices = list(slices)
        while self.slices and self.slices[-1].is_zero():
            self.slices.pop()

    def slice(self, j):
        if 0 <= j < len(self.slices):
            return self.slices[j]
        return LaurentSeries.zero()

    def coefficient(self, j, k):
        return self.slice(j).coefficient(k)

    def total(self):
        """Set the statistic to 1: the plain sum of all slices."""
        return series_sum(self.slices)

    @staticmethod
    def from_terms(terms):
        """terms: iterable of (x_degree, LaurentSeries)."""
        slices = []
        for j, s in terms:
            while len(slices) <= j:
                slices.append(LaurentSeries.zero())
            slices[j] = slices[j].add(s)
        return BivariateSeries(slices)
