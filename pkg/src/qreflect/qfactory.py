"""Gaussian binomials, Pochhammer products, and product specifications.

Finite objects come back exact; infinite products are truncated to a
requested order and marked as such.  The windowed binomial variant exists
for the large-index regime where only the bottom of the polynomial is
wanted and building the whole thing would be wasteful.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .series import LaurentSeries


@lru_cache(maxsize=None)
def _qbinomial_coeffs(N, n):
    """Dense coefficient tuple of the Gaussian binomial [N, n] in base q."""
    if n < 0 or n > N or N < 0:
        return ()
    if n == 0 or n == N:
        return (1,)
    # [N, n] = [N-1, n-1] + q^n [N-1, n]
    a = _qbinomial_coeffs(N - 1, n - 1)
    b = _qbinomial_coeffs(N - 1, n)
    out = [0] * (n * (N - n) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[n + i] += c
    return tuple(out)


def qbinomial(N, n, base=1):
    """The Gaussian binomial [N, n] in q^base, zero unless 0 <= n <= N."""
    cs = _qbinomial_coeffs(N, n)
    if not cs:
        return LaurentSeries.zero()
    s = LaurentSeries(0, list(cs), exact=True)
    return s if base == 1 else s.substitute_power(base)


def qbinomial_star(N, n, base=1):
    """Like qbinomial, except the single out-of-range value [-1, 0] is 1.

    Sums whose first binomial degenerates at the corner of the index
    region need this convention to pick up the boundary term.
    """
    if N == -1 and n == 0:
        return LaurentSeries.one()
    return qbinomial(N, n, base)


def geometric_divide(coeffs, stride):
    """Divide a dense coefficient list by (1 - q^stride), in place."""
    for i in range(stride, len(coeffs)):
        coeffs[i] += coeffs[i - stride]


def qbinomial_window(N, n, cap, base=1):
    """[N, n] in q^base computed only through exponent cap.

    Runs the product formula over dense lists of length cap+1, so the
    cost depends on the window rather than on N.  The result is exact
    when the window already holds the whole polynomial.
    """
    if n < 0 or n > N or N < 0:
        return LaurentSeries.zero()
    full_degree = base * n * (N - n)
    m = cap + 1
    if m <= 0:
        return LaurentSeries(cap + 1, [], cap, exact=False)
    d = [0] * m
    d[0] = 1
    for t in range(1, n + 1):
        s = base * t
        if s >= m:
            break
        geometric_divide(d, s)
    for t in range(1, n + 1):
        s = base * (N - n + t)
        if s >= m:
            continue
        for i in range(m - 1, s - 1, -1):
            d[i] -= d[i - s]
    if full_degree <= cap:
        return LaurentSeries(0, d[: full_degree + 1], exact=True)
    return LaurentSeries(0, d, cap, exact=False)


def pochhammer_finite(a, m, n, sign=-1, window=None):
    """Product of (1 + sign*q^(a + j*m)) over j = 0..n-1, exact.

    sign=-1 gives the standard rising product on q^a with step q^m.
    """
    out = LaurentSeries.one()
    for j in range(n):
        out = out.mul(LaurentSeries.from_coeffs([(0, 1), (a + j * m, sign)]))
        if window is not None and out.valid_to > window:
            out = out.truncate(window)
    return out


def pochhammer_infinite(a, m, order, sign=-1):
    """The same product with infinitely many factors, truncated.

    Factors starting above the order are dropped since they only touch
    higher coefficients; the result is always marked inexact.
    """
    assert m > 0 and a > 0
    out = LaurentSeries.one()
    j = 0
    while a + j * m <= order:
        out = out.mul(LaurentSeries.from_coeffs([(0, 1), (a + j * m, sign)]))
        if out.valid_to > order:
            out = out.truncate(order)
        j += 1
    cs = [out.coefficient(k) for k in range(0, order + 1)]
    return LaurentSeries(0, cs, order, exact=False)


def alternating_theta(a, b, order):
    """Sum of (-1)^k q^(k(a*k+b)/2) over all integers k, truncated."""
    assert a > 0
    pairs = []
    k = 0
    while k * (a * k - abs(b)) <= 2 * order:
        for kk in ((0,) if k == 0 else (k, -k)):
            num = kk * (a * kk + b)
            assert num % 2 == 0, "half-integer exponent"
            e = num // 2
            assert e >= 0, "negative exponent in theta sum"
            if e <= order:
                pairs.append((e, -1 if kk % 2 else 1))
        k += 1
    return LaurentSeries.from_coeffs(pairs, exact=False, valid_to=order)


# -- structured products -----------------------------------------------------

@dataclass(frozen=True)
class ProductFactor:
    sign: int        # -1 for (q^a; q^m), +1 for (-q^a; q^m)
    offset: int
    modulus: int
    placement: str   # "num" or "den"
    multiplicity: int = 1


@dataclass(frozen=True)
class ProductSpec:
    """An eta-quotient-style product of infinite Pochhammer factors."""

    factors: tuple

    def expand(self, order):
        return expand_product(self, order)

    @property
    def text(self):
        cs = self._as_bracket()
        if cs is not None:
            return "br(" + ",".join(str(c) for c in cs) + ")"
        num, den = [], []
        for part, side in ((num, "num"), (den, "den")):
            groups = {}
            for f in self.factors:
                if f.placement != side:
                    continue
                key = (f.modulus, f.sign, f.multiplicity)
                groups.setdefault(key, []).append(f.offset)
            for (mod, sign, mult), offsets in sorted(groups.items()):
                terms = ",".join(_qpow(a, sign) for a in sorted(offsets))
                g = f"({terms};{_qpow(mod, -1)})"
                if mult > 1:
                    g += f"^{mult}"
                part.append(g)
        if not num and not den:
            return "1"
        top = "".join(num) if num else "1"
        if not den:
            return top
        if len(den) == 1 and den[0].endswith(")"):
            return f"{top}/{den[0]}"
        return f"{top}/({''.join(den)})"

    def _as_bracket(self):
        num = sorted((f.sign, f.offset, f.modulus, f.multiplicity)
                     for f in self.factors if f.placement == "num")
        if num != [(-1, 45, 45, 1)]:
            return None
        den = sorted((f.sign, f.offset, f.modulus, f.multiplicity)
                     for f in self.factors if f.placement == "den")
        if len(den) != 9 or (-1, 3, 3, 1) not in den:
            return None
        offsets = sorted(o for (s, o, m, k) in den
                         if (s, m, k) == (-1, 45, 1))
        if len(offsets) != 8:
            return None
        low = offsets[:4]
        if sorted(45 - c for c in low) != offsets[4:]:
            return None
        return tuple(low)

    @staticmethod
    def parse(text):
        return parse_product(text)

    @staticmethod
    def bracket(cs):
        """The level-45 quotient used by the sum-combination tables:
        (q^45;q^45) over (q^3;q^3) and the four symmetric factor pairs."""
        assert len(cs) == 4
        factors = [ProductFactor(-1, 45, 45, "num"),
                   ProductFactor(-1, 3, 3, "den")]
        for c in cs:
            factors.append(ProductFactor(-1, c, 45, "den"))
            factors.append(ProductFactor(-1, 45 - c, 45, "den"))
        return ProductSpec(tuple(factors))


def _qpow(e, sign):
    s = "-" if sign > 0 else ""
    return f"{s}q" if e == 1 else f"{s}q^{e}"


_GROUP_RE = re.compile(
    r"\(\s*(-?q(?:\^\d+)?(?:\s*,\s*-?q(?:\^\d+)?)*)\s*;\s*(q(?:\^\d+)?)\s*\)(?:\^(\d+))?")
_BRACKET_RE = re.compile(r"^br\(\s*(\d+(?:\s*,\s*\d+){3})\s*\)$")


def _parse_qpow(tok):
    tok = tok.strip()
    sign = -1
    if tok.startswith("-"):
        sign = 1
        tok = tok[1:]
    if tok == "q":
        return sign, 1
    assert tok.startswith("q^")
    return sign, int(tok[2:])


def _parse_groups(text, placement):
    factors = []
    for mt in _GROUP_RE.finditer(text):
        _, modulus = _parse_qpow(mt.group(2))
        mult = int(mt.group(3)) if mt.group(3) else 1
        for tok in mt.group(1).split(","):
            sign, offset = _parse_qpow(tok)
            factors.append(ProductFactor(sign, offset, modulus, placement, mult))
    leftover = re.sub(r"[\s()]", "", _GROUP_RE.sub("", text))
    if leftover:
        raise ValueError(f"unparsed product text: {leftover!r}")
    return factors


def parse_product(text):
    """Parse a product written in the canonical text form.

    Accepts shapes like "1/(q^2,q^3,q^5,q^8;q^9)", "(-q^2,-q^4;q^6)",
    "(q^3;q^3)^2/((q;q)(q^6;q^6))" and the bracket shorthand
    "br(2,8,11,20)".
    """
    text = text.strip()
    mt = _BRACKET_RE.match(text)
    if mt:
        cs = tuple(int(x) for x in mt.group(1).split(","))
        return ProductSpec.bracket(cs)
    if "/" in text:
        top, bottom = text.split("/", 1)
    else:
        top, bottom = text, ""
    factors = []
    top = top.strip()
    if top != "1":
        factors.extend(_parse_groups(top, "num"))
    if bottom:
        factors.extend(_parse_groups(bottom, "den"))
    if not factors:
        raise ValueError(f"empty product spec: {text!r}")
    return ProductSpec(tuple(factors))


def expand_product(spec, order):
    """Multiply out a ProductSpec as a series valid through the order."""
    num = LaurentSeries.one()
    den = LaurentSeries.one()
    for f in spec.factors:
        p = pochhammer_infinite(f.offset, f.modulus, order, f.sign)
        for _ in range(f.multiplicity):
            if f.placement == "num":
                num = num.mul(p)
            else:
                den = den.mul(p)
    if den.exact and den == LaurentSeries.one():
        return num if not num.exact else num.truncate(order)
    return num.mul(den.invert(order)).truncate(order)


def bracket(cs, order):
    """Expand the level-45 bracket quotient for the given quadruple."""
    return expand_product(ProductSpec.bracket(cs), order)
