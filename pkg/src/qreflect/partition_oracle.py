"""Brute-force partition counting for cross-checking sum sides.

Partitions are ascending tuples of parts.  A ConstraintProfile bundles
the admissibility rules for one family of partitions; enumeration is a
depth-first walk that keeps parts weakly increasing, so the profile only
has to judge whether one more part may be appended.

The profile shipped here ("gap23") covers partitions with no ones, no
three parts inside any window of width two, and the extra congruence
rule that parts at distance at most one must add up to 2 mod 3.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .series import LaurentSeries


@dataclass(frozen=True)
class ConstraintProfile:
    name: str
    min_part: int = 1
    # extend_ok(prefix, part): may an ascending prefix be extended?
    extend_ok: callable = field(default=lambda prefix, part: True)

    def admits(self, parts):
        parts = tuple(parts)
        if any(p < self.min_part for p in parts):
            return False
        for i in range(len(parts)):
            if i and parts[i] < parts[i - 1]:
                return False
            if not self.extend_ok(parts[:i], parts[i]):
                return False
        return True


def _gap23_extend_ok(prefix, part):
    if prefix:
        last = prefix[-1]
        if part < last:
            return False
        if part - last <= 1 and (part + last) % 3 != 2:
            return False
    if len(prefix) >= 2 and part - prefix[-2] < 3:
        return False
    return True


GAP23 = ConstraintProfile("gap23", min_part=2, extend_ok=_gap23_extend_ok)

PROFILES = {GAP23.name: GAP23}


def enumerate_partitions(profile, total, max_part):
    """All admissible ascending partitions of the exact total."""
    out = []

    def walk(prefix, remaining, smallest):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(smallest, min(max_part, remaining) + 1):
            if not profile.extend_ok(tuple(prefix), part):
                continue
            prefix.append(part)
            walk(prefix, remaining - part, part)
            prefix.pop()

    walk([], total, profile.min_part)
    return sorted(out)


def count_partitions(profile, total, max_part):
    return len(enumerate_partitions(profile, total, max_part))


def generating_polynomial(profile, max_part, max_total=None):
    """Sum of q^|partition| over admissible partitions with bounded parts.

    Without a total bound the result is exact; profiles here admit only
    finitely many partitions once the parts are capped.  With a bound the
    series is truncated at max_total.
    """
    counts = {}

    def walk(prefix, size, smallest):
        counts[size] = counts.get(size, 0) + 1
        for part in range(smallest, max_part + 1):
            if max_total is not None and size + part > max_total:
                break
            if not profile.extend_ok(tuple(prefix), part):
                continue
            prefix.append(part)
            walk(prefix, size + part, part)
            prefix.pop()

    walk([], 0, profile.min_part)
    return LaurentSeries.from_coeffs(counts.items(), exact=max_total is None,
                                     valid_to=max_total)


def count_by_parts(profile, total, max_part):
    """Counts of admissible partitions of the total, keyed by length."""
    out = {}
    for p in enumerate_partitions(profile, total, max_part):
        out[len(p)] = out.get(len(p), 0) + 1
    return out


# -- the staircase model ------------------------------------------------------
#
# Admissible partitions with m "single" parts and n adjacent "pairs" are
# generated from a minimal configuration by local motions.  A pair lives
# in one of two shapes, (3k-1, 3k) or (3k+1, 3k+1), alternating between
# them as it climbs; one unit of pair motion adds 3 to the size.  A
# single climbs one step at a time.  When a pair's landing spot has a
# single sitting right above it the pair jumps the single, which drops
# by three to the footprint the pair vacated, and the pair carries on to
# the next landing; one motion unit may jump several singles in a row.
# Shapes are encoded by a half-step index h: even h is (3k-1, 3k) and
# odd h is (3k+1, 3k+1), with k = h // 2.

def minimal_configuration(m, n):
    """The least admissible partition with n pairs and m singles."""
    parts = []
    for k in range(1, n + 1):
        parts.extend((3 * k - 1, 3 * k))
    for i in range(1, m + 1):
        parts.append(3 * n + 2 * i)
    return tuple(parts)


def _shape_parts(h):
    k, odd = divmod(h, 2)
    if odd:
        return (3 * k + 1, 3 * k + 1)
    return (3 * k - 1, 3 * k)


def _realize(pair_hs, singles):
    parts = []
    for h in pair_hs:
        parts.extend(_shape_parts(h))
    parts.extend(singles)
    return tuple(sorted(parts))


def _valid_state(pair_hs, singles, profile, max_part):
    for a, b in zip(singles, singles[1:]):
        if b - a < 2:
            return False
    parts = _realize(pair_hs, singles)
    if parts and parts[-1] > max_part:
        return False
    return profile.admits(parts)


def _clearance(h):
    # highest spot a landing needs free: one above the top for (3k-1, 3k),
    # two above for (3k+1, 3k+1), where the window rule reaches further
    bot, top = _shape_parts(h)
    return top + 1 if h % 2 == 0 else top + 2


def _advance_pair(pair_hs, j, singles):
    """One unit of motion for pair j, jumping blocked singles as it goes.

    The pair advances one half-step plus one more per single it jumps;
    each jumped single drops by three.  The landing is the fixed point of
    that trade, so the size always grows by exactly three.
    """
    hs = list(pair_hs)
    h0 = hs[j]
    old_top = _shape_parts(h0)[1] if h0 > 0 else 0
    above = [s for s in singles if s > old_top]
    h = h0 + 1
    while True:
        jumped = sum(1 for s in above if s <= _clearance(h))
        if h == h0 + 1 + jumped:
            break
        h = h0 + 1 + jumped
    cut = _clearance(h)
    hs[j] = h
    bumped = sorted(s - 3 if old_top < s <= cut else s for s in singles)
    return tuple(sorted(hs)), tuple(bumped)


def generate_by_motions(m, n, max_part, profile=GAP23):
    """All partitions reachable from the minimal configuration by motions
    that keep the realized partition admissible and capped at max_part."""
    start = (tuple(2 * k for k in range(1, n + 1)),
             tuple(3 * n + 2 * i for i in range(1, m + 1)))
    if not _valid_state(*start, profile, max_part):
        return set()
    seen = {start}
    frontier = [start]
    results = set()
    while frontier:
        pair_hs, singles = frontier.pop()
        results.add(_realize(pair_hs, singles))
        moves = []
        for i, s in enumerate(singles):
            moves.append((pair_hs,
                          tuple(sorted(singles[:i] + (s + 1,) + singles[i + 1:]))))
        for j in range(len(pair_hs)):
            moves.append(_advance_pair(pair_hs, j, singles))
        for state in moves:
            if state in seen:
                continue
            seen.add(state)
            if _valid_state(*state, profile, max_part):
                frontier.append(state)
    return results
