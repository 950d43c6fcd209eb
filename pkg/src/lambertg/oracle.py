"""Slow, independent reference for g(x) by bracketing bisection.

Shares nothing with the Halley solver in :mod:`lambertg.core`; agreement
between the two is the main accuracy evidence in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["Bracket", "bracket", "oracle_g", "MAX_BISECTIONS"]

MAX_BISECTIONS = 200


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float


def _defect(x: float, y: float) -> float:
    try:
        return math.fsum((y, math.exp(y), -x))
    except OverflowError:
        return math.inf


def bracket(x: float) -> Bracket:
    """Interval containing g(x) with a sign change of y + exp(y) - x.

    ``[x - 1, x]`` for x < 1 and ``[0, log x]`` for x >= 1.
    """
    if x < 1.0:
        return Bracket(x - 1.0, x)
    hi = math.log(x)
    # exp(log x) can land just under x for large x; nudge up until the sign is right
    while _defect(x, hi) < 0.0:
        hi = math.nextafter(hi, math.inf)
    return Bracket(0.0, hi)


def oracle_g(x: float) -> float:
    """Bisect :func:`bracket` down to one ulp (or 200 halvings).

    Once the interval is a single ulp wide its float midpoint is one of the
    two endpoints; the one with the smaller defect is returned.
    """
    b = bracket(x)
    lo, hi = b.lo, b.hi
    d_lo, d_hi = _defect(x, lo), _defect(x, hi)
    if d_lo == 0.0:
        return lo
    if d_hi == 0.0:
        return hi
    for _ in range(MAX_BISECTIONS):
        mid = lo + 0.5 * (hi - lo)
        if hi - lo <= math.ulp(mid) or mid in (lo, hi):
            break
        d = _defect(x, mid)
        if d == 0.0:
            return mid
        if d < 0.0:
            lo, d_lo = mid, d
        else:
            hi, d_hi = mid, d
    if hi - lo <= math.ulp(lo + 0.5 * (hi - lo)):
        return lo if -d_lo <= d_hi else hi
    return lo + 0.5 * (hi - lo)
