import math
import sys

EPS = sys.float_info.epsilon
FMAX = sys.float_info.max

# Omega constant, W(1), by fixed-point iteration u <- exp(-u); independent of
# both the Halley solver and the bisection oracle.
def _omega():
    u = 0.5
    for _ in range(200):
        u = math.exp(-u)
    return u


OMEGA = _omega()


def ulps_apart(a: float, b: float) -> float:
    """Distance between a and b in units of ulp(b)."""
    if a == b:
        return 0.0
    return abs(a - b) / math.ulp(b)


def within_oracle_tolerance(value: float, reference: float, ulps: int = 4) -> bool:
    """ulps of the reference, or ulps*eps absolute when |reference| < 1."""
    if abs(reference) < 1.0:
        return abs(value - reference) <= ulps * EPS
    return abs(value - reference) <= ulps * math.ulp(reference)
