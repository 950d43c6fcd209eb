"""Principal-branch Lambert W for positive arguments, as exp(g(log z))."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DEFAULT_POLICY, EvalPolicy, g

__all__ = ["WResult", "w_principal"]


@dataclass(frozen=True)
class WResult:
    argument: float
    value: float


def w_principal(z: float, policy: EvalPolicy = DEFAULT_POLICY) -> WResult:
    """W(z) for finite z > 0.

    Computed as exp(g(log z)) followed by one Newton correction taken directly
    in w, which restores the relative accuracy lost in the log/exp round trip
    for very small or very large z.

    Raises
    ------
    ValueError
        If z is not positive or not finite. Arguments in (-1/e, 0] lie in the
        two-branch region and are not handled here.
    """
    z = float(z)
    if not math.isfinite(z):
        raise ValueError(f"W(z) requires a finite argument, got {z!r}")
    if z <= 0.0:
        raise ValueError(
            f"W(z) is only provided for z > 0 (principal branch, single real value); got {z!r}"
        )
    w = math.exp(g(math.log(z), policy))
    # exp(log z) alone costs about |log z| ulps; one Newton step on w*exp(w) = z
    # written as w - z*exp(-w) recovers them
    w -= (w - z * math.exp(-w)) / (1.0 + w)
    return WResult(z, w)
