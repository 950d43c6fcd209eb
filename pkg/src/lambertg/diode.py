"""Explicit solution of the simplified diode relation a*exp(b*U) + b*U = V.

With y = b*U + log(a) and x = V + log(a) the relation becomes y + exp(y) = x,
so U = (g(V + log a) - log a) / b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DEFAULT_POLICY, EvalPolicy, derivative, g

__all__ = ["DiodeParams", "SweepSpec", "solve_u", "du_dv", "sweep_curve"]


@dataclass(frozen=True)
class DiodeParams:
    a: float
    b: float

    def __post_init__(self):
        for name in ("a", "b"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"diode parameter {name} must be finite and > 0, got {value!r}")

    @property
    def log_a(self) -> float:
        return math.log(self.a)


@dataclass(frozen=True)
class SweepSpec:
    """Linearly spaced V values from ``v_from`` to ``v_to`` inclusive."""

    v_from: float
    v_to: float
    points: int

    def __post_init__(self):
        if not (math.isfinite(self.v_from) and math.isfinite(self.v_to)):
            raise ValueError("sweep endpoints must be finite")
        if not self.v_from < self.v_to:
            raise ValueError(f"need v_from < v_to, got {self.v_from} >= {self.v_to}")
        if isinstance(self.points, bool) or not isinstance(self.points, int) or self.points < 2:
            raise ValueError(f"points must be an int >= 2, got {self.points!r}")

    def values(self) -> list[float]:
        n = self.points - 1
        span = self.v_to - self.v_from
        # endpoints are hit exactly
        return [self.v_from + span * i / n if i < n else self.v_to for i in range(n + 1)]


def _shifted(params: DiodeParams, v: float) -> float:
    x = v + params.log_a
    if not math.isfinite(x):
        raise ValueError(f"v + log(a) must be finite, got v={v!r}, a={params.a!r}")
    return x


def solve_u(params: DiodeParams, v: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """U solving a*exp(b*U) + b*U = v."""
    return (g(_shifted(params, v), policy) - params.log_a) / params.b


def du_dv(params: DiodeParams, v: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """dU/dV = g'(v + log a) / b, always positive."""
    return derivative(_shifted(params, v), policy) / params.b


def sweep_curve(
    params: DiodeParams, spec: SweepSpec, policy: EvalPolicy = DEFAULT_POLICY
) -> list[tuple[float, float]]:
    return [(v, solve_u(params, v, policy)) for v in spec.values()]
