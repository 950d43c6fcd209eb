"""Evaluation of g(x) = log(W(exp(x))), the real solution y of y + exp(y) = x.

The solver starts from a piecewise initial estimate and refines it with a
fixed number of Halley steps on h(y) = y + exp(y) - x.  Nothing here ever
forms exp(x), so the whole finite double range is handled without overflow.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Union

__all__ = [
    "EXP_ARG_MAX",
    "FixedIterations",
    "ResidualTolerance",
    "EvalPolicy",
    "DEFAULT_POLICY",
    "Evaluation",
    "HalleyState",
    "initial_estimate",
    "residual",
    "halley_step",
    "evaluate",
    "g",
    "derivative",
    "second_derivative",
]


def _largest_finite_exp_arg() -> float:
    arg = math.log(sys.float_info.max)
    while True:
        nxt = math.nextafter(arg, math.inf)
        try:
            math.exp(nxt)
        except OverflowError:
            return arg
        arg = nxt


#: Largest double whose exponential is finite (about 709.78).
EXP_ARG_MAX = _largest_finite_exp_arg()

_E = math.e
_SLOPE = (1.0 + _E) / (2.0 * _E)


@dataclass(frozen=True)
class FixedIterations:
    """Run exactly ``count`` Halley steps with no convergence test."""

    count: int = 4

    def __post_init__(self):
        if isinstance(self.count, bool) or not isinstance(self.count, int):
            raise TypeError(f"count must be an int, got {self.count!r}")
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")

    @property
    def budget(self) -> int:
        return self.count


@dataclass(frozen=True)
class ResidualTolerance:
    """Stop once ``|h(y)| <= tol * max(1, |x|)`` or after ``max_iterations`` steps."""

    tol: float
    max_iterations: int = 50

    def __post_init__(self):
        if not (math.isfinite(self.tol) and self.tol >= 0):
            raise ValueError(f"tol must be finite and >= 0, got {self.tol!r}")
        if isinstance(self.max_iterations, bool) or not isinstance(self.max_iterations, int):
            raise TypeError(f"max_iterations must be an int, got {self.max_iterations!r}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")

    @property
    def budget(self) -> int:
        return self.max_iterations


EvalPolicy = Union[FixedIterations, ResidualTolerance]

DEFAULT_POLICY = FixedIterations(4)


@dataclass(frozen=True)
class Evaluation:
    argument: float
    value: float
    iterations_used: int
    residual: float


def _exp_pair(y: float) -> tuple[float, float]:
    """Return (exp(y), exp(y) - 1) from a single transcendental call."""
    if y < -1.0:
        exp_y = math.exp(y)
        return exp_y, exp_y - 1.0
    em1 = math.expm1(y)
    return 1.0 + em1, em1


@dataclass(frozen=True)
class HalleyState:
    """An iterate with its exponential cached, so each step costs one exp.

    ``expm1_y`` is kept alongside ``exp_y`` because near y = 0 the residual
    needs the digits that ``exp(y)`` rounds away.
    """

    y: float
    exp_y: float
    expm1_y: float

    @classmethod
    def at(cls, y: float) -> "HalleyState":
        """Build a coherent state, clamping ``y`` so that ``exp(y)`` stays finite."""
        y = min(y, EXP_ARG_MAX)
        return cls(y, *_exp_pair(y))


def initial_estimate(x: float) -> float:
    """Crude starting point: x below -e, log(x) above e, a straight line between.

    The line joins (-e, -e) and (e, 1), so the estimate is continuous.
    """
    if x <= -_E:
        return x
    if x >= _E:
        return math.log(x)
    return -_E + (x + _E) * _SLOPE


def _h(x: float, y: float, expm1_y: float) -> float:
    # fsum keeps the sum correctly rounded; the terms nearly cancel near the root
    try:
        return math.fsum((y, expm1_y, 1.0, -x))
    except OverflowError:
        return math.copysign(math.inf, expm1_y - x)


def residual(x: float, y: float) -> float:
    """Return y + exp(y) - x.  Infinite when exp(y) overflows."""
    if y > EXP_ARG_MAX:
        return math.inf
    return _h(x, y, _exp_pair(y)[1])


def _step(x: float, y: float, exp_y: float, expm1_y: float) -> float:
    h = _h(x, y, expm1_y)
    if h == 0.0:
        return y
    dh = 1.0 + exp_y
    if math.isinf(h):
        # only reachable from states far from the root; Newton step term by term
        return y - (y / dh + exp_y / dh - x / dh)
    # 2*h*h' / (2*h'^2 - h*h'') divided through by 2*h'; avoids squaring exp(y)
    denom = dh - 0.5 * h * (exp_y / dh)
    if denom > 0.0:
        y_next = y - h / denom
        if math.isfinite(y_next):
            return y_next
    return y - h / dh


def halley_step(x: float, state: HalleyState) -> HalleyState:
    """One Halley refinement of ``state`` towards the root of y + exp(y) - x.

    Falls back to a Newton step when the Halley denominator is not positive,
    which only happens for iterates far from the root.
    """
    y_next = _step(x, state.y, state.exp_y, state.expm1_y)
    if y_next == state.y:
        return state
    return HalleyState.at(y_next)


def evaluate(x: float, policy: EvalPolicy = DEFAULT_POLICY) -> Evaluation:
    """Compute g(x) under ``policy``.

    Parameters
    ----------
    x : float
        Any double, including infinities and NaN.
    policy : FixedIterations or ResidualTolerance
        Stopping rule for the refinement. The default runs four Halley steps,
        which is enough for double precision on |x| <= 1e6 and beyond.

    Returns
    -------
    Evaluation
        The computed value together with the number of steps taken and the
        residual y + exp(y) - x at the returned value.
    """
    x = float(x)
    if not math.isfinite(x):
        return Evaluation(x, x, 0, math.nan)

    y = min(initial_estimate(x), EXP_ARG_MAX)
    exp_y, expm1_y = _exp_pair(y)
    if isinstance(policy, FixedIterations):
        for _ in range(policy.count):
            y_next = _step(x, y, exp_y, expm1_y)
            if y_next != y:
                y = min(y_next, EXP_ARG_MAX)
                exp_y, expm1_y = _exp_pair(y)
        return Evaluation(x, y, policy.count, _h(x, y, expm1_y))

    if isinstance(policy, ResidualTolerance):
        threshold = policy.tol * max(1.0, abs(x))
        h = _h(x, y, expm1_y)
        used = 0
        while used < policy.max_iterations and abs(h) > threshold:
            y_next = _step(x, y, exp_y, expm1_y)
            used += 1
            if y_next == y:
                break
            y = min(y_next, EXP_ARG_MAX)
            exp_y, expm1_y = _exp_pair(y)
            h = _h(x, y, expm1_y)
        return Evaluation(x, y, used, h)

    raise TypeError(f"unsupported policy {policy!r}")


def g(x: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Shorthand for ``evaluate(x, policy).value``."""
    return evaluate(x, policy).value


def derivative(x: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """g'(x) = 1 / (1 + exp(g(x))), which lies in (0, 1]."""
    return 1.0 / (1.0 + math.exp(g(x, policy)))


def second_derivative(x: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """g''(x) = -exp(g) / (1 + exp(g))**3, never positive."""
    exp_g = math.exp(g(x, policy))
    d = 1.0 / (1.0 + exp_g)
    # ordered so that (1 + exp_g)**3 is never formed
    return -(exp_g * d) * d * d
