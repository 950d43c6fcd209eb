"""Robust evaluation of log(W(exp(x))) and the quantities built on it."""

from .core import (
    DEFAULT_POLICY,
    EvalPolicy,
    Evaluation,
    FixedIterations,
    HalleyState,
    ResidualTolerance,
    derivative,
    evaluate,
    g,
    halley_step,
    initial_estimate,
    residual,
    second_derivative,
)
from .diode import DiodeParams, SweepSpec, du_dv, solve_u, sweep_curve
from .lambert_w import WResult, w_principal
from .oracle import Bracket, bracket, oracle_g

__all__ = [
    "DEFAULT_POLICY",
    "EvalPolicy",
    "Evaluation",
    "FixedIterations",
    "HalleyState",
    "ResidualTolerance",
    "derivative",
    "evaluate",
    "g",
    "halley_step",
    "initial_estimate",
    "residual",
    "second_derivative",
    "DiodeParams",
    "SweepSpec",
    "du_dv",
    "solve_u",
    "sweep_curve",
    "WResult",
    "w_principal",
    "Bracket",
    "bracket",
    "oracle_g",
]
