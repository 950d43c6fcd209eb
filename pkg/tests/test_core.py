import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lambertg.core import (
    DEFAULT_POLICY,
    EXP_ARG_MAX,
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
from lambertg.oracle import oracle_g

from conftest import EPS, FMAX, OMEGA, ulps_apart

E = math.e
finite = st.floats(allow_nan=False, allow_infinity=False)
moderate = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


# -- initial estimate ---------------------------------------------------------

@pytest.mark.parametrize("x, expected", [(-5.0, -5.0), (E, 1.0), (-E, -E), (-1e300, -1e300)])
def test_initial_estimate_endpoints(x, expected):
    assert initial_estimate(x) == expected


def test_initial_estimate_interpolates_line():
    # -e + (1 + e)^2 / (2e), evaluated with mpmath at 50 digits
    assert initial_estimate(1.0) == pytest.approx(-0.17520119364380146, abs=1e-15)
    assert initial_estimate(1.0) == pytest.approx(-E + (1 + E) ** 2 / (2 * E), abs=1e-15)


@pytest.mark.parametrize("edge", [-E, E])
def test_initial_estimate_is_continuous(edge):
    left = initial_estimate(math.nextafter(edge, -math.inf))
    right = initial_estimate(math.nextafter(edge, math.inf))
    assert abs(left - right) < 1e-14


# -- residual -----------------------------------------------------------------

def test_residual_examples():
    assert residual(1.0, 0.0) == 0.0
    assert residual(0.0, 0.0) == 1.0
    assert residual(-5.0, -5.0) == pytest.approx(math.exp(-5.0), rel=1e-15)
    assert residual(-5.0, -5.0) == pytest.approx(0.006737946999085467, rel=1e-15)


def test_residual_underflow_is_exact_difference():
    assert residual(-800.0, -801.5) == -1.5
    assert residual(-1e308, -1e308) == 0.0


def test_residual_overflow_reports_infinity():
    assert residual(0.0, 800.0) == math.inf


# -- Halley step --------------------------------------------------------------

def test_halley_step_fixed_point():
    state = HalleyState.at(0.0)
    assert halley_step(1.0, state) is state


def test_halley_step_from_minus_five():
    nxt = halley_step(-5.0, HalleyState.at(-5.0))
    # the same step evaluated with mpmath at 50 digits
    assert nxt.y == pytest.approx(-5.006693000828273, abs=1e-14)
    assert abs(nxt.y - oracle_g(-5.0)) < 1e-6


def test_halley_step_is_cubic_near_root():
    y0 = -0.859141
    root = oracle_g(0.0)
    y1 = halley_step(0.0, HalleyState.at(y0)).y
    assert y1 == pytest.approx(-0.5664532461379107, abs=1e-14)
    assert abs(y1 - root) < abs(y0 - root)
    assert abs(y1 - root) < abs(y0 - root) ** 3 * 10


def test_halley_state_caches_exponential():
    for y in (-800.0, -30.0, -1.0, -1e-20, 0.0, 3e-17, 2.5, 700.0):
        state = HalleyState.at(y)
        assert ulps_apart(state.exp_y, math.exp(y)) <= 1
        assert state.expm1_y == pytest.approx(math.expm1(y), rel=1e-15, abs=1e-300)


def test_halley_state_clamps_to_finite_exponential():
    state = HalleyState.at(1e5)
    assert state.y == EXP_ARG_MAX
    assert math.isfinite(state.exp_y)


@pytest.mark.parametrize("x, y", [(-1000.0, 5.0), (-1e308, 700.0), (-FMAX, EXP_ARG_MAX), (0.0, 600.0)])
def test_halley_step_far_from_root_stays_finite(x, y):
    state = HalleyState.at(y)
    nxt = halley_step(x, state)
    assert math.isfinite(nxt.y)
    assert nxt.y < y  # residual is positive, so the step must go down


def test_halley_step_newton_fallback_value():
    # denominator 2h'^2 - h*h'' is negative here, so a Newton step is taken
    x, y = -1000.0, 5.0
    ey = math.exp(y)
    h = y + ey - x
    assert 2 * (1 + ey) ** 2 - h * ey < 0
    assert halley_step(x, HalleyState.at(y)).y == pytest.approx(y - h / (1 + ey), rel=1e-14)


# -- evaluate -----------------------------------------------------------------

def test_evaluate_anchor_values():
    assert evaluate(1.0).value == 0.0
    assert evaluate(-800.0).value == -800.0
    assert ulps_apart(evaluate(0.0).value, -OMEGA) <= 2
    # mpmath findroot at 50 digits: 6.900830527610895611...
    assert ulps_apart(evaluate(1000.0).value, 6.900830527610896) <= 2


def test_evaluate_default_policy_is_four_steps():
    assert DEFAULT_POLICY == FixedIterations(4)
    assert evaluate(3.0).iterations_used == 4
    assert evaluate(3.0, FixedIterations(7)).iterations_used == 7


@pytest.mark.parametrize("x", [math.inf, -math.inf])
def test_evaluate_infinities(x):
    res = evaluate(x)
    assert res.value == x
    assert res.iterations_used == 0


def test_evaluate_nan():
    res = evaluate(math.nan)
    assert math.isnan(res.value)
    assert res.iterations_used == 0


def test_residual_tolerance_policy_stops_early():
    res = evaluate(50.0, ResidualTolerance(1e-3, 50))
    assert 1 <= res.iterations_used < 4
    assert abs(res.residual) <= 1e-3 * 50


def test_residual_tolerance_zero_tol_respects_budget():
    res = evaluate(123.0, ResidualTolerance(0.0, 3))
    assert res.iterations_used <= 3


def test_residual_tolerance_already_converged_takes_no_steps():
    assert evaluate(-1e300, ResidualTolerance(1e-12)).iterations_used == 0


@pytest.mark.parametrize(
    "make",
    [
        lambda: FixedIterations(0),
        lambda: ResidualTolerance(-1.0),
        lambda: ResidualTolerance(math.inf),
        lambda: ResidualTolerance(math.nan),
        lambda: ResidualTolerance(1e-6, 0),
    ],
)
def test_invalid_policies_rejected(make):
    with pytest.raises(ValueError):
        make()


def test_policy_count_must_be_int():
    with pytest.raises(TypeError):
        FixedIterations(2.0)


def test_unknown_policy_rejected():
    with pytest.raises(TypeError):
        evaluate(1.0, object())


# -- derivatives --------------------------------------------------------------

def test_derivative_examples():
    assert derivative(1.0) == 0.5
    assert derivative(-800.0) == 1.0
    assert derivative(0.0) == pytest.approx(1 / (1 + OMEGA), rel=4 * EPS)
    assert derivative(0.0) == pytest.approx(0.6381037433651108, rel=4 * EPS)


def test_second_derivative_examples():
    assert second_derivative(1.0) == -0.125
    s = second_derivative(-800.0)
    assert s == 0.0 and math.copysign(1.0, s) == -1.0
    assert second_derivative(0.0) == pytest.approx(-OMEGA / (1 + OMEGA) ** 3, rel=8 * EPS)
    assert second_derivative(0.0) == pytest.approx(-0.14735561035274553, rel=8 * EPS)


def test_second_derivative_no_spurious_underflow_for_large_x():
    # exp(g)^3 overflows well before the true value underflows
    s = second_derivative(1e100)
    assert s < 0.0
    e = math.exp(g(1e100))
    assert s == pytest.approx(-1 / e**2, rel=1e-12)


@pytest.mark.parametrize("x", [-30.0, -7.5, -1.0, 0.0, 0.3, 1.0, 4.0, 12.0, 30.0])
def test_derivative_matches_central_difference(x):
    step = 1e-6 * max(1.0, abs(x))
    fd = (g(x + step) - g(x - step)) / (2 * step)
    assert derivative(x) == pytest.approx(fd, rel=1e-5)


# -- properties ---------------------------------------------------------------

@given(finite)
def test_value_never_exceeds_argument(x):
    res = evaluate(x)
    assert math.isfinite(res.value)
    assert res.value <= x


@given(moderate)
def test_defining_identity(x):
    y = evaluate(x).value
    ey = math.exp(y)
    assert abs(math.fsum((y, ey, -x))) <= 8 * EPS * max(1.0, abs(x), ey)


@given(finite)
def test_defining_identity_full_range(x):
    # beyond |x| ~ 1e8 one ulp of y moves the residual by more than 8*eps*x,
    # so the bound has to carry the conditioning term exp(y)*ulp(y)
    y = evaluate(x).value
    ey = math.exp(y)
    assert abs(math.fsum((y, ey, -x))) <= 8 * EPS * max(1.0, abs(x), ey) + ey * math.ulp(y)


@given(finite, finite)
def test_monotone(x1, x2):
    lo, hi = sorted((x1, x2))
    assert g(lo) <= g(hi)


@given(moderate, moderate)
def test_contraction(x1, x2):
    # pairs a few ulps apart can differ by one rounding of g more than |dx| allows
    y1, y2 = g(x1), g(x2)
    slack = math.ulp(max(abs(y1), abs(y2)))
    assert abs(y2 - y1) <= abs(x2 - x1) * (1 + 8 * EPS) + slack


def test_contraction_on_separated_pairs():
    xs = [-1e6, -700.0, -40.0, -3.98, -1.0, -1e-9, 0.0, 0.5, 1.0, 2.7, 10.0, 1e3, 1e6]
    for x1 in xs:
        for x2 in xs:
            assert abs(g(x2) - g(x1)) <= abs(x2 - x1) * (1 + 8 * EPS)


@given(st.floats(max_value=0.0, allow_nan=False, allow_infinity=False))
def test_bounds_negative(x):
    y = g(x)
    assert x - math.exp(x) <= y <= x


@given(st.floats(min_value=E, allow_nan=False, allow_infinity=False))
def test_bounds_positive(x):
    y = g(x)
    assert math.log(x) - 1 <= y <= math.log(x) + 1


@given(finite)
def test_derivative_signs(x):
    d = derivative(x)
    assert 0.0 < d <= 1.0
    assert second_derivative(x) <= 0.0


@given(st.floats(max_value=-746.0, allow_nan=False, allow_infinity=False))
def test_deep_underflow_is_identity(x):
    assert g(x) == x


@given(finite)
def test_halley_fixed_point_idempotent(x):
    y = evaluate(x, FixedIterations(8)).value
    state = HalleyState.at(y)
    assume(residual(x, y) == 0.0)
    assert halley_step(x, state).y == y


@given(st.floats(min_value=-50, max_value=50, allow_nan=False), st.floats(min_value=-50, max_value=50, allow_nan=False))
@settings(max_examples=200)
def test_halley_from_any_start_stays_finite(x, y0):
    state = HalleyState.at(y0)
    for _ in range(60):
        state = halley_step(x, state)
        assert math.isfinite(state.y)
    assert abs(state.y - g(x)) <= 4 * EPS * max(1.0, abs(g(x)))
