from math import factorial

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from census.services.series_service import (
    Family,
    FamilyMismatchError,
    delta_transform,
    make_series,
    one,
    series_compose,
    series_exp,
    series_exp_log,
    series_from_json,
    series_invert,
    series_log,
    series_multiply,
    series_power,
    series_revert,
    series_to_json,
    variable_x,
)
from census.services.poly_service import R, rational, u, y


def exp_minus_one(order):
    return make_series(Family.EGF, [0] + [1] * order)


def test_exp_of_x():
    assert series_exp(variable_x(Family.EGF, 5)).numerators == tuple(R.one for _ in range(6))


def test_log_undoes_exp():
    x = variable_x(Family.EGF, 6)
    assert series_log(series_exp(x)) == x
    assert series_exp_log(series_exp_log(x, "exp"), "log") == x
    with pytest.raises(ValueError):
        series_exp_log(x, "sqrt")


def test_compose_gives_bell_numbers():
    composed = series_compose(exp_minus_one(5), exp_minus_one(5))
    assert [composed[n] for n in range(1, 6)] == [1, 2, 5, 15, 52]


def test_invert_one_minus_x_egf():
    inverse = series_invert(make_series(Family.EGF, [1, -1, 0, 0, 0]))
    assert [inverse[n] for n in range(5)] == [factorial(n) for n in range(5)]


def test_invert_one_minus_x_eulerian():
    inverse = series_invert(make_series(Family.EULERIAN_U, [1, -1, 0, 0]))
    assert inverse[3] == (1 + u) * (1 + u + u**2)


def test_invert_needs_unit_constant():
    with pytest.raises(ValueError):
        series_invert(make_series(Family.EGF, [2, 1]))


def test_family_mismatch():
    with pytest.raises(FamilyMismatchError):
        series_multiply(one(Family.EGF, 3), one(Family.EULERIAN_U, 3))


def test_unequal_orders_truncate():
    product = series_multiply(one(Family.EGF, 2), one(Family.EGF, 5))
    assert product.order == 2


def test_exp_requires_egf():
    with pytest.raises(ValueError):
        series_exp(variable_x(Family.EULERIAN_GRAPHIC, 3))


def test_revert_log():
    # revert(e^x - 1) = log(1 + x)
    reverted = series_revert(exp_minus_one(5))
    assert [reverted[n] for n in range(1, 6)] == [1, -1, 2, -6, 24]


def test_revert_rejects_non_constant_linear_term():
    with pytest.raises(ValueError):
        series_revert(make_series(Family.EGF, [0, 1 + u, 0]))
    with pytest.raises(ValueError):
        series_revert(make_series(Family.EGF, [0, 0, 1]))


def test_delta_transform_swaps_family():
    a = make_series(Family.EGF, [1, y, u])
    forward = delta_transform(a, "forward")
    assert forward.family == Family.EULERIAN_GRAPHIC
    assert delta_transform(forward, "inverse") == a
    with pytest.raises(ValueError):
        delta_transform(a, "inverse")


def test_power_matches_repeated_product():
    a = make_series(Family.EULERIAN_GRAPHIC, [1, 1, 1, 1])
    assert series_power(a, 2) == series_multiply(a, a)
    assert series_power(a, 0) == one(Family.EULERIAN_GRAPHIC, 3)


def test_json_round_trip_and_order_check():
    a = make_series(Family.EULERIAN_U, [1, u, 1 + u])
    data = series_to_json(a)
    assert series_from_json(data) == a
    data["order"] = 5
    with pytest.raises(ValueError):
        series_from_json(data)


@given(
    st.sampled_from(list(Family)),
    st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=3, max_size=4),
)
@hsettings(max_examples=25, deadline=None)
def test_inverse_pairs_multiply_to_one(family, tail):
    a = make_series(family, [1] + [c + d * u for c, d in tail])
    product = series_multiply(a, series_invert(a))
    assert product == one(family, a.order)
    assert series_invert(series_invert(a)) == a


numerators = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=4, max_size=4)


def as_series(family, pairs, constant=None):
    values = [c + d * u for c, d in pairs]
    if constant is not None:
        values[0] = R(constant)
    return make_series(family, values)


@given(st.sampled_from(list(Family)), numerators, numerators, numerators)
@hsettings(max_examples=20, deadline=None)
def test_multiply_is_commutative_and_associative(family, a, b, c):
    a, b, c = as_series(family, a), as_series(family, b), as_series(family, c)
    assert series_multiply(a, b) == series_multiply(b, a)
    assert series_multiply(series_multiply(a, b), c) == series_multiply(a, series_multiply(b, c))


@given(st.sampled_from([1, -1, 2, rational(1, 2)]), numerators)
@hsettings(max_examples=20, deadline=None)
def test_revert_is_a_two_sided_compose_inverse(lead, tail):
    values = [R.zero, R(lead)] + [c + d * u for c, d in tail[:3]]
    f = make_series(Family.EGF, values)
    g = series_revert(f)
    x = variable_x(Family.EGF, f.order)
    assert series_compose(f, g) == x
    assert series_compose(g, f) == x


@given(numerators)
@hsettings(max_examples=20, deadline=None)
def test_exp_undoes_log(pairs):
    a = as_series(Family.EGF, pairs, constant=1)
    assert series_exp(series_log(a)) == a
    assert series_exp_log(series_exp_log(a, "log"), "exp") == a
