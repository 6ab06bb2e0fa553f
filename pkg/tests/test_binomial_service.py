from math import comb, factorial

import pytest

from census.config import settings
from census.services import binomial_service
from census.services.binomial_service import (
    binomial_at_one,
    factor_P,
    gaussian_binomial,
    gaussian_binomial_by_subsets,
    normalization_F,
    weighted_binomial,
    weighted_binomial_by_pairs,
)
from census.services.poly_service import R, evaluate, q, u, y


def test_gaussian_binomial_small():
    assert gaussian_binomial(4, 2) == 1 + u + 2 * u**2 + u**3 + u**4
    assert gaussian_binomial(3, 1, "q") == 1 + q + q**2


def test_gaussian_binomial_out_of_range():
    assert gaussian_binomial(3, 5) == R.zero
    with pytest.raises(ValueError):
        gaussian_binomial(-1, 0)


@pytest.mark.parametrize("n", range(0, 7))
def test_gaussian_binomial_matches_ordered_partitions(n):
    for i in range(n + 1):
        assert gaussian_binomial_by_subsets(n, i) == gaussian_binomial(n, i)


def test_weighted_binomial_small():
    assert weighted_binomial(2, 1) == 2 + y + u * y
    assert weighted_binomial(5, 0) == R.one


@pytest.mark.parametrize("n", range(0, 7))
def test_weighted_binomial_matches_pairs(n):
    for i in range(n + 1):
        assert weighted_binomial_by_pairs(n, i) == weighted_binomial(n, i)


def test_weighted_binomial_at_one():
    for n in range(7):
        for i in range(n + 1):
            assert evaluate(weighted_binomial(n, i), {"u": 1, "y": 1}) == binomial_at_one(n, i)


def test_factor_P():
    assert factor_P(1) == R.one
    assert factor_P(2) == 2 + y + u * y
    with pytest.raises(ValueError):
        factor_P(0)


def test_normalization_factorizes():
    for n in range(7):
        for i in range(n + 1):
            assert weighted_binomial(n, i) * normalization_F(i) * normalization_F(n - i) == normalization_F(n)


def test_normalization_at_one():
    # P(i) = i 2^(i-1) at u = y = 1
    for n in range(7):
        assert evaluate(normalization_F(n), {"u": 1, "y": 1}) == factorial(n) * 2 ** comb(n, 2)


def test_memo_respects_bound(monkeypatch):
    monkeypatch.setattr(settings, "nmax", 3)
    gaussian_binomial(9, 4, "q")
    assert (9, 4, "q") not in binomial_service._gaussian
