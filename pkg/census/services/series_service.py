"""
Descent Census - Series Service
Truncated power series in x over polynomial numerators, in three
convolution families, plus the Delta transform between EGF and
Eulerian-graphic normalizations.

A series stores numerators a_0..a_N relative to the family denominator:
n! (EGF), n!_u (Eulerian in u) or F(n) (Eulerian graphic). Products use
c_n = sum_i kappa(n,i) a_i b_{n-i} with the family kernel kappa.
"""
from dataclasses import dataclass
from enum import Enum
from math import comb, factorial

from census.services.binomial_service import gaussian_binomial, weighted_binomial
from census.services.poly_service import (
    MultiPoly,
    R,
    constant_value,
    from_json as poly_from_json,
    rational,
    to_json as poly_to_json,
    to_poly,
)


class Family(str, Enum):
    EGF = "egf"
    EULERIAN_U = "eulerian_u"
    EULERIAN_GRAPHIC = "eulerian_graphic"


class FamilyMismatchError(ValueError):
    """Raised when series of different convolution families are combined."""


@dataclass(frozen=True)
class TruncatedSeries:
    family: Family
    numerators: tuple[MultiPoly, ...]

    @property
    def order(self) -> int:
        return len(self.numerators) - 1

    def __getitem__(self, n: int) -> MultiPoly:
        return self.numerators[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        return make_series(self.family, self.numerators[: order + 1])


def make_series(family: Family, numerators) -> TruncatedSeries:
    values = tuple(to_poly(a) for a in numerators)
    if not values:
        raise ValueError("A truncated series needs at least the constant numerator")
    return TruncatedSeries(family=Family(family), numerators=values)


def kernel(family: Family, n: int, i: int) -> MultiPoly:
    """Convolution kernel kappa(n, i) of a family"""
    if family == Family.EGF:
        return R(comb(n, i))
    if family == Family.EULERIAN_U:
        return gaussian_binomial(n, i, "u")
    return weighted_binomial(n, i)


def one(family: Family, order: int) -> TruncatedSeries:
    return make_series(family, [R.one] + [R.zero] * order)


def variable_x(family: Family, order: int) -> TruncatedSeries:
    """The series x (numerator 1 at n = 1; the denominator at n = 1 is 1 in every family)"""
    numerators = [R.zero] * (order + 1)
    if order >= 1:
        numerators[1] = R.one
    return make_series(family, numerators)


def _check_same_family(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.family != b.family:
        raise FamilyMismatchError(f"Cannot combine {a.family.value} with {b.family.value} series")


def _require_egf(a: TruncatedSeries, operation: str) -> None:
    if a.family != Family.EGF:
        raise ValueError(f"{operation} is defined only for EGF series, got {a.family.value}")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same_family(a, b)
    order = min(a.order, b.order)
    return make_series(a.family, [a[n] + b[n] for n in range(order + 1)])


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same_family(a, b)
    order = min(a.order, b.order)
    return make_series(a.family, [a[n] - b[n] for n in range(order + 1)])


def series_scale(a: TruncatedSeries, factor) -> TruncatedSeries:
    """Multiply every numerator by a polynomial or scalar"""
    c = to_poly(factor)
    return make_series(a.family, [c * an for an in a.numerators])


def series_multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """c_n = sum_i kappa(n,i) a_i b_{n-i}, truncated to the smaller order"""
    _check_same_family(a, b)
    order = min(a.order, b.order)
    product = []
    for n in range(order + 1):
        total = R.zero
        for i in range(n + 1):
            if a[i] and b[n - i]:
                total += kernel(a.family, n, i) * a[i] * b[n - i]
        product.append(total)
    return make_series(a.family, product)


def series_power(a: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        raise ValueError(f"series_power needs k >= 0, got {k}")
    result = one(a.family, a.order)
    for _ in range(k):
        result = series_multiply(result, a)
    return result


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    """b with a*b = 1: b_0 = 1, b_n = -sum_{i>=1} kappa(n,i) a_i b_{n-i}"""
    if a[0] != R.one:
        raise ValueError("series_invert needs constant numerator 1")
    inverse = [R.one]
    for n in range(1, a.order + 1):
        total = R.zero
        for i in range(1, n + 1):
            if a[i] and inverse[n - i]:
                total += kernel(a.family, n, i) * a[i] * inverse[n - i]
        inverse.append(-total)
    return make_series(a.family, inverse)


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """EGF exp via f' = a' f"""
    _require_egf(a, "exp")
    if a[0]:
        raise ValueError("exp needs constant numerator 0")
    f = [R.one]
    for n in range(a.order):
        f.append(sum((comb(n, k) * a[k + 1] * f[n - k] for k in range(n + 1)), R.zero))
    return make_series(Family.EGF, f)


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """EGF log via a g' = a'"""
    _require_egf(a, "log")
    if a[0] != R.one:
        raise ValueError("log needs constant numerator 1")
    g = [R.zero]
    for n in range(a.order):
        tail = sum((comb(n, k) * a[k] * g[n + 1 - k] for k in range(1, n + 1)), R.zero)
        g.append(a[n + 1] - tail)
    return make_series(Family.EGF, g)


def series_exp_log(a: TruncatedSeries, direction: str) -> TruncatedSeries:
    if direction == "exp":
        return series_exp(a)
    if direction == "log":
        return series_log(a)
    raise ValueError(f"direction must be exp or log, got {direction!r}")


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(x)) for EGF series, inner constant numerator 0"""
    _require_egf(outer, "compose")
    _require_egf(inner, "compose")
    if inner[0]:
        raise ValueError("compose needs an inner series with constant numerator 0")
    order = min(outer.order, inner.order)
    inner = inner.truncate(order)
    result = [R.zero] * (order + 1)
    power = one(Family.EGF, order)
    for k in range(order + 1):
        if k:
            power = series_multiply(power, inner)
        if not outer[k]:
            continue
        scale = outer[k] * rational(1, factorial(k))
        for n in range(k, order + 1):
            if power[n]:
                result[n] += scale * power[n]
    return make_series(Family.EGF, result)


def series_revert(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse g with f(g(x)) = g(f(x)) = x, solved term by term"""
    _require_egf(f, "revert")
    if f[0]:
        raise ValueError("revert needs constant numerator 0")
    if f.order < 1:
        raise ValueError("revert needs order >= 1")
    try:
        lead = constant_value(f[1])
    except ValueError:
        raise ValueError("revert needs a constant linear coefficient") from None
    if not lead:
        raise ValueError("revert needs a nonzero linear coefficient")
    inverse_lead = 1 / lead
    g = [R.zero, R(inverse_lead)] + [R.zero] * (f.order - 1)
    for n in range(2, f.order + 1):
        h = series_compose(f.truncate(n), make_series(Family.EGF, g[: n + 1]))
        g[n] = -h[n] * inverse_lead
    return make_series(Family.EGF, g)


def delta_transform(a: TruncatedSeries, direction: str) -> TruncatedSeries:
    """Reinterpret EGF numerators over F(n) (forward) or back (inverse)"""
    if direction == "forward":
        source, target = Family.EGF, Family.EULERIAN_GRAPHIC
    elif direction == "inverse":
        source, target = Family.EULERIAN_GRAPHIC, Family.EGF
    else:
        raise ValueError(f"direction must be forward or inverse, got {direction!r}")
    if a.family != source:
        raise ValueError(f"Delta {direction} needs a {source.value} series, got {a.family.value}")
    return make_series(target, a.numerators)


def series_to_json(a: TruncatedSeries) -> dict:
    return {
        "family": a.family.value,
        "order": a.order,
        "numerators": [poly_to_json(an) for an in a.numerators],
    }


def series_from_json(obj: dict) -> TruncatedSeries:
    numerators = [poly_from_json(p) for p in obj["numerators"]]
    if len(numerators) != int(obj["order"]) + 1:
        raise ValueError(f"order {obj['order']} does not match {len(numerators)} numerators")
    return make_series(Family(obj["family"]), numerators)
