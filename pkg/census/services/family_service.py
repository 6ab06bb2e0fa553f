"""
Descent Census - Family Service
Descent and descent-edge polynomials of the digraph families, computed
by recurrence and by generating-function identity
"""
import threading
from dataclasses import dataclass
from math import comb

from census.config import settings
from census.services.binomial_service import gaussian_binomial, weighted_binomial
from census.services.poly_service import MultiPoly, R, alpha, ensure_integral, power, u, y, z
from census.services.series_service import (
    Family,
    TruncatedSeries,
    delta_transform,
    make_series,
    series_invert,
    series_log,
    series_multiply,
)

FAMILIES = (
    "strong_tournament",
    "all_tournament",
    "eta",
    "strong_digraph",
    "acyclic",
    "acyclic_with_sources",
    "tree",
    "forest",
)
DUAL_PATH_FAMILIES = ("strong_digraph", "acyclic", "acyclic_with_sources")
METHODS = ("recurrence", "series")


@dataclass(frozen=True)
class FamilyPolynomial:
    family: str
    n: int
    value: MultiPoly
    provenance: str = "recurrence"


_lock = threading.Lock()
_tables: dict[tuple[str, int, str], MultiPoly] = {}


def _memo(family: str, n: int, method: str, compute) -> MultiPoly:
    key = (family, n, method)
    cached = _tables.get(key)
    if cached is not None:
        return cached
    value = compute()
    if n <= settings.family_nmax:
        with _lock:
            _tables.setdefault(key, value)
    return value


def _check_n(n: int, minimum: int, name: str) -> None:
    if n < minimum:
        raise ValueError(f"{name} needs n >= {minimum}, got {n}")


def _check_method(method: str) -> None:
    if method not in METHODS:
        raise ValueError(f"method must be one of {', '.join(METHODS)}, got {method!r}")


def all_digraph_poly(n: int) -> MultiPoly:
    """((1+y)(1+uy))^C(n,2), the descent-edge polynomial of all digraphs on [n]"""
    return ((1 + y) * (1 + u * y)) ** comb(n, 2)


# ============== Tournaments ==============

def all_tournament_poly(n: int) -> MultiPoly:
    """(1+u)^C(n,2)"""
    _check_n(n, 0, "all_tournament_poly")
    return (1 + u) ** comb(n, 2)


def strong_tournament_poly(n: int) -> MultiPoly:
    """t_n(u) = (1+u)^C(n,2) - sum_{k<n} [n,k]_u (1+u)^C(n-k,2) t_k(u)"""
    _check_n(n, 1, "strong_tournament_poly")

    def compute():
        total = all_tournament_poly(n)
        for k in range(1, n):
            total -= gaussian_binomial(n, k, "u") * all_tournament_poly(n - k) * strong_tournament_poly(k)
        return total

    return _memo("strong_tournament", n, "recurrence", compute)


def tournament_series(order: int) -> TruncatedSeries:
    """U(x) = sum (1+u)^C(n,2) x^n/n!_u"""
    return make_series(Family.EULERIAN_U, [all_tournament_poly(n) for n in range(order + 1)])


def strong_tournament_series(order: int) -> TruncatedSeries:
    """T(x) = sum_{n>=1} t_n(u) x^n/n!_u"""
    return make_series(Family.EULERIAN_U, [R.zero] + [strong_tournament_poly(n) for n in range(1, order + 1)])


def moon_moser_totals(n_max: int) -> list[int]:
    """Strong tournament counts t_1..t_{n_max} from the plain-integer recurrence"""
    totals = [0]
    for n in range(1, n_max + 1):
        value = 2 ** comb(n, 2) - sum(comb(n, k) * 2 ** comb(n - k, 2) * totals[k] for k in range(1, n))
        totals.append(value)
    return totals[1:]


# ============== Strong digraphs ==============

def eta_poly(n: int) -> MultiPoly:
    """
    eta_n(u,y) = d_n - sum_{k<n} B(n,k) d_{n-k} eta_k with
    d_m = ((1+y)(1+uy))^C(m,2); may have negative coefficients.
    """
    _check_n(n, 1, "eta_poly")

    def compute():
        total = all_digraph_poly(n)
        for k in range(1, n):
            total -= weighted_binomial(n, k) * all_digraph_poly(n - k) * eta_poly(k)
        return total

    return _memo("eta", n, "recurrence", compute)


def wright_eta(n_max: int) -> list[int]:
    """eta_1..eta_{n_max} at u = y = 1 from the plain-integer recurrence"""
    values = [0]
    for n in range(1, n_max + 1):
        value = 2 ** (n * (n - 1)) - sum(comb(n, k) * 2 ** ((n - 1) * (n - k)) * values[k] for k in range(1, n))
        values.append(value)
    return values[1:]


def digraph_series(order: int) -> TruncatedSeries:
    """D(x): numerators ((1+y)(1+uy))^C(n,2) over F(n)"""
    return make_series(Family.EULERIAN_GRAPHIC, [all_digraph_poly(n) for n in range(order + 1)])


def strong_digraph_series(order: int) -> TruncatedSeries:
    """S(x) = -log(Delta^{-1}(D(x)^{-1}))"""
    inverse = delta_transform(series_invert(digraph_series(order)), "inverse")
    log = series_log(inverse)
    return make_series(Family.EGF, [-a for a in log.numerators])


def strong_digraph_poly(n: int, method: str = "recurrence") -> MultiPoly:
    """s_n(u,y) = eta_n + sum_{k<n} C(n-1,k-1) s_k eta_{n-k}, or from S(x)"""
    _check_n(n, 1, "strong_digraph_poly")
    _check_method(method)

    def recurrence():
        total = eta_poly(n)
        for k in range(1, n):
            total += comb(n - 1, k - 1) * strong_digraph_poly(k) * eta_poly(n - k)
        return total

    def series():
        return ensure_integral(strong_digraph_series(n)[n], f"s_{n} from S(x)")

    return _memo("strong_digraph", n, method, recurrence if method == "recurrence" else series)


# ============== Acyclic digraphs ==============

def alternating_series(order: int, base=-1) -> TruncatedSeries:
    """sum base^n x^n/F(n) in the Eulerian-graphic family"""
    return make_series(Family.EULERIAN_GRAPHIC, [R(base) ** n if n else R.one for n in range(order + 1)])


def acyclic_series(order: int) -> TruncatedSeries:
    """A(x) = (sum (-1)^n x^n/F(n))^{-1}"""
    return series_invert(alternating_series(order, -1))


def acyclic_poly(n: int, method: str = "recurrence") -> MultiPoly:
    """a_n(u,y) = sum_{i<n} (-1)^{n-i-1} B(n,i) a_i, or from A(x)"""
    _check_n(n, 0, "acyclic_poly")
    _check_method(method)
    if n == 0:
        return R.one

    def recurrence():
        total = R.zero
        for i in range(n):
            term = weighted_binomial(n, i) * acyclic_poly(i)
            total += term if (n - i - 1) % 2 == 0 else -term
        return total

    def series():
        return acyclic_series(n)[n]

    return _memo("acyclic", n, method, recurrence if method == "recurrence" else series)


def acyclic_source_poly(n: int, method: str = "recurrence") -> MultiPoly:
    """
    a_n(u,y;alpha), sources weighted by alpha:
    sum_i B(n,i) (alpha-1)^i a_{n-i}, or the n-th numerator of
    (sum (alpha-1)^n x^n/F(n)) A(x).
    """
    _check_n(n, 0, "acyclic_source_poly")
    _check_method(method)

    def recurrence():
        return sum(
            (weighted_binomial(n, i) * (alpha - 1) ** i * acyclic_poly(n - i) for i in range(n + 1)),
            R.zero,
        )

    def series():
        shifted = alternating_series(n, alpha - 1)
        return series_multiply(shifted, acyclic_series(n))[n]

    return _memo("acyclic_with_sources", n, method, recurrence if method == "recurrence" else series)


def acyclic_no_descent_product(n: int) -> MultiPoly:
    """a_n(0,y;alpha) = prod_{i<n} (alpha + (1+y)^i - 1)"""
    product = R.one
    for i in range(n):
        product *= alpha + (1 + y) ** i - 1
    return product


# ============== Trees and forests ==============

def tree_poly(n: int) -> MultiPoly:
    """Descent polynomial of rooted trees on [n]: prod_{i=1}^{n-1} (iu + n - i)"""
    _check_n(n, 1, "tree_poly")
    product = R.one
    for i in range(1, n):
        product *= i * u + (n - i)
    return product


def forest_poly(n: int) -> MultiPoly:
    """Rooted forests by descents (u) and trees (z): z prod_{i=1}^{n-1} (iu + n - i + z)"""
    _check_n(n, 1, "forest_poly")
    product = z
    for i in range(1, n):
        product *= i * u + (n - i) + z
    return product


def q_integer(n: int) -> MultiPoly:
    """1 + u + ... + u^{n-1}"""
    return sum((u**k for k in range(n)), R.zero)


def tree_series(order: int) -> TruncatedSeries:
    """T(x,u) as an EGF"""
    return make_series(Family.EGF, [R.zero] + [tree_poly(n) for n in range(1, order + 1)])


def tree_inverse_series(order: int) -> TruncatedSeries:
    """sum_{n>=1} (-1)^{n-1} (1+u+...+u^{n-1}) x^n/n!, built coefficient-wise"""
    _check_n(order, 1, "tree_inverse_series")
    numerators = [R.zero]
    for n in range(1, order + 1):
        numerators.append(q_integer(n) if n % 2 else -q_integer(n))
    return make_series(Family.EGF, numerators)


def short_tree_series(order: int, leaf_weight) -> TruncatedSeries:
    """Short trees: sum_{n>=1} w^{n-1} (1+u+...+u^{n-1}) x^n/n!"""
    return make_series(Family.EGF, [R.zero] + [power(leaf_weight, n - 1) * q_integer(n) for n in range(1, order + 1)])


# ============== Dispatch ==============

def family_polynomial(family: str, n: int, method: str = "recurrence") -> FamilyPolynomial:
    """Look up a family polynomial by tag"""
    if family not in FAMILIES:
        raise ValueError(f"Unknown family {family!r}. Known: {', '.join(FAMILIES)}")
    _check_method(method)
    if method == "series" and family not in DUAL_PATH_FAMILIES:
        raise ValueError(f"{family} has no series path")
    builders = {
        "strong_tournament": lambda: strong_tournament_poly(n),
        "all_tournament": lambda: all_tournament_poly(n),
        "eta": lambda: eta_poly(n),
        "strong_digraph": lambda: strong_digraph_poly(n, method),
        "acyclic": lambda: acyclic_poly(n, method),
        "acyclic_with_sources": lambda: acyclic_source_poly(n, method),
        "tree": lambda: tree_poly(n),
        "forest": lambda: forest_poly(n),
    }
    return FamilyPolynomial(family=family, n=n, value=builders[family](), provenance=method)
