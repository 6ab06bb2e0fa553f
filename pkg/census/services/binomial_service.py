"""
Descent Census - Binomial Tables Service
Gaussian binomials, the weighted binomials B(n,i) and the Eulerian-graphic
normalization F(n) = P(1)...P(n)
"""
import threading
from collections import Counter
from itertools import combinations
from math import comb

from census.config import settings
from census.services.poly_service import MultiPoly, R, gen, u, y

_lock = threading.Lock()
_gaussian: dict[tuple[int, int, str], MultiPoly] = {}
_weighted: dict[tuple[int, int], MultiPoly] = {}
_normalization: dict[int, MultiPoly] = {}


def _remember(table: dict, key, n: int, value: MultiPoly) -> MultiPoly:
    """Cache only within the configured bound"""
    if n <= settings.nmax:
        with _lock:
            table.setdefault(key, value)
    return value


def gaussian_binomial(n: int, i: int, var: str = "u") -> MultiPoly:
    """
    [n, i] in the named variable, by [n,i] = x^i [n-1,i] + [n-1,i-1].
    i > n gives the zero polynomial.
    """
    if n < 0 or i < 0:
        raise ValueError(f"gaussian_binomial needs non-negative arguments, got ({n}, {i})")
    if i > n:
        return R.zero
    if i == 0 or i == n:
        return R.one
    key = (n, i, var)
    cached = _gaussian.get(key)
    if cached is not None:
        return cached
    x = gen(var)
    value = x**i * gaussian_binomial(n - 1, i, var) + gaussian_binomial(n - 1, i - 1, var)
    return _remember(_gaussian, key, n, value)


def weighted_binomial(n: int, i: int) -> MultiPoly:
    """
    B(n,i) = [n,i]_q (1+y)^{i(n-i)} at q = (1+uy)/(1+y), built from
    B(n,i) = (1+uy)^i B(n-1,i) + (1+y)^{n-i} B(n-1,i-1).
    """
    if n < 0 or i < 0:
        raise ValueError(f"weighted_binomial needs non-negative arguments, got ({n}, {i})")
    if i > n:
        return R.zero
    if i == 0 or i == n:
        return R.one
    key = (n, i)
    cached = _weighted.get(key)
    if cached is not None:
        return cached
    value = (1 + u * y) ** i * weighted_binomial(n - 1, i) + (1 + y) ** (n - i) * weighted_binomial(n - 1, i - 1)
    return _remember(_weighted, key, n, value)


def factor_P(i: int) -> MultiPoly:
    """P(i) = sum_{j<i} (1+uy)^j (1+y)^{i-1-j}"""
    if i < 1:
        raise ValueError(f"P(i) is defined for i >= 1, got {i}")
    return sum(((1 + u * y) ** j * (1 + y) ** (i - 1 - j) for j in range(i)), R.zero)


def normalization_F(n: int) -> MultiPoly:
    """F(n) = P(1) P(2) ... P(n); F(0) = 1"""
    if n < 0:
        raise ValueError(f"normalization_F needs n >= 0, got {n}")
    if n == 0:
        return R.one
    cached = _normalization.get(n)
    if cached is not None:
        return cached
    value = normalization_F(n - 1) * factor_P(n)
    return _remember(_normalization, n, n, value)


def subset_descents(subset: tuple[int, ...], n: int) -> int:
    """Number of pairs (s,t) in S x ([n]-S) with s > t"""
    members = set(subset)
    return sum(1 for s in subset for t in range(n) if t not in members and s > t)


def gaussian_binomial_by_subsets(n: int, i: int, var: str = "u") -> MultiPoly:
    """Sum of x^{des(S,T)} over ordered partitions (S,T) of [n] with |S| = i"""
    x = gen(var)
    return sum((x ** subset_descents(s, n) for s in combinations(range(n), i)), R.zero)


def weighted_binomial_by_pairs(n: int, i: int) -> MultiPoly:
    """
    Sum of u^{des(A)} y^{|A|} over pairs (S, A), S an i-subset of [n] and
    A a subset of S x ([n]-S), enumerated literally.
    """
    counts = Counter()
    for s in combinations(range(n), i):
        members = set(s)
        pairs = [(a, b) for a in s for b in range(n) if b not in members]
        descent_mask = sum(1 << k for k, (a, b) in enumerate(pairs) if a > b)
        for mask in range(1 << len(pairs)):
            counts[bin(mask & descent_mask).count("1"), bin(mask).count("1")] += 1
    return sum((c * u**d * y**m for (d, m), c in counts.items()), R.zero)


def binomial_at_one(n: int, i: int) -> int:
    """C(n,i) 2^{i(n-i)}, the value of B(n,i) at u = y = 1"""
    return comb(n, i) * 2 ** (i * (n - i))
