"""
Descent Census - Chromatic Service
Refined chromatic polynomials, acyclic orientations and the colored-graph
series identity for small undirected graphs on [n]
"""
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

import numpy as np

from census.config import settings
from census.models import CheckResult
from census.services.oracle_service import OracleLimitError, reachability
from census.services.poly_service import (
    MultiPoly,
    R,
    ensure_integral,
    lam,
    pretty,
    rational,
    substitute,
    u,
    y,
)
from census.services.series_service import Family, make_series, series_power


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on [n]; edges are 0-based (i, j) with i < j"""
    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, n: int, edges) -> "Graph":
        normalized = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"Loop at vertex {a + 1}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"Edge ({a + 1}, {b + 1}) leaves the vertex set [1..{n}]")
            normalized.add((min(a, b), max(a, b)))
        return cls(n=n, edges=tuple(sorted(normalized)))


def parse_edge_list(text: str) -> Graph:
    """'n' on the first line, then one 'u v' pair per line, 1-based"""
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ValueError("Empty graph description")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"First line must be the vertex count, got {lines[0]!r}") from None
    if n < 1:
        raise ValueError(f"Vertex count must be positive, got {n}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"Expected 'u v', got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"Non-integer vertex in {line!r}") from None
        edges.append((a - 1, b - 1))
    return Graph.build(n, edges)


def load_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text())


def all_graphs(n: int) -> list[Graph]:
    """All 2^C(n,2) labeled graphs on [n]"""
    pairs = list(combinations(range(n), 2))
    return [
        Graph(n=n, edges=tuple(p for k, p in enumerate(pairs) if mask >> k & 1))
        for mask in range(1 << len(pairs))
    ]


def _histogram_poly(values: np.ndarray) -> MultiPoly:
    counts = np.bincount(values) if values.size else np.zeros(0, dtype=np.int64)
    return sum((int(c) * u**d for d, c in enumerate(counts) if c), R.zero)


def acyclic_orientation_poly(g: Graph) -> MultiPoly:
    """sum over acyclic orientations O of u^des(O)"""
    if g.n > settings.orientation_limit:
        raise OracleLimitError(f"Orientation enumeration refused for n={g.n} (limit {settings.orientation_limit})")
    m = len(g.edges)
    masks = np.arange(1 << m, dtype=np.int64)
    # set bit k orients edge (i, j) as the descent j -> i
    bits = ((masks[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(bool)
    adjacency = np.zeros((masks.shape[0], g.n, g.n), dtype=bool)
    for k, (i, j) in enumerate(g.edges):
        adjacency[:, j, i] = bits[:, k]
        adjacency[:, i, j] = ~bits[:, k]
    reach = reachability(adjacency)
    acyclic = (reach & reach.transpose(0, 2, 1)).sum(axis=(1, 2)) == g.n
    return _histogram_poly(bits[acyclic].sum(axis=1))


def _colorings(n: int, colors: int) -> np.ndarray:
    return np.indices((colors,) * n).reshape(n, -1).T


def chromatic_value(g: Graph, colors: int) -> MultiPoly:
    """X_G(colors): sum over proper colorings c of u^(#edges i<j with c_i > c_j)"""
    if colors < 0:
        raise ValueError(f"Color count must be non-negative, got {colors}")
    if colors**g.n > settings.coloring_budget:
        raise OracleLimitError(f"{colors}^{g.n} colorings exceed the budget {settings.coloring_budget}")
    if colors == 0:
        return R.zero
    c = _colorings(g.n, colors)
    if not g.edges:
        return R(c.shape[0])
    left = c[:, [i for i, _ in g.edges]]
    right = c[:, [j for _, j in g.edges]]
    proper = (left != right).all(axis=1)
    return _histogram_poly((left > right)[proper].sum(axis=1))


def lagrange_interpolate(samples: list[tuple[int, MultiPoly]]) -> MultiPoly:
    """Exact interpolation in lambda through (point, value) samples"""
    result = R.zero
    for k, (x_k, value) in enumerate(samples):
        basis = R.one
        for m, (x_m, _) in enumerate(samples):
            if m != k:
                basis *= (lam - x_m) * rational(1, x_k - x_m)
        result += value * basis
    return result


def _interpolate(g: Graph, points: list[int]) -> MultiPoly:
    if len(points) < g.n + 1:
        raise ValueError(f"Degree {g.n} needs {g.n + 1} samples, got {len(points)}")
    result = lagrange_interpolate([(k, chromatic_value(g, k)) for k in points])
    for k in (-1, g.n + 1):
        ensure_integral(substitute(result, {"lambda": k}), f"X_G({k})")
    return result


def refined_chromatic_poly(g: Graph, mode: str = "interpolate", colors: int | None = None, samples: list[int] | None = None) -> MultiPoly:
    """
    mode "evaluate": X_G at the integer `colors`.
    mode "interpolate": X_G(lambda) as a polynomial in lambda with
    u-polynomial coefficients, from samples lambda = 0..n.
    """
    if mode == "evaluate":
        if colors is None:
            raise ValueError("evaluate mode needs a color count")
        return chromatic_value(g, colors)
    if mode != "interpolate":
        raise ValueError(f"mode must be evaluate or interpolate, got {mode!r}")
    if g.n > settings.interpolate_limit:
        raise OracleLimitError(f"Interpolation refused for n={g.n} (limit {settings.interpolate_limit})")
    return _interpolate(g, list(range(g.n + 1)) if samples is None else sorted(set(samples)))


def reciprocity_check(g: Graph) -> CheckResult:
    """X_G(-1) = (-1)^n sum_O u^des(O); samples lambda = 0..n for any graph the orientation oracle accepts"""
    expected = (-1) ** g.n * acyclic_orientation_poly(g)
    at_minus_one = substitute(_interpolate(g, list(range(g.n + 1))), {"lambda": -1})
    passed = at_minus_one == expected
    detail = "" if passed else f"X(-1) = {pretty(at_minus_one)}, expected {pretty(expected)}"
    return CheckResult(name=f"reciprocity {list(g.edges)}", passed=passed, detail=detail, n=g.n)


def reciprocity_suite(n: int = 4) -> list[CheckResult]:
    return [reciprocity_check(g) for g in all_graphs(n)]


def colored_graph_sum(n: int, colors: int) -> MultiPoly:
    """sum over all graphs G on [n] of y^e(G) X_G(colors)"""
    return sum((y ** len(g.edges) * chromatic_value(g, colors) for g in all_graphs(n)), R.zero)


def colored_graph_identity_check(n: int, colors: int) -> CheckResult:
    """Graph sum against the x^n numerator of (sum x^k/F(k))^colors"""
    if n > 4 or colors not in (0, 1, 2, 3):
        raise ValueError(f"colored graph identity is checked for n <= 4 and colors in 0..3, got ({n}, {colors})")
    brute = colored_graph_sum(n, colors)
    series = series_power(make_series(Family.EULERIAN_GRAPHIC, [R.one] * (n + 1)), colors)[n]
    passed = brute == series
    detail = "" if passed else f"graphs give {pretty(brute)}, series gives {pretty(series)}"
    return CheckResult(name=f"colored graphs n={n} lambda={colors}", passed=passed, detail=detail, n=n)
