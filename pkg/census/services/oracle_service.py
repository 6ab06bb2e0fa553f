"""
Descent Census - Oracle Service
Brute-force enumeration of small labeled digraphs, tournaments and rooted
trees. Edge sets are bitmasks; batches of masks are expanded into numpy
adjacency stacks and reduced to statistic histograms.

Digraph pair order: (i, j) for i != j in lex order, 0-based internally.
Tournament pair order: (i, j) for i < j in lex order; a set bit is the
descent j -> i.
"""
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import ceil, comb, log2

import numpy as np
from tqdm import tqdm

from census.config import settings
from census.models import CensusTable
from census.services.poly_service import MultiPoly, R, alpha, power, u, y

DIGRAPH_FILTERS = ("all", "strong", "acyclic")
TOURNAMENT_FILTERS = ("all", "strong")
DIGRAPH_STATS = ("des", "e", "sources", "ssc")


class OracleLimitError(ValueError):
    """Raised when an enumeration is refused over its size limit."""


@dataclass(frozen=True)
class Digraph:
    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Digraph needs n >= 1, got {self.n}")
        if self.mask < 0 or self.mask >> (self.n * (self.n - 1)):
            raise ValueError(f"mask {self.mask} does not fit {self.n * (self.n - 1)} ordered pairs")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Digraph":
        """Build from 1-based (s, t) pairs"""
        index = {pair: k for k, pair in enumerate(ordered_pairs(n))}
        mask = 0
        for s, t in edges:
            if s == t:
                raise ValueError(f"Loops are not representable: ({s}, {t})")
            mask |= 1 << index[(s - 1, t - 1)]
        return cls(n=n, mask=mask)

    def edges(self) -> list[tuple[int, int]]:
        """0-based edge list"""
        return [pair for k, pair in enumerate(ordered_pairs(self.n)) if self.mask >> k & 1]


@dataclass(frozen=True)
class DigraphStats:
    edges: int
    descents: int
    is_strong: bool
    is_acyclic: bool
    sources: int
    ssc: int


@lru_cache(maxsize=None)
def ordered_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(n) if i != j)


@lru_cache(maxsize=None)
def unordered_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def descent_mask(n: int) -> int:
    """Bits of the ordered pairs (s, t) with s > t"""
    return sum(1 << k for k, (s, t) in enumerate(ordered_pairs(n)) if s > t)


# ============== Single digraph ==============

def strong_components(n: int, edges: list[tuple[int, int]]) -> list[set[int]]:
    """Tarjan's algorithm; components come out in reverse topological order"""
    neighbours = {v: [] for v in range(n)}
    for s, t in edges:
        neighbours[s].append(t)
    index: dict[int, int] = {}
    lowlink: dict[int, int] = {}
    stack: list[int] = []
    on_stack: set[int] = set()
    components: list[set[int]] = []

    def strongconnect(v: int) -> None:
        index[v] = lowlink[v] = len(index)
        stack.append(v)
        on_stack.add(v)
        for w in neighbours[v]:
            if w not in index:
                strongconnect(w)
                lowlink[v] = min(lowlink[v], lowlink[w])
            elif w in on_stack:
                lowlink[v] = min(lowlink[v], index[w])
        if lowlink[v] == index[v]:
            component = set()
            while True:
                w = stack.pop()
                on_stack.discard(w)
                component.add(w)
                if w == v:
                    break
            components.append(component)

    for v in range(n):
        if v not in index:
            strongconnect(v)
    return components


def digraph_stats(d: Digraph) -> DigraphStats:
    edges = d.edges()
    components = strong_components(d.n, edges)
    owner = {v: k for k, component in enumerate(components) for v in component}
    entered = {owner[t] for s, t in edges if owner[s] != owner[t]}
    has_in = {t for _, t in edges}
    return DigraphStats(
        edges=len(edges),
        descents=sum(1 for s, t in edges if s > t),
        is_strong=len(components) == 1,
        is_acyclic=len(components) == d.n,
        sources=d.n - len(has_in),
        ssc=len(components) - len(entered),
    )


# ============== Batched enumeration ==============

def _mask_bits(masks: np.ndarray, width: int) -> np.ndarray:
    """(B,) int64 masks -> (B, width) bool"""
    return ((masks[:, None] >> np.arange(width, dtype=np.int64)) & 1).astype(bool)


def _adjacency(bits: np.ndarray, n: int, pairs) -> np.ndarray:
    adjacency = np.zeros((bits.shape[0], n, n), dtype=bool)
    rows = np.array([i for i, _ in pairs], dtype=np.intp)
    cols = np.array([j for _, j in pairs], dtype=np.intp)
    adjacency[:, rows, cols] = bits
    return adjacency


def reachability(adjacency: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure by repeated boolean squaring"""
    n = adjacency.shape[1]
    reach = adjacency | np.eye(n, dtype=bool)
    for _ in range(ceil(log2(n)) if n > 1 else 0):
        step = reach.astype(np.uint8)
        reach = (step @ step) > 0
    return reach


def _digraph_columns(masks: np.ndarray, n: int, filter: str, stats: tuple[str, ...]) -> np.ndarray:
    pairs = ordered_pairs(n)
    bits = _mask_bits(masks, len(pairs))
    descent_bits = np.array([s > t for s, t in pairs], dtype=bool)
    adjacency = _adjacency(bits, n, pairs)
    reach = reachability(adjacency)
    mutual = reach & reach.transpose(0, 2, 1)

    if filter == "strong":
        keep = reach.all(axis=(1, 2))
    elif filter == "acyclic":
        keep = mutual.sum(axis=(1, 2)) == n
    else:
        keep = np.ones(masks.shape[0], dtype=bool)

    columns = []
    for name in stats:
        if name == "des":
            columns.append((bits & descent_bits).sum(axis=1))
        elif name == "e":
            columns.append(bits.sum(axis=1))
        elif name == "sources":
            columns.append(n - adjacency.any(axis=1).sum(axis=1))
        elif name == "ssc":
            earlier = np.triu(np.ones((n, n), dtype=bool), k=1)
            representative = ~(mutual & earlier).any(axis=1)
            entered = (reach & ~reach.transpose(0, 2, 1)).any(axis=1)
            columns.append((representative & ~entered).sum(axis=1))
    return np.stack(columns, axis=1)[keep]


def _tournament_columns(masks: np.ndarray, n: int, filter: str, method: str) -> np.ndarray:
    pairs = unordered_pairs(n)
    bits = _mask_bits(masks, len(pairs))
    descents = bits.sum(axis=1)
    if filter == "all" or n == 1:
        return descents[:, None]

    if method == "score":
        lower = np.zeros((len(pairs), n), dtype=np.int64)
        upper = np.zeros((len(pairs), n), dtype=np.int64)
        for k, (i, j) in enumerate(pairs):
            lower[k, i] = 1
            upper[k, j] = 1
        ints = bits.astype(np.int64)
        out_degree = (1 - ints) @ lower + ints @ upper
        prefix = np.cumsum(np.sort(out_degree, axis=1), axis=1)[:, : n - 1]
        bounds = np.array([comb(k, 2) for k in range(1, n)], dtype=np.int64)
        keep = (prefix > bounds).all(axis=1)
    else:
        directed = [(j, i) for i, j in pairs]
        adjacency = _adjacency(bits, n, directed) | _adjacency(~bits, n, pairs)
        keep = reachability(adjacency).all(axis=(1, 2))
    return descents[keep][:, None]


def _histogram(columns: np.ndarray) -> Counter:
    if columns.shape[0] == 0:
        return Counter()
    keys, counts = np.unique(columns, axis=0, return_counts=True)
    return Counter({tuple(int(v) for v in key): int(c) for key, c in zip(keys, counts)})


def _chunks(width: int) -> list[tuple[int, int]]:
    size = 1 << min(width, settings.chunk_bits)
    return [(start, start + size) for start in range(0, 1 << width, size)]


def _run_chunks(width: int, worker, threads: int | None, label: str) -> Counter:
    """Histogram over all masks of `width` bits, partitioned by high bits"""
    chunks = _chunks(width)
    workers = max(1, threads or settings.threads)
    progress = tqdm(
        total=len(chunks),
        desc=label,
        file=sys.stderr,
        disable=None if len(chunks) >= 16 else True,
        leave=False,
    )

    def run(bounds: tuple[int, int]) -> Counter:
        start, stop = bounds
        return worker(np.arange(start, stop, dtype=np.int64))

    merged = Counter()
    try:
        if workers == 1:
            for bounds in chunks:
                merged.update(run(bounds))
                progress.update()
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                for partial in pool.map(run, chunks):
                    merged.update(partial)
                    progress.update()
    finally:
        progress.close()
    return merged


def _check_limit(n: int, limit: int, what: str, hint: str = "") -> None:
    if n < 1:
        raise ValueError(f"{what} enumeration needs n >= 1, got {n}")
    if n > limit:
        raise OracleLimitError(f"{what} enumeration refused for n={n} (limit {limit}){hint}")


def check_digraph_order(n: int, long: bool = False) -> None:
    """Refuse digraph orders over the enumeration limit; --long raises the limit"""
    limit = settings.digraph_long_limit if long else settings.digraph_limit
    _check_limit(n, limit, "Digraph", "" if long else "; pass --long to raise it")


def enumerate_tournaments(
    n: int,
    filter: str = "all",
    threads: int | None = None,
    method: str = "score",
    limit: int | None = None,
) -> CensusTable:
    """Descent histogram over all 2^C(n,2) tournaments on [n]"""
    if filter not in TOURNAMENT_FILTERS:
        raise ValueError(f"filter must be one of {', '.join(TOURNAMENT_FILTERS)}, got {filter!r}")
    if method not in ("score", "closure"):
        raise ValueError(f"method must be score or closure, got {method!r}")
    _check_limit(n, limit or settings.tournament_limit, "Tournament")
    counts = _run_chunks(
        comb(n, 2),
        lambda masks: _histogram(_tournament_columns(masks, n, filter, method)),
        threads,
        f"tournaments n={n}",
    )
    return CensusTable(family="tournament", n=n, filter=filter, stats=["des"], counts=dict(counts))


def enumerate_digraphs(
    n: int,
    filter: str = "all",
    stats: tuple[str, ...] = ("des", "e"),
    long: bool = False,
    threads: int | None = None,
) -> CensusTable:
    """Histogram of the requested statistics over all digraphs on [n] passing the filter"""
    if filter not in DIGRAPH_FILTERS:
        raise ValueError(f"filter must be one of {', '.join(DIGRAPH_FILTERS)}, got {filter!r}")
    unknown = [name for name in stats if name not in DIGRAPH_STATS]
    if unknown or not stats:
        raise ValueError(f"stats must be drawn from {', '.join(DIGRAPH_STATS)}, got {list(stats)}")
    check_digraph_order(n, long)
    stats = tuple(stats)
    counts = _run_chunks(
        n * (n - 1),
        lambda masks: _histogram(_digraph_columns(masks, n, filter, stats)),
        threads,
        f"digraphs n={n}",
    )
    return CensusTable(family="digraph", n=n, filter=filter, stats=list(stats), counts=dict(counts))


def enumerate_trees(n: int) -> CensusTable:
    """(des, leaves) histogram over rooted trees on [n]; the one-vertex tree has no leaf"""
    _check_limit(n, settings.tree_limit, "Tree")
    counts = Counter()
    if n == 1:
        counts[(0, 0)] = 1
        return CensusTable(family="tree", n=1, stats=["des", "leaves"], counts=dict(counts))

    vertices = np.arange(n)
    for root in range(n):
        others = [v for v in range(n) if v != root]
        choices = [[p for p in range(n) if p != v] for v in others]
        candidates = np.array(list(product(*choices)), dtype=np.int64)
        parent = np.full((candidates.shape[0], n), root, dtype=np.int64)
        parent[:, others] = candidates

        walk = np.tile(vertices, (parent.shape[0], 1))
        for _ in range(n - 1):
            walk = np.take_along_axis(parent, walk, axis=1)
        trees = parent[(walk == root).all(axis=1)]

        descents = (trees[:, others] < np.array(others)).sum(axis=1)
        has_child = (trees[:, others, None] == vertices).any(axis=1)
        leaves = n - has_child.sum(axis=1)
        counts.update(_histogram(np.stack([descents, leaves], axis=1)))
    return CensusTable(family="tree", n=n, stats=["des", "leaves"], counts=dict(counts))


# ============== Histograms as polynomials ==============

def table_poly(table: CensusTable, weights: dict[str, MultiPoly]) -> MultiPoly:
    """sum count * prod weight[stat]^value over the table"""
    total = R.zero
    for key, count in table.counts.items():
        term = R(count)
        for name, value in zip(table.stats, key):
            if name in weights:
                term *= power(weights[name], value)
        total += term
    return total


def source_component_poly(n: int, threads: int | None = None) -> MultiPoly:
    """d_n(u,y;alpha) = sum over all D of u^des y^e alpha^ssc"""
    table = enumerate_digraphs(n, "all", ("des", "e", "ssc"), threads=threads)
    return table_poly(table, {"des": u, "e": y, "ssc": alpha})
