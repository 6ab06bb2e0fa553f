"""
Descent Census - Identity Service
Every cross-check of the census: recurrences against series identities,
closed forms against brute-force enumeration. Checks never raise on a
mismatch; they return CheckResult(passed=False).
"""
from math import comb

from census.models import CheckResult, VerificationReport
from census.services import (
    binomial_service,
    chromatic_service,
    family_service,
    oracle_service,
    series_service,
)
from census.services.poly_service import (
    MultiPoly,
    R,
    alpha,
    degree,
    evaluate,
    exact_divide,
    laurent_substitute,
    pretty,
    rational,
    reverse,
    substitute,
    to_poly,
    u,
    y,
    z,
)
from census.services.series_service import Family, make_series

SUITES = ("oracle", "identities", "all")
SERIES_IDENTITIES = ("strong-log", "acyclic-inverse", "tournament-U", "tree-revert", "forest-exp")


def _result(name: str, passed: bool, detail: str = "", n: int | None = None) -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail="" if passed else detail, n=n)


def _compare(name: str, got: MultiPoly, expected: MultiPoly, n: int | None = None) -> CheckResult:
    return _result(name, got == expected, f"got {pretty(got)}, expected {pretty(expected)}", n)


def _compare_series(name: str, got, expected, start: int = 0) -> list[CheckResult]:
    order = min(got.order, expected.order)
    return [_compare(name, got[n], expected[n], n) for n in range(start, order + 1)]


# ============== Strong tournaments ==============

def symmetry_check(n_values=range(3, 9)) -> list[CheckResult]:
    """t_n(u) = u^C(n,2) t_n(1/u)"""
    results = []
    for n in n_values:
        t = family_service.strong_tournament_poly(n)
        results.append(_compare("t_n symmetry", reverse(t, "u", comb(n, 2)), t, n))
    return results


def degree_check(n_values=range(3, 9)) -> list[CheckResult]:
    results = []
    for n in n_values:
        d = degree(family_service.strong_tournament_poly(n), "u")
        results.append(_result("t_n degree", d == comb(n, 2) - 1, f"degree {d}, expected {comb(n, 2) - 1}", n))
    return results


def divisibility_check(n_max: int = 10) -> list[CheckResult]:
    """(1+u)^floor(n/2) divides t_n"""
    results = []
    for n in range(1, n_max + 1):
        try:
            exact_divide(family_service.strong_tournament_poly(n), (1 + u) ** (n // 2))
            results.append(_result("t_n divisibility", True, n=n))
        except ValueError as e:
            results.append(_result("t_n divisibility", False, str(e), n))
    return results


def totals_check(n_max: int = 10) -> list[CheckResult]:
    """t_n(1) against the integer recurrence for strong tournament counts"""
    totals = family_service.moon_moser_totals(n_max)
    results = []
    for n in range(1, n_max + 1):
        value = evaluate(family_service.strong_tournament_poly(n), {"u": 1})
        results.append(_result("t_n(1) totals", value == totals[n - 1], f"{value} != {totals[n - 1]}", n))
    return results


def eta_total_check(n_max: int = 6) -> list[CheckResult]:
    """eta_n(1,1) = 2^C(n,2) t_n(1), and the integer eta recurrence agrees"""
    wright = family_service.wright_eta(n_max)
    results = []
    for n in range(1, n_max + 1):
        eta = evaluate(family_service.eta_poly(n), {"u": 1, "y": 1})
        expected = 2 ** comb(n, 2) * evaluate(family_service.strong_tournament_poly(n), {"u": 1})
        results.append(_result("eta_n(1,1) = 2^C(n,2) t_n(1)", eta == expected, f"{eta} != {expected}", n))
        results.append(_result("eta_n(1,1) integer recurrence", eta == wright[n - 1], f"{eta} != {wright[n - 1]}", n))
    return results


def eta_tournament_identity_check(n_max: int = 6) -> list[CheckResult]:
    """eta_n(y^-2, y) = (1+y)^C(n,2) t_n(1/y), both sides cleared by a common power of y"""
    if n_max < 1:
        raise ValueError(f"eta_tournament_identity_check needs n_max >= 1, got {n_max}")
    results = []
    for n in range(1, n_max + 1):
        eta = family_service.eta_poly(n)
        t = family_service.strong_tournament_poly(n)
        clear = max(2 * degree(eta, "u"), degree(t, "u"), 0)
        left = laurent_substitute(eta, "u", -2, "y", clear)
        right = (1 + y) ** comb(n, 2) * laurent_substitute(t, "u", -1, "y", clear)
        results.append(_compare("eta/tournament Laurent identity", left, right, n))
    return results


# ============== Acyclic digraphs and kernels ==============

def no_descent_product_check(n_max: int = 7) -> list[CheckResult]:
    results = []
    for n in range(0, n_max + 1):
        got = substitute(family_service.acyclic_source_poly(n), {"u": 0})
        results.append(_compare("a_n(0,y;alpha) product", got, family_service.acyclic_no_descent_product(n), n))
    return results


def source_weight_check(n_max: int = 6) -> list[CheckResult]:
    """alpha = 1 recovers a_n; alpha = 0 vanishes for n >= 1"""
    results = []
    for n in range(0, n_max + 1):
        with_sources = family_service.acyclic_source_poly(n)
        results.append(_compare("a_n(u,y;1) = a_n(u,y)", substitute(with_sources, {"alpha": 1}), family_service.acyclic_poly(n), n))
        if n:
            results.append(_compare("a_n(u,y;0) = 0", substitute(with_sources, {"alpha": 0}), R.zero, n))
    return results


def weighted_binomial_check(n_max: int = 6) -> list[CheckResult]:
    """Closed kernels against the literal sums over ordered partitions"""
    results = []
    for n in range(0, n_max + 1):
        for i in range(n + 1):
            results.append(_compare(
                f"B({n},{i}) by pairs",
                binomial_service.weighted_binomial_by_pairs(n, i),
                binomial_service.weighted_binomial(n, i),
                n,
            ))
            results.append(_compare(
                f"[{n},{i}]_u by subsets",
                binomial_service.gaussian_binomial_by_subsets(n, i),
                binomial_service.gaussian_binomial(n, i),
                n,
            ))
    return results


def normalization_check(n_max: int = 8) -> list[CheckResult]:
    """F(n) = B(n,i) F(i) F(n-i)"""
    results = []
    for n in range(0, n_max + 1):
        F = binomial_service.normalization_F
        passed = all(binomial_service.weighted_binomial(n, i) * F(i) * F(n - i) == F(n) for i in range(n + 1))
        results.append(_result("F(n) = B(n,i) F(i) F(n-i)", passed, "factorization fails for some i", n))
    return results


def cross_method_check(n_max: int = 6) -> list[CheckResult]:
    results = []
    for n in range(1, n_max + 1):
        results.append(_compare(
            "s_n recurrence = series",
            family_service.strong_digraph_poly(n, "recurrence"),
            family_service.strong_digraph_poly(n, "series"),
            n,
        ))
    for n in range(0, n_max + 1):
        results.append(_compare(
            "a_n recurrence = series",
            family_service.acyclic_poly(n, "recurrence"),
            family_service.acyclic_poly(n, "series"),
            n,
        ))
        results.append(_compare(
            "a_n(alpha) recurrence = series",
            family_service.acyclic_source_poly(n, "recurrence"),
            family_service.acyclic_source_poly(n, "series"),
            n,
        ))
    return results


# ============== Series identities ==============

def tournament_u_check(order: int = 7) -> list[CheckResult]:
    """U(x) (1 - T(x)) = 1"""
    U = family_service.tournament_series(order)
    one_minus_t = series_service.series_sub(
        series_service.one(Family.EULERIAN_U, order), family_service.strong_tournament_series(order)
    )
    product = series_service.series_multiply(U, one_minus_t)
    return _compare_series("U(1-T) = 1", product, series_service.one(Family.EULERIAN_U, order))


def acyclic_inverse_check(order: int = 6) -> list[CheckResult]:
    """A(x) sum (-1)^n x^n/F(n) = 1, with A built from a_n"""
    A = make_series(Family.EULERIAN_GRAPHIC, [family_service.acyclic_poly(n) for n in range(order + 1)])
    product = series_service.series_multiply(A, family_service.alternating_series(order, -1))
    return _compare_series("A(x) sum (-1)^n x^n/F(n) = 1", product, series_service.one(Family.EULERIAN_GRAPHIC, order))


def strong_log_check(order: int = 6) -> list[CheckResult]:
    """S numerators equal s_n, and Delta(e^-S) D = 1"""
    S = make_series(Family.EGF, [R.zero] + [family_service.strong_digraph_poly(n) for n in range(1, order + 1)])
    results = _compare_series("S(x) = -log(Delta^-1(D^-1))", family_service.strong_digraph_series(order), S, start=1)
    inverse = series_service.delta_transform(series_service.series_exp(series_service.series_scale(S, -1)), "forward")
    product = series_service.series_multiply(inverse, family_service.digraph_series(order))
    results += _compare_series("Delta(e^-S) D = 1", product, series_service.one(Family.EULERIAN_GRAPHIC, order))
    return results


def wright_log_check(order: int = 6) -> list[CheckResult]:
    """At u = y = 1: -log(1 - sum 2^C(n,2) t_n(1) x^n/n!) has numerators s_n(1,1)"""
    weighted = [R.one] + [
        -(2 ** comb(n, 2)) * to_poly(evaluate(family_service.strong_tournament_poly(n), {"u": 1}))
        for n in range(1, order + 1)
    ]
    log = series_service.series_log(make_series(Family.EGF, weighted))
    results = []
    for n in range(1, order + 1):
        s = to_poly(evaluate(family_service.strong_digraph_poly(n), {"u": 1, "y": 1}))
        results.append(_compare("wright log identity", -log[n], s, n))
    return results


def strong_tournament_log_check(order: int = 5, samples=(2, 3, rational(1, 2))) -> list[CheckResult]:
    """
    sum s_n(y^-2, y) x^n/n! = -log(1 - sum (1+y)^C(n,2) t_n(1/y) x^n/n!),
    checked exactly at rational y.
    """
    results = []
    for sample in samples:
        value = to_poly(sample)
        inverse_square = to_poly(rational(1, 1) / (sample * sample))
        inverse = to_poly(rational(1, 1) / sample)
        weighted = [R.one] + [
            -((1 + value) ** comb(n, 2)) * substitute(family_service.strong_tournament_poly(n), {"u": inverse})
            for n in range(1, order + 1)
        ]
        log = series_service.series_log(make_series(Family.EGF, weighted))
        for n in range(1, order + 1):
            s = substitute(family_service.strong_digraph_poly(n), {"u": inverse_square, "y": value})
            results.append(_compare(f"strong digraph/tournament log identity at y={sample}", -log[n], s, n))
    return results


def source_component_check(alphas=(1, 2, 3), n_max: int = 4, threads: int | None = None) -> list[CheckResult]:
    """sum_i B(n,i) v_i d_{n-i}(u,y;1) = d_n(u,y;alpha+1), v = exp(alpha S)"""
    S = family_service.strong_digraph_series(n_max)
    oracle = {n: oracle_service.source_component_poly(n, threads) for n in range(1, n_max + 1)}
    results = []
    for a in alphas:
        v = series_service.series_exp(series_service.series_scale(S, a))
        for n in range(1, n_max + 1):
            left = sum(
                (binomial_service.weighted_binomial(n, i) * v[i] * family_service.all_digraph_poly(n - i) for i in range(n + 1)),
                R.zero,
            )
            right = substitute(oracle[n], {"alpha": a + 1})
            results.append(_compare(f"source strong components alpha={a}", left, right, n))
    return results


def tree_revert_check(order: int = 8) -> list[CheckResult]:
    """The inverse of the alternating [n]_u series has numerators prod(iu + n - i)"""
    inverse = family_service.tree_inverse_series(order)
    reverted = series_service.series_revert(inverse)
    results = _compare_series("revert gives tree_poly", reverted, family_service.tree_series(order), start=1)
    composed = series_service.series_compose(family_service.tree_series(order), inverse)
    results += _compare_series("T(inverse) = x", composed, series_service.variable_x(Family.EGF, order))
    return results


def forest_exp_check(order: int = 6) -> list[CheckResult]:
    """exp(z T(x,u)) has numerators forest_poly(n)"""
    forests = series_service.series_exp(series_service.series_scale(family_service.tree_series(order), z))
    expected = make_series(Family.EGF, [R.one] + [family_service.forest_poly(n) for n in range(1, order + 1)])
    results = _compare_series("exp(zT) = forests", forests, expected)
    for n in range(1, order + 1):
        results.append(_compare("forests at u=1", substitute(family_service.forest_poly(n), {"u": 1}), z * (z + n) ** (n - 1), n))
    return results


# ============== Oracle comparisons ==============

def tree_leaf_identity_check(n_max: int = 6, alphas=(-1, 0, 1, 2)) -> list[CheckResult]:
    """T(x,u; alpha+1) = T(short(alpha)) against the oracle's (des, leaves) histogram"""
    tables = {n: oracle_service.enumerate_trees(n) for n in range(1, n_max + 1)}
    results = []
    for a in alphas:
        composed = series_service.series_compose(
            family_service.tree_series(n_max), family_service.short_tree_series(n_max, a)
        )
        for n in range(1, n_max + 1):
            brute = oracle_service.table_poly(tables[n], {"des": u, "leaves": R(a + 1)})
            results.append(_compare(f"tree leaf identity alpha={a}", composed[n], brute, n))
    return results


def leaf_functional_check(n_max: int = 6) -> list[CheckResult]:
    """At u = 1: T(x;alpha) = x exp(T(x;alpha) + (alpha - 1) x)"""
    T = make_series(Family.EGF, [R.zero] + [
        oracle_service.table_poly(oracle_service.enumerate_trees(n), {"leaves": alpha})
        for n in range(1, n_max + 1)
    ])
    shift = series_service.series_scale(series_service.variable_x(Family.EGF, n_max), alpha - 1)
    f = series_service.series_exp(series_service.series_add(T, shift))
    results = []
    for n in range(1, n_max + 1):
        results.append(_compare("leaf functional equation", T[n], n * f[n - 1], n))
    return results


def tournament_oracle_check(n_max: int = 6, threads: int | None = None) -> list[CheckResult]:
    results = []
    for n in range(1, n_max + 1):
        strong = oracle_service.enumerate_tournaments(n, "strong", threads)
        results.append(_compare(
            "strong tournaments oracle",
            oracle_service.table_poly(strong, {"des": u}),
            family_service.strong_tournament_poly(n),
            n,
        ))
        if n <= 5:
            everything = oracle_service.enumerate_tournaments(n, "all", threads)
            results.append(_compare(
                "all tournaments oracle",
                oracle_service.table_poly(everything, {"des": u}),
                family_service.all_tournament_poly(n),
                n,
            ))
    return results


def digraph_oracle_check(n_max: int = 5, long: bool = False, threads: int | None = None) -> list[CheckResult]:
    weights = {"des": u, "e": y}
    results = []
    for n in range(1, n_max + 1):
        strong = oracle_service.enumerate_digraphs(n, "strong", long=long, threads=threads)
        results.append(_compare(
            "strong digraphs oracle",
            oracle_service.table_poly(strong, weights),
            family_service.strong_digraph_poly(n),
            n,
        ))
        acyclic = oracle_service.enumerate_digraphs(n, "acyclic", ("des", "e", "sources"), long=long, threads=threads)
        results.append(_compare(
            "acyclic digraphs oracle",
            oracle_service.table_poly(acyclic, weights),
            family_service.acyclic_poly(n),
            n,
        ))
        results.append(_compare(
            "acyclic digraphs by sources oracle",
            oracle_service.table_poly(acyclic, {**weights, "sources": alpha}),
            family_service.acyclic_source_poly(n),
            n,
        ))
    return results


def tree_oracle_check(n_max: int = 7) -> list[CheckResult]:
    results = []
    for n in range(1, n_max + 1):
        table = oracle_service.enumerate_trees(n)
        results.append(_compare("rooted trees oracle", oracle_service.table_poly(table, {"des": u}), family_service.tree_poly(n), n))
    return results


def chromatic_checks() -> list[CheckResult]:
    results = chromatic_service.reciprocity_suite(4)
    for n in range(1, 5):
        for colors in range(4):
            results.append(chromatic_service.colored_graph_identity_check(n, colors))
    return results


# ============== Suites ==============

def run_series_identity(identity: str, order: int) -> list[CheckResult]:
    """One named identity of the series command"""
    if identity not in SERIES_IDENTITIES:
        raise ValueError(f"Unknown identity {identity!r}. Known: {', '.join(SERIES_IDENTITIES)}")
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    checks = {
        "strong-log": strong_log_check,
        "acyclic-inverse": acyclic_inverse_check,
        "tournament-U": tournament_u_check,
        "tree-revert": tree_revert_check,
        "forest-exp": forest_exp_check,
    }
    return checks[identity](order)


def identities_suite() -> VerificationReport:
    report = VerificationReport(suite="identities")
    report.extend(symmetry_check())
    report.extend(degree_check())
    report.extend(divisibility_check(10))
    report.extend(totals_check(10))
    report.extend(eta_total_check(6))
    report.extend(eta_tournament_identity_check(6))
    report.extend(no_descent_product_check(7))
    report.extend(source_weight_check(6))
    report.extend(weighted_binomial_check(6))
    report.extend(normalization_check(8))
    report.extend(cross_method_check(6))
    report.extend(tournament_u_check(7))
    report.extend(acyclic_inverse_check(6))
    report.extend(strong_log_check(6))
    report.extend(wright_log_check(6))
    report.extend(strong_tournament_log_check(5))
    report.extend(tree_revert_check(8))
    report.extend(forest_exp_check(6))
    return report


def oracle_suite(n_max: int = 5, long: bool = False, threads: int | None = None) -> VerificationReport:
    """Closed forms against enumeration; digraphs up to n_max, long adds n = 7 tournaments"""
    oracle_service.check_digraph_order(n_max, long)
    report = VerificationReport(suite="oracle")
    report.extend(tournament_oracle_check(7 if long else 6, threads))
    report.extend(digraph_oracle_check(n_max, long, threads))
    report.extend(tree_oracle_check(7))
    report.extend(tree_leaf_identity_check(6))
    report.extend(leaf_functional_check(6))
    report.extend(source_component_check(n_max=min(n_max, 4), threads=threads))
    report.extend(chromatic_checks())
    return report


def run_suite(suite: str, n_max: int = 5, long: bool = False, threads: int | None = None) -> VerificationReport:
    if suite not in SUITES:
        raise ValueError(f"Unknown suite {suite!r}. Known: {', '.join(SUITES)}")
    if suite == "identities":
        return identities_suite()
    oracle = oracle_suite(n_max, long, threads)
    if suite == "oracle":
        return oracle
    report = identities_suite()
    report.suite = "all"
    report.extend(oracle.checks)
    return report
