import pytest

from census.models import CheckResult
from census.services import identity_service


def assert_all_passed(results: list[CheckResult]):
    assert results
    failed = [f"{r.name} n={r.n}: {r.detail}" for r in results if not r.passed]
    assert not failed, failed


def test_symmetry_and_degree():
    assert_all_passed(identity_service.symmetry_check())
    assert_all_passed(identity_service.degree_check())


def test_divisibility():
    assert_all_passed(identity_service.divisibility_check(10))


def test_totals():
    assert_all_passed(identity_service.totals_check(10))


def test_eta_totals():
    assert_all_passed(identity_service.eta_total_check(6))


def test_eta_tournament_identity():
    assert_all_passed(identity_service.eta_tournament_identity_check(6))
    with pytest.raises(ValueError):
        identity_service.eta_tournament_identity_check(0)


def test_acyclic_identities():
    assert_all_passed(identity_service.no_descent_product_check(7))
    assert_all_passed(identity_service.source_weight_check(5))


def test_kernels():
    assert_all_passed(identity_service.weighted_binomial_check(6))
    assert_all_passed(identity_service.normalization_check(8))


def test_cross_method():
    assert_all_passed(identity_service.cross_method_check(6))


def test_series_identities():
    assert_all_passed(identity_service.tournament_u_check(7))
    assert_all_passed(identity_service.acyclic_inverse_check(6))
    assert_all_passed(identity_service.strong_log_check(6))
    assert_all_passed(identity_service.wright_log_check(6))


def test_strong_tournament_log_identity_at_rational_points():
    assert_all_passed(identity_service.strong_tournament_log_check(5))


def test_source_components():
    assert_all_passed(identity_service.source_component_check((1, 2, 3), n_max=4))


def test_trees():
    assert_all_passed(identity_service.tree_revert_check(8))
    assert_all_passed(identity_service.forest_exp_check(6))
    assert_all_passed(identity_service.tree_oracle_check(7))


def test_tree_leaf_identity():
    assert_all_passed(identity_service.tree_leaf_identity_check(6, (-1, 0, 1, 2)))
    assert_all_passed(identity_service.leaf_functional_check(6))


def test_oracle_comparisons():
    assert_all_passed(identity_service.tournament_oracle_check(6))
    assert_all_passed(identity_service.digraph_oracle_check(5))


def test_failures_are_reported_not_raised():
    result = identity_service._compare("deliberate", identity_service.u, identity_service.y, 1)
    assert not result.passed
    assert result.detail == "got u, expected y"


def test_run_series_identity():
    assert_all_passed(identity_service.run_series_identity("tournament-U", 5))
    with pytest.raises(ValueError):
        identity_service.run_series_identity("tournament-V", 5)
    with pytest.raises(ValueError):
        identity_service.run_series_identity("tree-revert", 0)


def test_identities_suite():
    report = identity_service.run_suite("identities")
    assert report.suite == "identities"
    assert report.passed, [c.detail for c in report.failures]


def test_unknown_suite():
    with pytest.raises(ValueError):
        identity_service.run_suite("everything")
