import json

import pytest

from census.main import main
from census.models import CheckResult, VerificationReport
from census.services.family_service import moon_moser_totals
from census.services import identity_service, table_service


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


# ============== table ==============

def test_parse_n_range():
    assert table_service.parse_n_range("4..7") == [4, 5, 6, 7]
    assert table_service.parse_n_range("3") == [3]
    with pytest.raises(ValueError):
        table_service.parse_n_range("7..4")
    with pytest.raises(ValueError):
        table_service.parse_n_range("a..b")


def test_strong_tournament_table(capsys):
    code, out = run(capsys, "table", "strong-tournaments", "-n", "4..7", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "d,n=4,n=5,n=6,n=7"
    assert lines[1] == "1,1,1,1,1"
    assert lines[2] == "2,6,13,22,33"
    assert lines[-1] == "TOTAL,24,544,22320,1677488"


def test_acyclic_table_by_descents(capsys):
    code, out = run(capsys, "table", "acyclic", "-n", "1..7", "--y1", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[1] == "0,1,2,8,64,1024,32768,2097152"
    assert lines[-1] == "TOTAL,1,3,25,543,29281,3781503,1138779265"


def test_strong_digraph_table_by_edges(capsys):
    code, out = run(capsys, "table", "strong-digraphs", "-n", "3..5", "--u1", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "e,n=3,n=4,n=5"
    assert lines[1] == "3,2,0,0"
    assert lines[-1] == "TOTAL,18,1606,565080"


def test_bivariate_rows_without_specialization():
    table = table_service.build_family_table("strong-digraphs", [2])
    assert table.row_header == "d/e"
    assert [(row.label, row.values) for row in table.rows] == [("1/2", [1])]


def test_totals_only():
    table = table_service.build_family_table("acyclic", [2, 3], "uy")
    assert table.rows == []
    assert table.totals == [3, 25]


def test_table_is_deterministic(capsys):
    first = run(capsys, "table", "eta", "-n", "2..4", "--format", "json")
    second = run(capsys, "table", "eta", "-n", "2..4", "--format", "json")
    assert first == second
    assert json.loads(first[1])["family"] == "eta"


def test_table_out_of_range(capsys):
    code, _ = run(capsys, "table", "strong-tournaments", "-n", "0..3")
    assert code == 2
    code, _ = run(capsys, "table", "strong-tournaments", "-n", "40")
    assert code == 2


def test_table_computes_past_memo_bound(capsys):
    code, out = run(capsys, "table", "strong-tournaments", "-n", "11", "--format", "csv")
    assert code == 0
    assert out.splitlines()[-1] == f"TOTAL,{moon_moser_totals(11)[-1]}"


def test_global_flags_before_subcommand(capsys):
    code, out = run(capsys, "--format", "csv", "table", "trees", "-n", "3")
    assert code == 0
    assert out.splitlines() == ["d,n=3", "0,2", "1,5", "2,2", "TOTAL,9"]


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "everything"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["table", "acyclic", "--u1", "--y1"])
    assert excinfo.value.code == 2


# ============== verify / series ==============

def test_verify_reports_failure(capsys, monkeypatch):
    failing = VerificationReport(suite="identities", checks=[
        CheckResult(name="ok", passed=True),
        CheckResult(name="broken", passed=False, detail="1 != 2", n=3),
    ])
    monkeypatch.setattr(identity_service, "run_suite", lambda *args, **kwargs: failing)
    code, out = run(capsys, "verify", "identities")
    assert code == 1
    assert "❌ broken (n=3): 1 != 2" in out
    assert out.splitlines()[-1] == "1/2 checks passed"


def test_verify_csv(capsys, monkeypatch):
    passing = VerificationReport(suite="oracle", checks=[CheckResult(name="fine", passed=True, n=2)])
    monkeypatch.setattr(identity_service, "run_suite", lambda *args, **kwargs: passing)
    code, out = run(capsys, "verify", "oracle", "--format", "csv")
    assert code == 0
    assert out == "name,n,passed,detail\nfine,2,True,\n"


def test_verify_oracle_honours_order(capsys, monkeypatch):
    seen = []

    def digraph_check(n_max, long, threads):
        seen.append((n_max, long))
        return [CheckResult(name="digraphs", passed=True, n=n_max)]

    monkeypatch.setattr(identity_service, "digraph_oracle_check", digraph_check)
    for name in ("tournament_oracle_check", "tree_oracle_check", "tree_leaf_identity_check",
                 "leaf_functional_check", "source_component_check", "chromatic_checks"):
        monkeypatch.setattr(identity_service, name, lambda *args, **kwargs: [])

    code, _ = run(capsys, "verify", "oracle", "-n", "3", "--long")
    assert code == 0
    assert seen == [(3, True)]

    code, _ = run(capsys, "verify", "oracle", "-n", "6")
    assert code == 2
    code, _ = run(capsys, "verify", "oracle", "-n", "7", "--long")
    assert code == 2
    assert seen == [(3, True)]

    code, _ = run(capsys, "verify", "oracle", "-n", "6", "--long")
    assert code == 0
    assert seen[-1] == (6, True)


def test_series_command(capsys):
    code, out = run(capsys, "series", "tournament-U", "-N", "7")
    assert code == 0
    assert out.splitlines()[-1] == "8/8 checks passed"


def test_series_order_limit(capsys):
    code, _ = run(capsys, "series", "tree-revert", "-N", "9")
    assert code == 2


# ============== chromatic ==============

@pytest.fixture
def graph_file(tmp_path):
    def write(text):
        path = tmp_path / "graph.txt"
        path.write_text(text)
        return str(path)
    return write


def test_chromatic_interpolate(capsys, graph_file):
    code, out = run(capsys, "chromatic", graph_file("2\n1 2\n"), "--interpolate")
    assert code == 0
    assert out.strip() == "-1/2*lambda + 1/2*lambda^2 - 1/2*u*lambda + 1/2*u*lambda^2"


def test_chromatic_evaluate(capsys, graph_file):
    code, out = run(capsys, "chromatic", graph_file("3\n"), "--lambda", "3")
    assert code == 0
    assert out.strip() == "27"


def test_chromatic_reciprocity(capsys, graph_file):
    code, _ = run(capsys, "chromatic", graph_file("3\n1 2\n2 3\n1 3\n"), "--reciprocity")
    assert code == 0


def test_chromatic_reciprocity_on_six_vertices(capsys, graph_file):
    hexagon = graph_file("6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n")
    code, out = run(capsys, "chromatic", hexagon, "--reciprocity")
    assert code == 0
    assert out.splitlines()[-1] == "1/1 checks passed"
    code, _ = run(capsys, "chromatic", hexagon, "--interpolate")
    assert code == 2


def test_chromatic_parse_failure(capsys, graph_file):
    code, _ = run(capsys, "chromatic", graph_file("three\n"), "--interpolate")
    assert code == 2
    code, _ = run(capsys, "chromatic", "/nonexistent/graph.txt", "--interpolate")
    assert code == 2


# ============== poly / oracle ==============

def test_poly_pretty(capsys):
    code, out = run(capsys, "poly", "strong_tournament", "3")
    assert code == 0
    assert out == "u + u^2\n"


def test_poly_json(capsys):
    code, out = run(capsys, "poly", "eta", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["value"]["terms"] == [
        {"e": [0, 0, 0, 0, 0, 0], "n": "-1"},
        {"e": [1, 2, 0, 0, 0, 0], "n": "1"},
    ]


def test_poly_series_method(capsys):
    code, out = run(capsys, "poly", "acyclic", "2", "--method", "series")
    assert code == 0
    assert out == "1 + y + u*y\n"


def test_oracle_csv(capsys):
    code, out = run(capsys, "oracle", "tournaments", "3", "--format", "csv")
    assert code == 0
    assert out == "des,count\n0,1\n1,3\n2,3\n3,1\n"


def test_oracle_refusal(capsys):
    code, _ = run(capsys, "oracle", "digraphs", "6")
    assert code == 2


def test_oracle_rejects_flags_that_do_not_apply(capsys):
    code, _ = run(capsys, "oracle", "trees", "3", "--filter", "strong")
    assert code == 2
    code, _ = run(capsys, "oracle", "trees", "3", "--filter", "all")
    assert code == 2
    code, _ = run(capsys, "oracle", "tournaments", "3", "--stats", "des,e")
    assert code == 2
    code, out = run(capsys, "oracle", "digraphs", "2", "--filter", "acyclic", "--stats", "e", "--format", "csv")
    assert code == 0
    assert out == "e,count\n0,1\n1,2\n"
