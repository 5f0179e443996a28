"""The argparse front end, run in-process."""

import json

import pytest

from twoswitch.cli import run
from twoswitch.graphs import Graph, format_edge_list, parse_edge_list
from twoswitch.transition import trace_from_json, replay


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def edges_file(tmp_path):
    def write(name, g):
        path = tmp_path / name
        path.write_text(format_edge_list(g), encoding="utf-8")
        return str(path)

    return write


class TestTransit:
    def test_fixture_pair_to_stdout(self, capsys):
        code, out, err = invoke(capsys, "transit", "--family", "forest", "fig1_g0", "fig1_g2")
        assert code == 0 and err == ""
        trace = trace_from_json(out)
        assert len(trace.steps) <= 1
        assert replay(trace)[-1].n == 7

    def test_out_file_round_trip(self, capsys, tmp_path):
        out_path = tmp_path / "trace.json"
        code, out, _ = invoke(
            capsys, "transit", "--family", "forest", "fig1_g0", "fig1_g2",
            "--out", str(out_path),
        )
        assert code == 0 and out == ""
        trace = trace_from_json(out_path.read_text(encoding="utf-8"))
        assert replay(trace)[-1].size == 6

    def test_sequence_mismatch_is_usage_error(self, capsys, edges_file):
        a = edges_file("a.edges", Graph(3, [(1, 2)]))
        b = edges_file("b.edges", Graph(3, [(1, 2), (2, 3)]))
        code, out, err = invoke(capsys, "transit", a, b)
        assert code == 2
        assert err.startswith("error:")

    def test_missing_file(self, capsys):
        code, _, err = invoke(capsys, "transit", "nope.edges", "fig1_g0")
        assert code == 2 and "nope.edges" in err


class TestParams:
    def test_all_kinds_sorted(self, capsys):
        code, out, _ = invoke(capsys, "params", "fig1_g0")
        assert code == 0
        keys = [line.split("=")[0] for line in out.splitlines()]
        assert keys == sorted(keys)
        assert "matching" in keys and "rank" in keys and "nullity" in keys

    def test_single_kind(self, capsys):
        code, out, _ = invoke(capsys, "params", "fig1_g0", "--kind", "matching")
        assert code == 0
        assert out.strip() == "matching=3"

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "params", "fig1_g0", "--json")
        values = json.loads(out)
        assert code == 0
        assert values["rank"] == 2 * values["matching"]  # forest identity

    def test_isolated_vertex_drops_edge_cover(self, capsys, edges_file):
        path = edges_file("iso.edges", Graph(3, [(1, 2)]))
        code, out, _ = invoke(capsys, "params", path)
        assert code == 0
        assert "edge_cover" not in out
        assert "matching=1" in out


class TestStabilityAudit:
    def test_single_graph(self, capsys):
        code, out, _ = invoke(capsys, "stability-audit", "--graph", "fig1_g0", "--kind", "matching")
        assert code == 0
        assert out.startswith("matching=pass")

    def test_order_sweep_all_kinds(self, capsys):
        code, out, _ = invoke(capsys, "stability-audit", "--n", "4")
        assert code == 0
        assert len(out.splitlines()) == 9
        assert all("=pass" in line for line in out.splitlines())

    def test_json_mode(self, capsys):
        code, out, _ = invoke(capsys, "stability-audit", "--n", "3", "--json")
        reports = json.loads(out)
        assert code == 0
        assert len(reports) == 9
        assert all(r["passed"] for r in reports)

    def test_requires_exactly_one_target(self, capsys):
        with pytest.raises(SystemExit):
            run(["stability-audit", "--kind", "matching"])


class TestIntervalAudit:
    def test_forest_family(self, capsys):
        code, out, _ = invoke(
            capsys, "interval-audit", "--sequence", "3,2,2,2,1,1,1",
            "--kind", "domination", "--family", "forest",
        )
        assert code == 0
        assert "domination=pass" in out
        assert "values=[2,3]" in out

    def test_non_graphical_sequence(self, capsys):
        code, out, _ = invoke(capsys, "interval-audit", "--sequence", "3 1", "--kind", "matching")
        assert code == 0
        assert "note=" in out

    def test_json_all_kinds(self, capsys):
        code, out, _ = invoke(capsys, "interval-audit", "--sequence", "2,2,2", "--json")
        reports = json.loads(out)
        assert code == 0
        assert {r["kind"] for r in reports} == {
            "matching", "independence", "clique", "vertex_cover", "domination",
            "components", "chromatic", "path_cover", "edge_cover",
        }

    def test_bad_sequence_text(self, capsys):
        code, _, err = invoke(capsys, "interval-audit", "--sequence", "two,two", "--kind", "matching")
        assert code == 2 and "error:" in err


class TestEnumerate:
    def test_plain_count(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "--sequence", "2,2,2,2,2")
        assert code == 0
        assert out.splitlines()[-1] == "count=12"

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "--sequence", "1,1,1,1", "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["count"] == 3
        assert [[1, 2], [3, 4]] in payload["graphs"]

    def test_empty_graph_line(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "--sequence", "0,0")
        assert code == 0
        assert out.splitlines()[0] == "(no edges)"

    def test_cap_refusal(self, capsys):
        code, _, err = invoke(capsys, "enumerate", "--sequence", "1,1,1,1,1,1,1,1,1,1")
        assert code == 2 and "cap" in err


class TestEdgeDiffAudit:
    def test_pass(self, capsys):
        code, out, _ = invoke(capsys, "edge-diff-audit", "--n", "4")
        assert code == 0
        assert out.startswith("edge_diff=pass")

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "edge-diff-audit", "--n", "3", "--json")
        report = json.loads(out)
        assert code == 0 and report["passed"]


class TestBipartiteCheck:
    def test_full_run(self, capsys):
        code, out, _ = invoke(capsys, "bipartite-check")
        assert code == 0
        assert "passed=true" in out
        assert "closure.complete=true" in out

    def test_skip_closure(self, capsys):
        code, out, _ = invoke(capsys, "bipartite-check", "--closure-budget", "0")
        assert code == 0
        assert "closure" not in out


class TestConstrainedSearch:
    def test_found_with_trace(self, capsys):
        code, out, _ = invoke(
            capsys, "constrained-search", "fig1_g0", "fig1_g2", "--family", "forest", "--json"
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["found"] and payload["length"] <= 1
        assert payload["trace"]["n"] == 7

    def test_vector_mismatch_not_found(self, capsys, edges_file):
        a = edges_file("a.edges", Graph(3, [(1, 2)]))
        b = edges_file("b.edges", Graph(3, [(2, 3)]))
        code, out, _ = invoke(capsys, "constrained-search", a, b)
        assert code == 0
        assert "found=false" in out and "complete=true" in out

    def test_definitive_not_found_after_exploration(self, capsys):
        # the bipartite component around fig2_g0 is small and closed
        code, out, _ = invoke(
            capsys, "constrained-search", "fig2_g0", "fig2_g1", "--family", "bipartite"
        )
        assert code == 0
        assert "found=false" in out and "complete=true" in out
        assert "explored=232" in out

    def test_budget_exhaustion(self, capsys, edges_file):
        f = edges_file("f.edges", Graph(8, [(1, 2), (2, 6), (3, 4), (3, 7), (4, 5), (5, 8), (6, 7)]))
        g = edges_file("g.edges", Graph(8, [(1, 3), (2, 5), (2, 6), (3, 4), (4, 5), (6, 7), (7, 8)]))
        code, out, _ = invoke(
            capsys, "constrained-search", f, g, "--family", "forest", "--budget", "1"
        )
        assert code == 1
        assert "complete=false" in out


class TestValidateTrace:
    def test_round_trip_with_target(self, capsys, tmp_path):
        out_path = tmp_path / "trace.json"
        invoke(capsys, "transit", "--family", "forest", "fig1_g0", "fig1_g2", "--out", str(out_path))
        code, out, _ = invoke(
            capsys, "validate-trace", str(out_path),
            "--target", "fig1_g2", "--require-forests",
        )
        assert code == 0
        assert "ok=true" in out

    def test_wrong_target_fails(self, capsys, tmp_path):
        out_path = tmp_path / "trace.json"
        invoke(capsys, "transit", "--family", "forest", "fig1_g0", "fig1_g2", "--out", str(out_path))
        code, out, _ = invoke(capsys, "validate-trace", str(out_path), "--target", "fig1_g0")
        assert code == 1
        assert "final_matches=false" in out

    def test_malformed_is_usage_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{", encoding="utf-8")
        code, _, err = invoke(capsys, "validate-trace", str(bad))
        assert code == 2 and "error:" in err


class TestFixtures:
    def test_list(self, capsys):
        code, out, _ = invoke(capsys, "fixtures")
        assert code == 0
        assert out.split() == ["fig1_g0", "fig1_g1", "fig1_g2", "fig2_g0", "fig2_g1"]

    def test_emit_parses_back(self, capsys):
        code, out, _ = invoke(capsys, "fixtures", "fig2_g0")
        assert code == 0
        g = parse_edge_list(out)
        assert g.n == 11

    def test_dot(self, capsys):
        code, out, _ = invoke(capsys, "fixtures", "fig1_g0", "--dot")
        assert code == 0
        assert out.startswith("graph fig1_g0 {")

    def test_unknown_name_rejected(self, capsys):
        with pytest.raises(SystemExit):
            run(["fixtures", "fig9_g9"])


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("params", "fig1_g0"),
            ("enumerate", "--sequence", "1,1,2,2"),
            ("interval-audit", "--sequence", "2,2,2", "--json"),
            ("transit", "--family", "forest", "fig1_g0", "fig1_g2"),
        ],
    )
    def test_repeat_runs_identical(self, capsys, argv):
        _, first, _ = invoke(capsys, *argv)
        _, second, _ = invoke(capsys, *argv)
        assert first == second
