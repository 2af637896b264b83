import json

from ecdual.ecgraph import parse_graph
from ecdual.families import DualId
from ecdual.harness import (
    CampaignReport,
    audit_random,
    bench_linear,
    check_corollary5,
    check_duality_exhaustive,
    dual_chain,
    minimal_dual_via_oracle,
)
from ecdual.families import PathId, make_path

import pytest


class TestDualChain:
    def test_prefix(self):
        assert dual_chain(2) == [
            DualId(1), DualId(1, "B"), DualId(1, "R"), DualId(2),
        ]

    def test_length(self):
        # every odd index contributes three entries, every even one
        assert len(dual_chain(7)) == 3 * 4 + 3


class TestMinimalDual:
    def test_blue_edge(self):
        G = parse_graph("e a b blue\n")
        assert minimal_dual_via_oracle(G, 4) == DualId(1, "B")

    def test_smooth_graph_has_none(self):
        G = parse_graph("e a a blue\ne a a red\n")
        assert minimal_dual_via_oracle(G, 6) is None

    def test_f2(self):
        assert minimal_dual_via_oracle(make_path(PathId(2, "B")), 4) == DualId(3)


class TestCampaigns:
    def test_exhaustive_n2(self):
        report = check_duality_exhaustive(n=2, k=4)
        assert report.passed and report.cases == 64

    def test_exhaustive_rejects_large_n(self):
        with pytest.raises(ValueError):
            check_duality_exhaustive(n=4)

    def test_random_audit_small(self):
        report = audit_random(200, 6, (0.15, 0.15), seed=3)
        assert report.passed and report.cases == 200
        assert report.details["mapped"] + report.details["nomap"] == 200
        assert report.details["nomap"] > 0  # dense enough to hit smooth cores

    def test_random_audit_sparse_all_mapped(self):
        report = audit_random(50, 20, (0.01, 0.01), seed=1)
        assert report.passed

    def test_corollary5(self):
        report = check_corollary5(max_k=2)
        assert report.passed and report.cases == 2

    def test_bench_rows(self):
        report = bench_linear([500, 5000])
        assert report.passed
        rows = report.details["rows"]
        assert [row["n"] for row in rows] == [500, 5000]
        assert rows[0]["dual"] == str(DualId(501))
        for row in rows:
            assert row["ops"] > 0 and row["seconds"] >= 0


class TestReport:
    def test_text_format(self):
        report = CampaignReport("demo", {"n": 2})
        report.cases = 5
        text = report.to_text()
        assert "campaign demo" in text
        assert "param n=2" in text
        assert text.rstrip().endswith("PASS")

    def test_failure_carries_counterexample(self):
        report = CampaignReport("demo", {})
        report.fail("broken", parse_graph("e a b blue\n"))
        text = report.to_text()
        assert "FAIL broken" in text and text.rstrip().endswith("FAIL")
        graph_lines = [l for l in text.splitlines() if l.startswith("  | ")]
        replay = parse_graph("\n".join(l[4:] for l in graph_lines))
        assert replay.n == 2

    def test_json_round_trip(self):
        report = check_corollary5(max_k=1)
        payload = json.loads(report.to_json())
        assert payload["campaign"] == "corollary5"
        assert payload["passed"] is True
        assert payload["cases"] == 1
