import json
import math
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypercops import Hypergraph, check_inequality_2, cop_number, run_suite
from hypercops.construct import basic
from hypercops.suites import (
    SUITES,
    FamilyError,
    all_checks,
    build_family,
    product_inequality_sides,
    inequality_grid,
    partition_from_expr,
)


class TestInequality:
    def test_two_trees_one_hypergraph(self):
        # ceil(2/2) + 1 - 1 = 1 cop; reach 1 + 1 + 1 + 2 = 5
        assert product_inequality_sides([2, 2], [3]) == (5, 12)
        assert check_inequality_2([2, 2], [3])

    def test_two_hypergraphs(self):
        assert product_inequality_sides([], [3, 3]) == (5, 9)
        assert check_inequality_2([], [3, 3])

    @pytest.mark.parametrize("trees, hgs", [([], [3]), ([2], []), ([1], [3]), ([2], [1])])
    def test_preconditions(self, trees, hgs):
        with pytest.raises(ValueError):
            check_inequality_2(trees, hgs)

    @given(st.lists(st.integers(2, 6), max_size=4), st.lists(st.integers(2, 6), min_size=1, max_size=3))
    def test_sides_match_formula(self, trees, hgs):
        if not trees and len(hgs) == 1:
            return
        lhs, rhs = product_inequality_sides(trees, hgs)
        p, q = len(trees), len(hgs)
        cops = (p + 1) // 2 + q - 1
        assert lhs == cops * (1 + sum(trees) + sum(hgs) - p - q)
        assert rhs == math.prod(trees) * math.prod(hgs)

    def test_grid_size(self):
        want = sum(3 ** p * 3 ** q for p in range(5) for q in range(1, 4)) - 3
        assert sum(1 for _ in inequality_grid()) == want

    def test_exact_false_cases_in_full_grid(self):
        bad = sorted((t, h) for t, h in inequality_grid() if not check_inequality_2(t, h))
        assert bad == [((), (2, 2, 2)), ((2,), (2, 2))]

    def test_orders_three_and_up_have_no_false_cases(self):
        assert all(check_inequality_2(t, h) for t, h in inequality_grid(3))


class TestFamilies:
    @pytest.mark.parametrize("expr, n, m", [
        ("path 4", 4, 3), ("cycle 5", 5, 5), ("complete 4", 4, 6), ("hypercube 2", 4, 4),
        ("edge a,b,c", 3, 1), ("K 3 2,2,2", 6, 8), ("L 4 2 1,1,2", 4, 1),
        ("product(path 2; path 2)", 4, 4), ("product(path 2; path 2; path 2)", 8, 12),
        ("prism(edge a,b,c; 2; 3)", 6, 14), ("prism(cycle 4; 2; 2)", 8, 12),
    ])
    def test_shapes(self, expr, n, m):
        h = build_family(expr)
        assert (len(h.vertices), len(h.edges)) == (n, m)

    def test_seeded_families(self):
        assert build_family("random 6 3", 5) == build_family("random 6 3", 5)
        assert build_family("hypertree 8 3 4", 5) == build_family("hypertree 8 3 4", 5)

    @pytest.mark.parametrize("expr", ["blob 3", "path x", "product(path 2)", "K 3", "prism(path 2; 2)"])
    def test_bad_expressions(self, expr):
        with pytest.raises((FamilyError, ValueError)):
            build_family(expr)

    def test_partition(self):
        spec = partition_from_expr("L 4 2 1,1,2")
        assert (spec.r, spec.parts, spec.s) == (4, (1, 1, 2), 2)


class TestSuites:
    def test_every_check_has_anchor_and_known_suite(self):
        for c in all_checks():
            assert c.anchor and c.suite in SUITES[1:]

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("NOPE")

    def test_hypertree_suite_passes(self):
        report = run_suite("HYPERTREE")
        assert report.passed and report.summary["PASS"] == len(report.records) >= 2

    def test_multipartite_suite_passes(self):
        assert run_suite("multipartite").passed

    def test_summary_matches_records(self):
        report = run_suite("PRISM")
        s = report.summary
        assert s["total"] == len(report.records)
        assert s["PASS"] + s["FAIL"] + s["SKIPPED"] == s["total"]

    def test_zero_budget_skips_everything(self):
        report = run_suite("MULTIPARTITE", budget=0)
        assert {r.status for r in report.records} == {"SKIPPED"}
        assert not report.passed

    def test_reports_deterministic(self):
        a = run_suite("PRISM", seed=3).to_json(timings=False)
        b = run_suite("PRISM", seed=3).to_json(timings=False)
        assert json.dumps(a, sort_keys=True, default=str) == json.dumps(b, sort_keys=True, default=str)

    def test_markdown(self):
        md = run_suite("HYPERTREE").to_markdown()
        assert "hypertrees" in md and "PASS" in md
