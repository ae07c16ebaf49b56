"""Rational bound arithmetic and the extremal-family classifier."""

import pytest

from forcing_lab import (attains_equality, build_bound_report,
                         classify_extremal, complete, complete_bipartite,
                         cycle, degree_refined_bound, forcing_upper_bound,
                         path, solve, star)
from forcing_lab.enumeration import enumerate_connected
from forcing_lab.graphs import Graph, degree_stats


class TestForcingUpperBound:
    def test_cycle_point(self):
        assert forcing_upper_bound(5, 2, 1) == (2, 1)

    def test_complete_point(self):
        num, den = forcing_upper_bound(4, 3, 1)
        assert (num, den) == (6, 2)

    def test_cubic_point(self):
        assert forcing_upper_bound(10, 3, 1) == (12, 2)

    def test_unreduced(self):
        # 18/3, not 6/1
        assert forcing_upper_bound(8, 4, 1) == (18, 3)

    def test_rejects_low_degree(self):
        with pytest.raises(ValueError):
            forcing_upper_bound(5, 1, 1)
        with pytest.raises(ValueError):
            forcing_upper_bound(5, 2, 0)


class TestDegreeRefinedBound:
    def test_star_point(self):
        assert degree_refined_bound(4, 3, 1) == (4, 2)

    def test_regular_case_collapses_to_plain_bound(self):
        for n, d in [(5, 2), (6, 3), (10, 3), (8, 4)]:
            assert degree_refined_bound(n, d, d) == forcing_upper_bound(n, d, 1)

    def test_petersen_point(self):
        assert degree_refined_bound(10, 3, 3) == (12, 2)

    def test_rejects_bad_degrees(self):
        with pytest.raises(ValueError):
            degree_refined_bound(4, 1, 1)
        with pytest.raises(ValueError):
            degree_refined_bound(4, 3, 0)
        with pytest.raises(ValueError):
            degree_refined_bound(4, 3, 4)


class TestEquality:
    def test_cycle(self):
        assert attains_equality(2, 7, 2)

    def test_balanced_bipartite(self):
        assert attains_equality(4, 6, 3)

    def test_petersen_misses(self):
        assert not attains_equality(5, 10, 3)

    def test_rejects_low_degree(self):
        with pytest.raises(ValueError):
            attains_equality(1, 3, 1)


class TestClassifier:
    def test_families(self, petersen):
        assert classify_extremal(cycle(7)).tag == "cycle"
        assert classify_extremal(cycle(7)).parameter == 7
        assert classify_extremal(complete_bipartite(4, 4)).tag == \
            "balanced_complete_bipartite"
        assert classify_extremal(complete_bipartite(4, 4)).parameter == 4
        assert classify_extremal(complete(5)).tag == "complete"
        assert classify_extremal(complete(5)).parameter == 4
        assert classify_extremal(petersen) is None

    def test_overlap_resolution(self):
        # K_3 is also C_3; C_4 is also K_{2,2}. Canonical order:
        # complete > balanced_complete_bipartite > cycle.
        assert classify_extremal(complete(3)).tag == "complete"
        assert classify_extremal(cycle(4)).tag == "balanced_complete_bipartite"

    def test_non_members(self):
        assert classify_extremal(path(4)) is None
        assert classify_extremal(star(3)) is None
        assert classify_extremal(complete_bipartite(2, 3)) is None

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            classify_extremal(Graph(4, [(0, 1), (2, 3)]))

    def test_rejects_max_degree_below_two(self):
        with pytest.raises(ValueError):
            classify_extremal(path(2))


class TestBoundProperties:
    def test_bound_holds_exhaustively_small(self):
        # cross-multiplied, exact integers only
        for n in range(3, 7):
            for g in enumerate_connected(n):
                dmax, _, _ = degree_stats(g)
                if dmax < 2:
                    continue
                z = solve(g).value
                num, den = forcing_upper_bound(g.n, dmax, 1)
                assert z * den <= num, g.edges()

    def test_refined_bound_dominates(self):
        for n in range(3, 7):
            for g in enumerate_connected(n):
                dmax, dmin, _ = degree_stats(g)
                if dmax < 2 or dmin < 1:
                    continue
                num, den = forcing_upper_bound(g.n, dmax, 1)
                rnum, rden = degree_refined_bound(g.n, dmax, dmin)
                # refined <= plain, equality iff regular
                assert rnum * den <= num * rden
                assert (rnum * den == num * rden) == (dmax == dmin)

    def test_classified_families_attain_equality(self):
        for g in [cycle(5), cycle(8), complete(4), complete(6),
                  complete_bipartite(3, 3), complete_bipartite(4, 4)]:
            cls = classify_extremal(g)
            assert cls is not None
            dmax, _, _ = degree_stats(g)
            assert attains_equality(solve(g).value, g.n, dmax), g.name


class TestBoundReport:
    def test_balanced_bipartite_report(self):
        g = complete_bipartite(4, 4)
        report = build_bound_report(g, 1, solve(g).value)
        assert (report.bound_num, report.bound_den) == (18, 3)
        assert report.meets_equality
        assert report.to_dict()["max_degree"] == 4

    def test_non_extremal_report(self, petersen):
        report = build_bound_report(petersen, 1, solve(petersen).value)
        assert not report.meets_equality
        assert (report.refined_num, report.refined_den) == (12, 2)
