import pytest

from fitt.groebner import Ideal, ideal_equal
from fitt.kaehler import kaehler_fitting
from fitt.rees import ReesParams, chart_presentation, rees_presentation, target_ideal
from fitt.verify import (
    ChartCheck,
    VerificationReport,
    chart_fitting_index,
    check_corollary42,
    check_image_equals_center,
    check_nonnormal,
    check_theorem41,
    corollary42_details,
    default_grid,
    evaluate_params,
    fitting_index,
    image_details,
    nonnormality_probe,
    run_grid,
)


class TestIndexPolicies:
    def test_formulas(self):
        params = ReesParams(2, 3, 2, 2, (2, 1))
        assert fitting_index(params, "paper") == 6
        assert fitting_index(params, "corrected") == 4
        assert fitting_index(params, 7) == 7
        assert chart_fitting_index(params, "corrected") == 3

    def test_policies_agree_when_s_is_one(self):
        for params in default_grid():
            if params.s == 1:
                assert fitting_index(params, "paper") == fitting_index(params, "corrected")

    def test_unknown_policy_rejected(self):
        with pytest.raises(ValueError):
            fitting_index(ReesParams(2, 2, 1, 1, (2, 1)), "guess")


class TestTheorem41:
    def test_smallest_tuple_passes_at_index_three(self):
        report = check_theorem41(ReesParams(2, 2, 1, 1, (2, 1)), "corrected")
        assert report.index_used == 3
        assert report.status == "pass"
        assert [c.r for c in report.charts] == [1, 2]
        assert report.micali_ok is True

    def test_index_discrepancy_demonstration(self):
        params = ReesParams(2, 3, 2, 2, (2, 1))
        paper = check_theorem41(params, "paper")
        assert paper.index_used == 6 and paper.status == "fail"
        corrected = check_theorem41(params, "corrected")
        assert corrected.index_used == 4 and corrected.status == "pass"
        # the corrected Fitting ideal equals the target on the nose
        algebra = rees_presentation(params)
        fitt = kaehler_fitting(algebra, 4)
        ring = algebra.ring
        expected = Ideal(
            ring,
            [ring.parse("T2"), ring.parse("x3"), ring.parse("x2^2")]
            + list(algebra.relations.generators),
        )
        assert ideal_equal(fitt, expected)
        assert ideal_equal(fitt, target_ideal(params))

    def test_report_records_validation_failure_via_grid(self):
        bad = ReesParams(2, 3, 1, 3, (2, 2, 2))
        with pytest.raises(Exception):
            check_theorem41(bad)


class TestCorollary42:
    def test_plane_blowup_chart_shapes(self):
        params = ReesParams(2, 2, 1, 1, (2, 1))
        details = corollary42_details(params, "corrected")
        assert [(c.r, c.equal) for c in details] == [(1, True), (2, True)]
        # r = 2 chart: Fitt_2 = (x2, U1) + relations
        chart = chart_presentation(params, 2)
        ring = chart.algebra.ring
        fitt = kaehler_fitting(chart.algebra, 2)
        expected = Ideal(
            ring,
            [ring.variable("x2"), ring.variable("U1")] + list(chart.algebra.relations.generators),
        )
        assert ideal_equal(fitt, expected)
        # r = 1 chart (r <= l): unit ideal
        assert kaehler_fitting(chart_presentation(params, 1).algebra, 2).is_unit()

    def test_p3_chart_expected_ideal(self):
        params = ReesParams(3, 3, 1, 1, (3, 1, 1))
        chart = chart_presentation(params, 3)
        ring = chart.algebra.ring
        fitt = kaehler_fitting(chart.algebra, chart_fitting_index(params, "corrected"))
        expected = Ideal(
            ring,
            [ring.variable("x3"), ring.variable("U1")] + list(chart.algebra.relations.generators),
        )
        assert ideal_equal(fitt, expected)
        assert check_corollary42(params, "corrected")


class TestImageEqualsCenter:
    def test_plane_blowup_contraction(self):
        params = ReesParams(2, 2, 1, 1, (2, 1))
        ok, details = image_details(params, "corrected")
        assert ok and [c.r for c in details] == [2]

    def test_two_chart_intersection(self):
        params = ReesParams(2, 3, 1, 1, (2, 1, 1))
        ok, details = image_details(params, "corrected")
        assert ok
        # charts r <= l are skipped; only r = 2, 3 contribute
        assert [c.r for c in details] == [2, 3]
        assert all(c.equal for c in details)

    def test_check_wrapper(self):
        assert check_image_equals_center(ReesParams(2, 3, 2, 2, (2, 1)), "corrected")


class TestNonnormal:
    @pytest.mark.parametrize("p", [2, 3])
    def test_blowup_chart_is_nonnormal(self, p):
        probe = nonnormality_probe(p, 4, 3, 4)
        assert probe.integral_witness
        assert not probe.quotient_membership
        assert probe.sanity_control
        assert check_nonnormal(p)

    def test_independent_of_free_variables(self):
        for p in (2, 3):
            assert nonnormality_probe(p, 2, 1, 2).nonnormal == check_nonnormal(p)


class TestReportInvariant:
    def test_status_reflects_booleans_and_charts(self):
        params = ReesParams(2, 2, 1, 1, (2, 1))
        report = VerificationReport(params, "corrected", 3)
        assert report.status == "pass"
        report.charts.append(ChartCheck(1, True, 0))
        assert report.status == "pass"
        report.micali_ok = False
        assert report.status == "fail"
        report.micali_ok = True
        report.charts.append(ChartCheck(2, False, 0))
        assert report.status == "fail"

    def test_skipped_wins(self):
        report = VerificationReport(ReesParams(2, 2, 1, 1, (2, 1)), "corrected", 0, reason="nope")
        assert report.status == "skipped"

    def test_to_dict_shape(self):
        report = check_theorem41(ReesParams(2, 2, 1, 1, (2, 1)))
        d = report.to_dict(include_timing=False)
        assert d["params"] == {"p": 2, "n": 2, "s": 1, "l": 1, "v": [2, 1]}
        assert d["policy"] == "corrected"
        assert d["corollary_ok"] is None and d["image_ok"] is None
        assert all(c["ms"] == 0 for c in d["charts"])
        assert "reason" not in d


class TestRunGrid:
    def test_empty_grid(self):
        assert run_grid([]) == []

    def test_invalid_tuple_is_skipped_not_fatal(self):
        grid = [ReesParams(2, 2, 1, 1, (2, 1)), ReesParams(2, 3, 1, 3, (2, 2, 2))]
        reports = run_grid(grid)
        assert [r.status for r in reports] == ["pass", "skipped"]
        assert "l < n" in reports[1].reason

    def test_order_follows_input(self):
        grid = [ReesParams(2, 3, 2, 2, (2, 1)), ReesParams(2, 2, 1, 1, (2, 1))]
        reports = run_grid(grid)
        assert [r.params for r in reports] == grid

    def test_parallel_matches_serial(self):
        grid = [ReesParams(2, 2, 1, 1, (2, 1)), ReesParams(3, 2, 1, 1, (3, 1))]
        serial = run_grid(grid, workers=1)
        parallel = run_grid(grid, workers=2)
        strip = lambda reports: [r.to_dict(include_timing=False) for r in reports]
        assert strip(serial) == strip(parallel)


def test_evaluate_params_full_row():
    report = evaluate_params(ReesParams(2, 2, 1, 1, (2, 1)))
    assert report.status == "pass"
    assert report.micali_ok and report.corollary_ok and report.image_ok


def test_default_grid_shape():
    grid = default_grid()
    assert len(grid) == 16
    assert {params.p for params in grid} == {2, 3}
    for params in grid:
        params.validate()


def test_shipped_grid_file_matches_default_grid():
    from pathlib import Path

    path = Path(__file__).resolve().parent.parent / "grids" / "default.txt"
    rows = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(ReesParams.parse(line))
    assert rows == default_grid()
