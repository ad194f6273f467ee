"""The built-in verification suites and the conjecture sweep."""

import pytest

from digitop import (
    InvalidInputError,
    RunConfig,
    builders,
    check_figure_examples,
    conjecture_search,
    disjoint_paths,
    iso_invariance_reports,
    mj_reports,
    random_pair_property_reports,
    run_suite,
    subset_sums,
)
from digitop.images import components
from digitop.verify import _partitions


def _verdicts(reports):
    return {r.verdict for r in reports}


def test_unknown_suite_rejected():
    with pytest.raises(InvalidInputError):
        run_suite("nonesuch")


def test_fixture_suite_all_pass():
    reports = run_suite("paper-fixtures")
    assert reports
    assert _verdicts(reports) == {"pass"}


def test_random_suite_all_pass():
    reports = run_suite("random-small", RunConfig(random_instances=6))
    assert reports
    assert _verdicts(reports) == {"pass"}


def test_reports_sorted_and_serializable():
    reports = run_suite("random-small", RunConfig(random_instances=4))
    keys = [(r.check_id, r.instance) for r in reports]
    assert keys == sorted(keys)
    row = reports[0].to_json_dict()
    assert {"check_id", "instance", "verdict", "elapsed", "details"} <= set(row)


def test_corrupted_fixture_is_caught():
    # swap in a non-contractible 8-point image for the cube; the figure
    # checks must notice rather than rubber-stamp
    reports = check_figure_examples(RunConfig(), cube_img=builders.cycle(8))
    by_name = {r.instance: r for r in reports}
    assert by_name["contractible(cube)"].verdict == "fail"
    assert by_name["F(cube)"].verdict == "fail"
    assert "expected" in by_name["F(cube)"].details
    # untouched fixtures still pass
    assert by_name["rigid(figure1)"].verdict == "pass"


def test_random_reports_are_deterministic():
    a = random_pair_property_reports(seed=3, count=5)
    b = random_pair_property_reports(seed=3, count=5)
    assert [(r.check_id, r.instance, r.verdict) for r in a] == [
        (r.check_id, r.instance, r.verdict) for r in b
    ]


def test_random_batches_pass_at_five_points():
    assert _verdicts(random_pair_property_reports(seed=11, count=8, max_points=5)) == {"pass"}
    assert _verdicts(iso_invariance_reports(seed=11, count=8, max_points=5)) == {"pass"}
    assert _verdicts(mj_reports(seed=11, count=4, max_points=5)) == {"pass"}


def test_six_point_batches_never_fail():
    # dense 6-point instances may skip under the class-size caps, but a
    # skip must name its reason and nothing may fail
    reports = random_pair_property_reports(seed=11, count=12)
    assert not [r for r in reports if r.verdict == "fail"]
    for report in reports:
        if report.verdict == "skipped":
            assert report.details["reason"]


def test_partitions_of_four():
    got = {tuple(p) for p in _partitions(4)}
    assert got == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}


def test_disjoint_paths_components():
    img = disjoint_paths((3, 2, 1))
    assert img.n_points == 6
    assert sorted(len(c) for c in components(img)) == [1, 2, 3]


def test_subset_sums_values():
    assert subset_sums((2, 1)) == frozenset({0, 1, 2, 3})
    assert subset_sums((3, 3)) == frozenset({0, 3, 6})


def test_conjecture_search_small_sweep():
    reports = conjecture_search(max_x_points=4, max_y_points=3, i_max=3)
    assert _verdicts(reports) == {"pass"}
    assert any(r.instance == "reduction-note" for r in reports)
    # partitions of 2..4 with >=2 parts: 1+1, 2+1, 1+1+1, 3+1, 2+2, 2+1+1,
    # 1+1+1+1 -> 7, each against two codomain sizes, plus the note
    assert len(reports) == 7 * 2 + 1
    spectra = {r.instance: r.details for r in reports if r.instance != "reduction-note"}
    row = spectra["X=paths:2+1 Y=discrete:2 i_max=3"]
    assert row["observed"]["2"] == [0, 1, 2, 3]
    assert row["subset_sums"] == [0, 1, 2, 3]
