from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digitop import (
    DigitalImage,
    EnumerationBudget,
    Explicit,
    InvalidInputError,
    coincidence_spectra_by_arity,
    coincidence_spectrum,
    coincidence_spectrum_by_search,
    coincidence_spectrum_union,
    common_fixed_spectrum,
    common_fixed_spectrum_union,
    cube,
    cycle,
    discrete,
    fixed_point_spectrum,
    interval,
    singleton,
    square4,
    tee4,
)
from oracles import cfs_oracle, cs_oracle, fixed_spectrum_oracle


def _tiny_images():
    return [
        singleton(),
        discrete(2),
        discrete(3),
        interval(0, 1),
        interval(0, 2),
        interval(0, 3),
        cycle(3),
        cycle(4),
        square4(),
        tee4(),
    ]


def test_cs_matches_oracle_on_all_tiny_pairs():
    for x_img, y_img in itertools.product(_tiny_images(), repeat=2):
        for i in (2, 3):
            s = coincidence_spectrum(x_img, y_img, i)
            assert s.exact
            assert s.as_set() == cs_oracle(x_img, y_img, i), (x_img.name, y_img.name, i)


def test_search_route_agrees_with_shortcut_route():
    pairs = [
        (interval(0, 3), interval(0, 2)),
        (cycle(4), cycle(3)),
        (square4(), tee4()),
        (tee4(), square4()),
    ]
    for x_img, y_img in pairs:
        fast = coincidence_spectrum(x_img, y_img, 2)
        slow = coincidence_spectrum_by_search(x_img, y_img, 2)
        assert slow.exact
        assert fast.as_set() == slow.as_set()


def test_cs_arity_one_is_the_point_count():
    s = coincidence_spectrum(cycle(5), tee4(), 1)
    assert s.as_set() == {5}
    assert s.exact


def test_cs_rejects_bad_arity():
    with pytest.raises(InvalidInputError):
        coincidence_spectrum(cycle(3), cycle(3), 0)
    with pytest.raises(InvalidInputError):
        coincidence_spectrum_union(cycle(3), cycle(3), 1)


def test_full_range_when_codomain_has_an_edge():
    for x_img in (interval(0, 4), cycle(6), cube()):
        for y_img in (interval(0, 1), cycle(4)):
            s = coincidence_spectrum(x_img, y_img, 2)
            assert s.as_set() == set(range(x_img.n_points + 1))


def test_connected_domain_edgeless_codomain_two_values():
    for x_img in (interval(0, 3), cycle(5), cube()):
        for m in (2, 3):
            for i in (2, 3, 4):
                s = coincidence_spectrum(x_img, discrete(m), i)
                assert s.exact
                assert s.as_set() == {0, x_img.n_points}


def test_union_stabilization_on_disconnected_domain():
    # two components of sizes 2 and 1: subset sums {0, 1, 2, 3}
    x_img = DigitalImage(points=((0,), (1,), (5,)), adjacency=Explicit({(0, 1)}))
    u = coincidence_spectrum_union(x_img, discrete(2), 4)
    assert u.exact
    assert u.as_set() == {0, 1, 2, 3}
    assert u.stabilized_at == 2
    by_arity = coincidence_spectra_by_arity(x_img, discrete(2), 4)
    assert by_arity[2].as_set() == {0, 1, 2, 3}
    assert all(by_arity[i].as_set() == {0, 1, 2, 3} for i in (3, 4))


def test_by_arity_is_monotone_everywhere():
    # oracle agreement at arity <= 3 is covered above; arity 4 brute force
    # over 84-map pools is too slow to be worth repeating here
    for x_img, y_img in itertools.product(_tiny_images(), repeat=2):
        by_arity = coincidence_spectra_by_arity(x_img, y_img, 4)
        chain = [by_arity[i].as_set() for i in (2, 3, 4)]
        assert chain[0] <= chain[1] <= chain[2]
        assert chain[0] == cs_oracle(x_img, y_img, 2), (x_img.name, y_img.name)


def test_fixed_point_spectra_of_cycles():
    assert fixed_point_spectrum(cycle(1)).as_set() == {1}
    for n in (2, 3, 4):
        assert fixed_point_spectrum(cycle(n)).as_set() == set(range(n + 1))
    for n in (5, 6, 7):
        expected = set(range(n // 2 + 2)) | {n}
        assert fixed_point_spectrum(cycle(n)).as_set() == expected


def test_fixed_point_spectrum_of_cube():
    assert fixed_point_spectrum(cube()).as_set() == {0, 1, 2, 3, 4, 5, 6, 8}


def test_fixed_point_spectrum_matches_oracle():
    for x_img in _tiny_images():
        assert fixed_point_spectrum(x_img).as_set() == fixed_spectrum_oracle(x_img)


def test_cfs_matches_oracle():
    for x_img in (interval(0, 2), interval(0, 3), cycle(3), cycle(4), tee4()):
        for i in (1, 2, 3):
            s = common_fixed_spectrum(x_img, i)
            assert s.exact
            assert s.as_set() == cfs_oracle(x_img, i), (x_img.name, i)


def test_cfs_union_stabilizes():
    u = common_fixed_spectrum_union(cycle(4), 3)
    assert u.exact
    assert u.as_set() == {0, 1, 2, 3, 4}


def test_budget_marks_inexact():
    s = coincidence_spectrum_by_search(cycle(4), cycle(4), 2, EnumerationBudget(max_nodes=2))
    assert not s.exact


@st.composite
def tiny_pairs(draw):
    def build(n):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
        return DigitalImage(points=tuple((i,) for i in range(n)), adjacency=Explicit(edges))

    return (
        build(draw(st.integers(min_value=1, max_value=4))),
        build(draw(st.integers(min_value=1, max_value=3))),
    )


@given(tiny_pairs())
@settings(max_examples=50)
def test_cs2_search_matches_oracle_on_random_pairs(pair):
    x_img, y_img = pair
    s = coincidence_spectrum_by_search(x_img, y_img, 2)
    assert s.exact
    assert s.as_set() == cs_oracle(x_img, y_img, 2)
