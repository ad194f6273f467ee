from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digitop import (
    InvalidInputError,
    builtin,
    builtin_names,
    cube,
    cube_minus_vertex,
    cycle,
    discrete,
    interval,
    is_connected,
    is_totally_disconnected,
    random_connected_image,
)


def test_interval_shape():
    iv = interval(-2, 2)
    assert iv.n_points == 5
    assert len(iv.edges) == 4
    with pytest.raises(InvalidInputError):
        interval(3, 1)


def test_cycle_shapes():
    assert cycle(1).n_points == 1 and not cycle(1).edges
    assert len(cycle(2).edges) == 1
    for n in (3, 5, 8):
        cn = cycle(n)
        assert cn.n_points == n
        assert len(cn.edges) == n
        assert cn.degree_sequence() == (2,) * n
    with pytest.raises(InvalidInputError):
        cycle(0)


def test_discrete_has_no_edges():
    d = discrete(4)
    assert d.n_points == 4
    assert is_totally_disconnected(d)


def test_cube_minus_vertex():
    cmv = cube_minus_vertex()
    assert cmv.n_points == 7
    assert (1, 1, 1) not in cmv.points
    assert sorted(cmv.degree_sequence()) == [2, 2, 2, 3, 3, 3, 3]
    assert is_connected(cmv)


def test_builtin_resolution():
    assert builtin("cube") == cube()
    assert builtin("cycle:6") == cycle(6)
    assert builtin("interval:0:4") == interval(0, 4)
    assert builtin("discrete:2") == discrete(2)
    with pytest.raises(InvalidInputError):
        builtin("nonesuch")
    with pytest.raises(InvalidInputError):
        builtin("cycle:x")
    assert "figure1" in builtin_names()


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=10_000))
@settings(max_examples=40)
def test_random_connected_image_is_connected(n_points, seed):
    img = random_connected_image(random.Random(seed), n_points)
    assert img.n_points == n_points
    assert is_connected(img)
