from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digitop import (
    EnumerationBudget,
    InvalidInputError,
    are_homotopic,
    constant,
    cube,
    cube_minus_vertex,
    cycle,
    discrete,
    enumerate_continuous_maps,
    figure1,
    from_assignment,
    homotopy_class,
    identity,
    interval,
    is_contractible,
    is_nullhomotopic,
    is_rigid_image,
    is_rigid_map,
    one_step_homotopic,
    singleton,
    square4,
    tee4,
)
from oracles import homotopy_class_oracle


def test_one_step_homotopic_basics():
    iv = interval(0, 3)
    f = identity(iv)
    g = from_assignment(iv, iv, (0, 1, 2, 2))
    h = constant(iv, iv, 0)
    assert one_step_homotopic(f, g)
    assert one_step_homotopic(g, f)
    assert not one_step_homotopic(f, h)
    with pytest.raises(InvalidInputError):
        one_step_homotopic(f, identity(cycle(4)))


def test_class_sizes_on_cycles():
    assert len(homotopy_class(identity(cycle(4))).members) == 84
    assert len(homotopy_class(identity(cycle(5))).members) == 5
    assert len(homotopy_class(identity(cycle(6))).members) == 6
    assert len(homotopy_class(identity(interval(0, 3))).members) == 68


def test_class_matches_oracle_on_tiny_spaces():
    cases = [
        (interval(0, 2), interval(0, 2)),
        (cycle(4), cycle(4)),
        (square4(), tee4()),
        (cycle(3), cycle(4)),
        (discrete(3), interval(0, 1)),
    ]
    for x_img, y_img in cases:
        pool = [constant(x_img, y_img, 0)]
        if x_img == y_img:
            pool.append(identity(x_img))
        for f in pool:
            cls = homotopy_class(f)
            assert cls.complete
            got = {m.assignment for m in cls.members}
            assert got == homotopy_class_oracle(x_img, y_img, f.assignment)


def test_are_homotopic_yes_carries_valid_chain():
    iv = interval(0, 3)
    answer = are_homotopic(identity(iv), constant(iv, iv, 3))
    assert answer.verdict == "yes"
    chain = answer.witness.chain
    assert chain[0].assignment == (0, 1, 2, 3)
    assert chain[-1].assignment == (3, 3, 3, 3)
    for a, b in zip(chain, chain[1:]):
        assert one_step_homotopic(a, b)


def test_are_homotopic_no_between_rotation_classes():
    c5 = cycle(5)
    rot = from_assignment(c5, c5, (1, 2, 3, 4, 0))
    assert are_homotopic(identity(c5), rot).verdict == "yes"
    assert are_homotopic(identity(c5), constant(c5, c5, 0)).verdict == "no"


def test_are_homotopic_unknown_under_budget():
    c6 = cycle(6)
    answer = are_homotopic(
        identity(c6), constant(c6, c6, 0), EnumerationBudget(max_nodes=3)
    )
    assert answer.verdict == "unknown"


def test_rigidity():
    assert is_rigid_image(figure1())
    assert is_rigid_image(singleton())
    assert not is_rigid_image(cycle(4))
    assert not is_rigid_image(interval(0, 2))
    c5 = cycle(5)
    assert not is_rigid_map(identity(c5))
    assert is_rigid_image(discrete(3))


def test_contractibility_verdicts():
    assert is_contractible(singleton()) == "yes"
    assert is_contractible(interval(0, 4)) == "yes"
    assert is_contractible(cycle(4)) == "yes"
    assert is_contractible(cube()) == "yes"
    assert is_contractible(cube_minus_vertex()) == "yes"
    for n in (5, 6, 7):
        assert is_contractible(cycle(n)) == "no"
    assert is_contractible(figure1()) == "no"
    assert is_contractible(discrete(2)) == "no"


def test_nullhomotopic_constants():
    c5 = cycle(5)
    assert is_nullhomotopic(constant(c5, c5, 2)) == "yes"
    assert is_nullhomotopic(identity(c5)) == "no"


def test_complete_codomain_collapses_to_one_class():
    k3 = cycle(3)
    cls = homotopy_class(constant(discrete(3), k3, 0))
    assert cls.complete
    assert len(cls.members) == 27
    assert are_homotopic(
        constant(discrete(3), k3, 0), constant(discrete(3), k3, 2)
    ).verdict == "yes"


_POOLS = {
    name: enumerate_continuous_maps(img, img).maps
    for name, img in (("interval", interval(0, 2)), ("cycle", cycle(4)), ("tee", tee4()))
}


@st.composite
def small_self_maps(draw):
    pool = _POOLS[draw(st.sampled_from(sorted(_POOLS)))]
    return pool[draw(st.integers(min_value=0, max_value=len(pool) - 1))]


@given(small_self_maps())
@settings(max_examples=40)
def test_class_membership_is_symmetric(f):
    cls = homotopy_class(f)
    for member in itertools.islice(cls.members, 0, 6):
        back = homotopy_class(member)
        assert {m.assignment for m in back.members} == {m.assignment for m in cls.members}
