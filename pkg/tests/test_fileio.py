"""Round trips and error reporting for the JSON file formats."""

import json

import pytest

from digitop import (
    ContinuityError,
    InvalidInputError,
    builders,
    dump_image,
    dump_map,
    identity,
    load_image,
    load_map,
)


def test_image_round_trip_through_file(tmp_path):
    img = builders.cube()
    target = tmp_path / "cube.json"
    dump_image(img, str(target))
    assert load_image(str(target)) == img


def test_dump_image_returns_text_without_path():
    text = dump_image(builders.interval(0, 2))
    data = json.loads(text)
    assert data["points"] == [[0], [1], [2]]


def test_load_image_builtin_refs():
    assert load_image("builtin:cube") == builders.cube()
    assert load_image("builtin:cycle:5") == builders.cycle(5)
    with pytest.raises(InvalidInputError):
        load_image("builtin:nonesuch")


def test_map_round_trip_through_file(tmp_path):
    f = identity(builders.cycle(4))
    target = tmp_path / "id.json"
    dump_map(f, str(target))
    g = load_map(str(target))
    assert g.assignment == f.assignment
    assert g.domain == f.domain
    assert g.codomain == f.codomain


def test_map_file_with_builtin_refs(tmp_path):
    target = tmp_path / "const.json"
    target.write_text(json.dumps({
        "domain": "builtin:cycle:4",
        "codomain": "builtin:cycle:4",
        "assignment": [0, 0, 0, 0],
    }))
    f = load_map(str(target))
    assert f.assignment == (0, 0, 0, 0)


def test_map_file_paths_resolve_relative_to_map_file(tmp_path):
    sub = tmp_path / "sub"
    sub.mkdir()
    dump_image(builders.interval(0, 2), str(sub / "dom.json"))
    target = sub / "map.json"
    target.write_text(json.dumps({
        "domain": "dom.json",
        "codomain": "builtin:interval:0:2",
        "assignment": [0, 1, 2],
    }))
    # load from a different cwd-independent path; the ref is relative to the map
    f = load_map(str(target))
    assert f.domain == builders.interval(0, 2)


def test_malformed_json_reports_line_and_column(tmp_path):
    target = tmp_path / "bad.json"
    target.write_text('{"points": [[0],\n  oops\n]}')
    with pytest.raises(InvalidInputError) as err:
        load_image(str(target))
    # path:line:col prefix so editors can jump to the spot
    assert str(target) in str(err.value)
    assert ":2:" in str(err.value)


def test_missing_file_is_invalid_input(tmp_path):
    with pytest.raises(InvalidInputError):
        load_image(str(tmp_path / "absent.json"))


def test_map_file_missing_assignment_key(tmp_path):
    target = tmp_path / "bad.json"
    target.write_text(json.dumps({"domain": "builtin:cube", "codomain": "builtin:cube"}))
    with pytest.raises(InvalidInputError) as err:
        load_map(str(target))
    assert "assignment" in str(err.value)


def test_map_file_with_discontinuous_assignment_raises(tmp_path):
    target = tmp_path / "disc.json"
    target.write_text(json.dumps({
        "domain": "builtin:interval:0:3",
        "codomain": "builtin:interval:0:3",
        "assignment": [0, 2, 0, 2],
    }))
    with pytest.raises(ContinuityError) as err:
        load_map(str(target))
    assert err.value.edge is not None


def test_map_file_with_inline_images(tmp_path):
    inline = builders.interval(0, 1).to_json_dict()
    target = tmp_path / "inline.json"
    target.write_text(json.dumps({
        "domain": inline,
        "codomain": inline,
        "assignment": [1, 0],
    }))
    f = load_map(str(target))
    assert f.assignment == (1, 0)


def test_map_file_rejects_non_image_refs(tmp_path):
    target = tmp_path / "bad.json"
    target.write_text(json.dumps({
        "domain": 7,
        "codomain": "builtin:cube",
        "assignment": [0],
    }))
    with pytest.raises(InvalidInputError) as err:
        load_map(str(target))
    assert "domain" in str(err.value)
