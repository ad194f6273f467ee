"""Loading and saving images and maps as JSON files.

Image references are either ``builtin:<name>`` or a filesystem path; inside
a map file the domain and codomain may also be inline image objects.  Paths
inside a map file resolve relative to that file's directory.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import builders
from .errors import InvalidInputError
from .images import DigitalImage, image_from_json_dict
from .maps import DigitalMap, from_assignment

BUILTIN_PREFIX = "builtin:"


def _read_json(path: Path):
    try:
        text = path.read_text()
    except OSError as exc:
        raise InvalidInputError(f"{path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(
            f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}"
        ) from exc


def load_image(source: str, base_dir: Path | None = None) -> DigitalImage:
    """Resolve an image reference: builtin:<name> or a JSON file path."""
    if source.startswith(BUILTIN_PREFIX):
        return builders.builtin(source[len(BUILTIN_PREFIX):])
    path = Path(source)
    if base_dir is not None and not path.is_absolute():
        path = base_dir / path
    data = _read_json(path)
    try:
        return image_from_json_dict(data)
    except InvalidInputError as exc:
        raise InvalidInputError(f"{path}: {exc}") from exc


def _image_from_ref_or_inline(value, base_dir: Path | None, label: str) -> DigitalImage:
    if isinstance(value, str):
        return load_image(value, base_dir)
    if isinstance(value, dict):
        return image_from_json_dict(value)
    raise InvalidInputError(f"{label} must be an image reference or inline object")


def load_map(path_str: str) -> DigitalMap:
    """Load a map file; continuity failures carry the first violating edge."""
    path = Path(path_str)
    data = _read_json(path)
    if not isinstance(data, dict) or "assignment" not in data:
        raise InvalidInputError(f"{path}: a map file needs domain, codomain, assignment")
    domain = _image_from_ref_or_inline(data.get("domain"), path.parent, f"{path}: domain")
    codomain = _image_from_ref_or_inline(data.get("codomain"), path.parent, f"{path}: codomain")
    return from_assignment(domain, codomain, data["assignment"])


def dump_image(image: DigitalImage, path_str: str | None = None) -> str:
    """Serialize an image; writes to the path when one is given."""
    text = json.dumps(image.to_json_dict(), sort_keys=True, indent=2)
    if path_str is not None:
        Path(path_str).write_text(text + "\n")
    return text


def dump_map(digital_map: DigitalMap, path_str: str | None = None) -> str:
    text = json.dumps(digital_map.to_json_dict(), sort_keys=True, indent=2)
    if path_str is not None:
        Path(path_str).write_text(text + "\n")
    return text
