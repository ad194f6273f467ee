"""Digitally continuous maps and their coincidence and fixed-point sets.

A map is continuous when every adjacent pair of domain points lands on
equal or adjacent codomain points.  Maps are validated at construction, so
every ``DigitalMap`` in circulation is continuous.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContinuityError, InvalidInputError
from .images import DigitalImage, Isomorphism

PointSet = tuple[int, ...]


def _check_assignment(domain: DigitalImage, codomain: DigitalImage, assignment) -> tuple[int, ...]:
    values = tuple(int(v) for v in assignment)
    if len(values) != domain.n_points:
        raise InvalidInputError(
            f"assignment has length {len(values)}, domain has {domain.n_points} points"
        )
    for v in values:
        if not 0 <= v < codomain.n_points:
            raise InvalidInputError(f"assignment value {v} is not a codomain index")
    return values


def continuity_violation(
    domain: DigitalImage, codomain: DigitalImage, assignment
) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """First domain edge broken by the assignment, as (edge, values), or None."""
    values = _check_assignment(domain, codomain, assignment)
    for i, j in domain.edges:
        a, b = values[i], values[j]
        if a != b and not codomain.adjacent(a, b):
            return (i, j), (a, b)
    return None


def is_continuous(domain: DigitalImage, codomain: DigitalImage, assignment) -> bool:
    """True iff every domain edge maps to equal or adjacent codomain points."""
    return continuity_violation(domain, codomain, assignment) is None


@dataclass(frozen=True)
class DigitalMap:
    """A validated continuous map, stored as a tuple of codomain indices.

    Equality is structural (domain, codomain, assignment); maps carry no
    name so bulk enumeration can deduplicate them by hashing.
    """

    domain: DigitalImage
    codomain: DigitalImage
    assignment: tuple[int, ...]

    def __post_init__(self):
        witness = continuity_violation(self.domain, self.codomain, self.assignment)
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if witness is not None:
            raise ContinuityError(*witness)

    def __call__(self, x: int) -> int:
        return self.assignment[x]

    def __repr__(self):
        return f"DigitalMap({self.assignment})"

    def is_self_map(self) -> bool:
        return self.domain == self.codomain

    def to_json_dict(self) -> dict:
        return {
            "domain": self.domain.to_json_dict(),
            "codomain": self.codomain.to_json_dict(),
            "assignment": list(self.assignment),
        }


def from_assignment(domain: DigitalImage, codomain: DigitalImage, assignment) -> DigitalMap:
    """Validate an assignment into a map; raises ContinuityError with a witness edge."""
    return DigitalMap(domain, codomain, _check_assignment(domain, codomain, assignment))


def identity(image: DigitalImage) -> DigitalMap:
    return DigitalMap(image, image, tuple(range(image.n_points)))


def constant(domain: DigitalImage, codomain: DigitalImage, value: int) -> DigitalMap:
    if not 0 <= value < codomain.n_points:
        raise InvalidInputError(f"constant value {value} is not a codomain index")
    return DigitalMap(domain, codomain, (value,) * domain.n_points)


def compose(outer: DigitalMap, inner: DigitalMap) -> DigitalMap:
    """The map x -> outer(inner(x)); continuous whenever both factors are."""
    if inner.codomain != outer.domain:
        raise InvalidInputError("composition requires codomain(inner) = domain(outer)")
    return DigitalMap(
        inner.domain,
        outer.codomain,
        tuple(outer.assignment[v] for v in inner.assignment),
    )


def conjugate(f: DigitalMap, phi: Isomorphism) -> DigitalMap:
    """Transport a self-map across an isomorphism: returns phi o f o phi^-1."""
    if not f.is_self_map():
        raise InvalidInputError("conjugation is defined for self-maps only")
    if phi.domain != f.domain:
        raise InvalidInputError("isomorphism domain must match the map's image")
    inv = phi.inverse().forward
    assignment = tuple(phi.forward[f.assignment[inv[y]]] for y in range(len(inv)))
    return DigitalMap(phi.codomain, phi.codomain, assignment)


def _require_common_images(maps) -> tuple[DigitalMap, ...]:
    maps = tuple(maps)
    if not maps:
        raise InvalidInputError("need at least one map")
    first = maps[0]
    for m in maps[1:]:
        if m.domain != first.domain or m.codomain != first.codomain:
            raise InvalidInputError("all maps must share domain and codomain")
    return maps


def coincidence_set(maps) -> PointSet:
    """Points where all maps agree.  A single map agrees with itself everywhere."""
    maps = _require_common_images(maps)
    first = maps[0]
    return tuple(
        x
        for x in range(first.domain.n_points)
        if all(m.assignment[x] == first.assignment[x] for m in maps[1:])
    )


def fixed_point_set(f: DigitalMap) -> PointSet:
    if not f.is_self_map():
        raise InvalidInputError("fixed points are defined for self-maps only")
    return tuple(x for x in range(f.domain.n_points) if f.assignment[x] == x)


def common_fixed_set(maps) -> PointSet:
    """Points fixed by every map; equals coincidence_set(maps + [identity])."""
    maps = _require_common_images(maps)
    if not maps[0].is_self_map():
        raise InvalidInputError("common fixed points are defined for self-maps only")
    return tuple(
        x
        for x in range(maps[0].domain.n_points)
        if all(m.assignment[x] == x for m in maps)
    )
