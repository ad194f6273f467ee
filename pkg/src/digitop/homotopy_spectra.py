"""Spectra over homotopy classes: HCS, HFS, MC, MCF, and the sequence m_j.

Each argument map may be deformed within its homotopy class, so the search
ranges over selections from the classes.  Tuples again reduce to sets: a
set S of distinct maps is realizable iff one member per class can be picked
(with repetition up to that class's multiplicity in the argument list)
whose union is S.  Equal classes are merged first, which turns the tuple
space into the grouped subset search from the spectra module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import EnumerationBudget
from .errors import InvalidInputError
from .homotopy import HomotopyClass, homotopy_class
from .images import DigitalImage
from .maps import DigitalMap, identity
from .spectra import Spectrum, _EqualizerSearch


@dataclass(frozen=True)
class HomotopySpectrumResult:
    """values as a Spectrum; classes_complete=False iff any class BFS truncated.

    When inexact, values form a lower approximation (every listed size is
    realizable) and min_value is an upper bound on the true minimum.
    """

    values: Spectrum
    classes_complete: bool
    min_value: int | None


@dataclass(frozen=True)
class SelfCoincidenceSequence:
    """Entries (j, m_j, exact); non-increasing in j when all entries are exact.

    A None value means the budget tripped before anything was recorded.
    """

    entries: tuple[tuple[int, int | None, bool], ...]


def _merge_classes(classes) -> tuple[list[tuple[tuple, int]], bool, int]:
    """Group equal classes with multiplicities; returns (groups, complete, #X)."""
    classes = tuple(classes)
    if not classes:
        raise InvalidInputError("need at least one homotopy class")
    first = classes[0].representative
    for cls in classes[1:]:
        rep = cls.representative
        if rep.domain != first.domain or rep.codomain != first.codomain:
            raise InvalidInputError("all classes must share domain and codomain")
    complete = True
    groups: dict[tuple, int] = {}
    for cls in classes:
        complete = complete and cls.complete
        pool = tuple(m.assignment for m in cls.members)
        groups[pool] = groups.get(pool, 0) + 1
    return list(groups.items()), complete, first.domain.n_points


def _search_classes(
    classes,
    budget: EnumerationBudget | None,
    initial,
    min_mode: bool,
) -> tuple[dict[int, int], bool]:
    groups, classes_complete, n = _merge_classes(classes)
    search = _EqualizerSearch(
        groups, n, initial=initial, budget=budget, min_mode=min_mode
    )
    min_picks, search_exact = search.run()
    return min_picks, classes_complete and search_exact


def _classes_of(maps, budget: EnumerationBudget | None) -> list[HomotopyClass]:
    maps = tuple(maps)
    if not maps:
        raise InvalidInputError("need at least one map")
    cache: dict[tuple[int, ...], HomotopyClass] = {}
    classes = []
    for f in maps:
        cls = cache.get(f.assignment)
        if cls is None:
            cls = homotopy_class(f, budget)
            for member in cls.members:
                cache[member.assignment] = cls
        classes.append(cls)
    return classes


def hcs_of_classes(classes, budget: EnumerationBudget | None = None) -> HomotopySpectrumResult:
    """Achievable coincidence-set sizes with one map drawn from each class."""
    min_picks, exact = _search_classes(classes, budget, initial=None, min_mode=False)
    values = Spectrum(values=tuple(min_picks), exact=exact, i=len(tuple(classes)))
    return HomotopySpectrumResult(
        values=values,
        classes_complete=exact,
        min_value=min(values.values) if values.values else None,
    )


def hfs_of_classes(classes, budget: EnumerationBudget | None = None) -> HomotopySpectrumResult:
    """As hcs_of_classes for common fixed points: the identity joins every equalizer."""
    classes = tuple(classes)
    if classes and not classes[0].representative.is_self_map():
        raise InvalidInputError("common fixed points are defined for self-maps only")
    n = classes[0].representative.domain.n_points if classes else 0
    min_picks, exact = _search_classes(
        classes, budget, initial=tuple(range(n)), min_mode=False
    )
    values = Spectrum(values=tuple(min_picks), exact=exact, i=len(classes))
    return HomotopySpectrumResult(
        values=values,
        classes_complete=exact,
        min_value=min(values.values) if values.values else None,
    )


def hcs(maps, budget: EnumerationBudget | None = None) -> HomotopySpectrumResult:
    """Achievable coincidence-set sizes with every map free to move in its class."""
    return hcs_of_classes(_classes_of(maps, budget), budget)


def hfs(maps, budget: EnumerationBudget | None = None) -> HomotopySpectrumResult:
    """As hcs, but for common fixed points."""
    return hfs_of_classes(_classes_of(maps, budget), budget)


def mc(maps, budget: EnumerationBudget | None = None) -> tuple[int | None, bool]:
    """Minimum coincidence count over the classes; stops as soon as 0 is found.

    Returns (value, exact); an inexact value is an upper bound.
    """
    classes = _classes_of(maps, budget)
    min_picks, exact = _search_classes(classes, budget, initial=None, min_mode=True)
    value = min(min_picks) if min_picks else None
    return value, exact or value == 0


def mcf(maps, budget: EnumerationBudget | None = None) -> tuple[int | None, bool]:
    """Minimum common-fixed-point count; the identity itself is never deformed."""
    maps = tuple(maps)
    if maps and not maps[0].is_self_map():
        raise InvalidInputError("common fixed points are defined for self-maps only")
    n = maps[0].domain.n_points if maps else 0
    classes = _classes_of(maps, budget)
    min_picks, exact = _search_classes(
        classes, budget, initial=tuple(range(n)), min_mode=True
    )
    value = min(min_picks) if min_picks else None
    return value, exact or value == 0


def m_j_of_map(
    f: DigitalMap, j: int, budget: EnumerationBudget | None = None
) -> tuple[int | None, bool]:
    """MC of j copies of f; for j = 1 this is #X by the singleton convention."""
    if j < 1:
        raise InvalidInputError(f"j must be >= 1, got {j}")
    if j == 1:
        return f.domain.n_points, True
    return mc([f] * j, budget)


def self_coincidence_sequence(
    x_img: DigitalImage, j_max: int, budget: EnumerationBudget | None = None
) -> SelfCoincidenceSequence:
    """m_j(X) = MC of j copies of the identity, for j = 1..j_max.

    Once an exact 0 appears the remaining entries are 0 (the witnessing
    selection still fits any larger j), so the search is not repeated.
    """
    if j_max < 1:
        raise InvalidInputError(f"j_max must be >= 1, got {j_max}")
    n = x_img.n_points
    entries: list[tuple[int, int | None, bool]] = [(1, n, True)]
    ident = identity(x_img)
    cls = homotopy_class(ident, budget)
    pool = tuple(m.assignment for m in cls.members)
    for j in range(2, j_max + 1):
        prev_j, prev_value, prev_exact = entries[-1]
        if prev_j >= 2 and prev_exact and prev_value == 0:
            entries.append((j, 0, True))
            continue
        search = _EqualizerSearch(
            [(pool, j)], n, initial=None, budget=budget, min_mode=True
        )
        min_picks, search_exact = search.run()
        value = min(min_picks) if min_picks else None
        exact = (cls.complete and search_exact) or value == 0
        entries.append((j, value, exact))
    return SelfCoincidenceSequence(entries=tuple(entries))
