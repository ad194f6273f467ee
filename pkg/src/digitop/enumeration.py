"""Exhaustive, budgeted enumeration of continuous maps.

The core is a backtracking search over domain points in per-component BFS
order: each point after the first in its component is adjacent to some
earlier point, so every partial assignment is constrained immediately and
dead branches die at the first violated edge.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import InvalidInputError
from .images import DigitalImage, _traversal_order
from .maps import DigitalMap


@dataclass(frozen=True)
class EnumerationBudget:
    """Optional limits on a search; None means unlimited.

    ``max_nodes`` counts candidate values tried; ``time_budget`` is in
    seconds and checked every few hundred nodes.
    """

    max_results: int | None = None
    max_nodes: int | None = None
    time_budget: float | None = None

    def __post_init__(self):
        for label, v in (
            ("max_results", self.max_results),
            ("max_nodes", self.max_nodes),
            ("time_budget", self.time_budget),
        ):
            if v is not None and v <= 0:
                raise InvalidInputError(f"{label} must be positive, got {v}")


UNLIMITED = EnumerationBudget()


@dataclass(frozen=True)
class EnumerationOutcome:
    """Results plus an honesty flag: exhausted=False iff some budget tripped."""

    maps: tuple[DigitalMap, ...]
    exhausted: bool
    nodes_used: int = 0


def closed_neighborhoods(image: DigitalImage) -> tuple[frozenset[int], ...]:
    return tuple(nbrs | {i} for i, nbrs in enumerate(image.neighbor_sets()))


class MapSpaceContext:
    """Structures shared by every search on one (domain, codomain) pair.

    Worth hoisting when many searches run against the same pair, as in the
    breadth-first closure over a homotopy class.
    """

    def __init__(self, domain: DigitalImage, codomain: DigitalImage):
        self.domain = domain
        self.codomain = codomain
        self.order = _traversal_order(domain)
        pos = {v: k for k, v in enumerate(self.order)}
        nbrs = domain.neighbor_sets()
        self.earlier = [
            [u for u in nbrs[v] if pos[u] < k] for k, v in enumerate(self.order)
        ]
        self.closed = closed_neighborhoods(codomain)
        self.full = frozenset(range(codomain.n_points))

    def codomain_is_complete(self) -> bool:
        """True iff every closed neighborhood is the whole codomain."""
        return all(len(c) == len(self.full) for c in self.closed)


class _Search:
    """One backtracking run; ``allowed[x]`` is the candidate set at point x."""

    def __init__(
        self,
        context: MapSpaceContext,
        allowed: tuple[frozenset[int], ...],
        budget: EnumerationBudget,
        collect: bool,
    ):
        self.order = context.order
        self.earlier = context.earlier
        self.allowed = allowed
        self.closed = context.closed
        self.n = context.domain.n_points
        self.budget = budget
        self.collect = collect
        self.assign = [0] * self.n
        self.results: list[tuple[int, ...]] = []
        self.count = 0
        self.nodes = 0
        self.exhausted = True
        self.deadline = (
            time.monotonic() + budget.time_budget if budget.time_budget else None
        )

    def run(self):
        self._extend(0)
        return self

    def _extend(self, k: int) -> bool:
        """Depth-first over positions; returns False to abort the whole search."""
        if k == self.n:
            self.count += 1
            if self.collect:
                self.results.append(tuple(self.assign))
            if (
                self.budget.max_results is not None
                and self.count >= self.budget.max_results
            ):
                self.exhausted = False
                return False
            return True
        v = self.order[k]
        cands = self.allowed[v]
        for u in self.earlier[k]:
            cands = cands & self.closed[self.assign[u]]
            if not cands:
                return True
        for value in sorted(cands):
            self.nodes += 1
            if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
                self.exhausted = False
                return False
            if (
                self.deadline is not None
                and self.nodes % 256 == 0
                and time.monotonic() > self.deadline
            ):
                self.exhausted = False
                return False
            self.assign[v] = value
            if not self._extend(k + 1):
                return False
        return True


def assignments_in_context(
    context: MapSpaceContext,
    budget: EnumerationBudget | None = None,
    allowed: tuple[frozenset[int], ...] | None = None,
) -> tuple[list[tuple[int, ...]], bool, int]:
    """As enumerate_assignments, reusing a precomputed context."""
    if allowed is None:
        allowed = (context.full,) * context.domain.n_points
    search = _Search(context, allowed, budget or UNLIMITED, collect=True).run()
    return search.results, search.exhausted, search.nodes


def enumerate_assignments(
    domain: DigitalImage,
    codomain: DigitalImage,
    budget: EnumerationBudget | None = None,
    allowed: tuple[frozenset[int], ...] | None = None,
) -> tuple[list[tuple[int, ...]], bool, int]:
    """All continuous assignments as raw tuples: (assignments, exhausted, nodes).

    The deterministic order is fixed by the search: domain points in
    per-component BFS order, candidate values ascending.
    """
    return assignments_in_context(MapSpaceContext(domain, codomain), budget, allowed)


def enumerate_continuous_maps(
    domain: DigitalImage,
    codomain: DigitalImage,
    budget: EnumerationBudget | None = None,
) -> EnumerationOutcome:
    """Every continuous map domain -> codomain, each exactly once, up to budget."""
    assignments, exhausted, nodes = enumerate_assignments(domain, codomain, budget)
    maps = tuple(DigitalMap(domain, codomain, a) for a in assignments)
    return EnumerationOutcome(maps=maps, exhausted=exhausted, nodes_used=nodes)


def count_continuous_maps(
    domain: DigitalImage,
    codomain: DigitalImage,
    budget: EnumerationBudget | None = None,
) -> tuple[int, bool]:
    """Number of continuous maps, without materializing them."""
    context = MapSpaceContext(domain, codomain)
    allowed = (context.full,) * domain.n_points
    search = _Search(context, allowed, budget or UNLIMITED, collect=False).run()
    return search.count, search.exhausted


def one_step_neighbors(
    f: DigitalMap, budget: EnumerationBudget | None = None
) -> EnumerationOutcome:
    """Every continuous g with g(x) in the closed neighborhood of f(x) for all x.

    Includes f itself; the relation is symmetric because closed
    neighborhoods are.
    """
    closed = closed_neighborhoods(f.codomain)
    allowed = tuple(closed[v] for v in f.assignment)
    assignments, exhausted, nodes = enumerate_assignments(
        f.domain, f.codomain, budget, allowed=allowed
    )
    maps = tuple(DigitalMap(f.domain, f.codomain, a) for a in assignments)
    return EnumerationOutcome(maps=maps, exhausted=exhausted, nodes_used=nodes)
