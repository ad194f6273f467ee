"""Finite digital images: point sets in Z^n with a symmetric, antireflexive adjacency.

An image is a pair (point set, adjacency rule) and doubles as a finite simple
graph whose vertices carry grid coordinates.  Points are stored in canonical
lexicographic order; everything downstream refers to points by their index in
that order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InvalidInputError

Point = tuple[int, ...]


def ct_adjacent(p: Point, q: Point, t: int) -> bool:
    """Coordinate adjacency: between 1 and ``t`` coordinates differ by exactly 1, the rest agree.

    Equal points are never adjacent (the relation is antireflexive).
    """
    if len(p) != len(q):
        raise InvalidInputError(f"points {p} and {q} have different dimensions")
    if not 1 <= t <= len(p):
        raise InvalidInputError(f"t={t} out of range for dimension {len(p)}")
    changed = 0
    for a, b in zip(p, q):
        d = abs(a - b)
        if d > 1:
            return False
        changed += d
    return 1 <= changed <= t


@dataclass(frozen=True)
class CT:
    """Adjacency derived from coordinates via :func:`ct_adjacent`."""

    t: int


@dataclass(frozen=True, eq=False)
class Explicit:
    """Adjacency given directly as unordered pairs of point indices."""

    edges: frozenset[tuple[int, int]]

    def __init__(self, edges):
        norm = set()
        for e in edges:
            i, j = e
            if i == j:
                raise InvalidInputError(f"edge ({i}, {j}) is reflexive")
            norm.add((j, i) if j < i else (i, j))
        object.__setattr__(self, "edges", frozenset(norm))

    def __eq__(self, other):
        return isinstance(other, Explicit) and self.edges == other.edges

    def __hash__(self):
        return hash(self.edges)


AdjacencySpec = CT | Explicit


@dataclass(frozen=True, eq=False)
class DigitalImage:
    """An immutable finite digital image.

    The constructor canonicalizes: points are sorted lexicographically,
    duplicates rejected, and explicit edges re-indexed to the sorted order.
    ``source_order`` records the permutation (input position -> canonical
    index) so loaders can report how a file's indices were renumbered.

    Equality and hashing are semantic: two images are equal when they have
    the same dimension, the same canonical point sequence, and the same
    derived edge set, regardless of how the adjacency was specified.  The
    optional name is a label and never participates in equality.
    """

    points: tuple[Point, ...]
    adjacency: AdjacencySpec
    name: str | None = None
    dimension: int | None = None
    source_order: tuple[int, ...] = field(init=False, repr=False)
    _neighbors: tuple[frozenset[int], ...] = field(init=False, repr=False)
    _edges: frozenset[tuple[int, int]] = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        pts = [tuple(int(c) for c in p) for p in self.points]
        if not pts:
            raise InvalidInputError("an image must contain at least one point")
        dim = self.dimension if self.dimension is not None else len(pts[0])
        if dim < 1:
            raise InvalidInputError(f"dimension must be positive, got {dim}")
        for p in pts:
            if len(p) != dim:
                raise InvalidInputError(f"point {p} does not have dimension {dim}")
        if len(set(pts)) != len(pts):
            raise InvalidInputError("points must be pairwise distinct")

        order = sorted(range(len(pts)), key=lambda i: pts[i])
        perm = [0] * len(pts)  # input position -> canonical index
        for new, old in enumerate(order):
            perm[old] = new
        canonical = tuple(pts[i] for i in order)

        adj = self.adjacency
        n = len(canonical)
        if isinstance(adj, CT):
            if not 1 <= adj.t <= dim:
                raise InvalidInputError(f"CT(t={adj.t}) invalid for dimension {dim}")
            edges = frozenset(
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if ct_adjacent(canonical[i], canonical[j], adj.t)
            )
        else:
            for i, j in adj.edges:
                if not (0 <= i < n and 0 <= j < n):
                    raise InvalidInputError(f"edge ({i}, {j}) references a missing point")
            edges = frozenset(
                (min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in adj.edges
            )
            adj = Explicit(edges)

        nbrs = [set() for _ in range(n)]
        for i, j in edges:
            nbrs[i].add(j)
            nbrs[j].add(i)

        object.__setattr__(self, "points", canonical)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "dimension", dim)
        object.__setattr__(self, "source_order", tuple(perm))
        object.__setattr__(self, "_neighbors", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(self, "_edges", edges)
        object.__setattr__(self, "_hash", hash((dim, canonical, edges)))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, DigitalImage):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and self.points == other.points
            and self._edges == other._edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = self.name or f"{len(self.points)}-point image"
        return f"DigitalImage({label}, dim={self.dimension}, edges={len(self._edges)})"

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as sorted (i, j) pairs with i < j."""
        return tuple(sorted(self._edges))

    def adjacent(self, i: int, j: int) -> bool:
        return j in self._neighbors[i]

    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return self._neighbors

    def index_of(self, point: Point) -> int:
        """Canonical index of a point, or raise if absent."""
        p = tuple(point)
        lo, hi = 0, len(self.points)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.points[mid] < p:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self.points) and self.points[lo] == p:
            return lo
        raise InvalidInputError(f"point {p} is not in the image")

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(s) for s in self._neighbors))

    def to_json_dict(self) -> dict:
        """Serializable form; see the image file format in the README."""
        if isinstance(self.adjacency, CT):
            adj = {"type": "ct", "t": self.adjacency.t}
        else:
            adj = {"type": "explicit", "edges": [list(e) for e in sorted(self.adjacency.edges)]}
        out = {
            "dimension": self.dimension,
            "points": [list(p) for p in self.points],
            "adjacency": adj,
        }
        if self.name is not None:
            out["name"] = self.name
        return out


def image_from_json_dict(data: dict) -> DigitalImage:
    """Build an image from its JSON form (points may arrive in any order)."""
    try:
        dimension = data["dimension"]
        points = [tuple(p) for p in data["points"]]
        adj_data = data["adjacency"]
        kind = adj_data["type"]
    except (KeyError, TypeError) as exc:
        raise InvalidInputError(f"malformed image object: {exc}") from exc
    if kind == "ct":
        adjacency: AdjacencySpec = CT(adj_data["t"])
    elif kind == "explicit":
        adjacency = Explicit(tuple((e[0], e[1]) for e in adj_data["edges"]))
    else:
        raise InvalidInputError(f"unknown adjacency type {kind!r}")
    return DigitalImage(
        points=tuple(points),
        adjacency=adjacency,
        name=data.get("name"),
        dimension=dimension,
    )


def neighbors(image: DigitalImage, x: int, closed: bool = False) -> frozenset[int]:
    """Neighbors of point ``x``; the closed variant includes ``x`` itself."""
    if not 0 <= x < image.n_points:
        raise InvalidInputError(f"point index {x} out of range")
    open_set = image._neighbors[x]
    return open_set | {x} if closed else open_set


def components(image: DigitalImage) -> tuple[tuple[int, ...], ...]:
    """Connectivity components as sorted index blocks, ordered by smallest member."""
    seen: set[int] = set()
    blocks = []
    for start in range(image.n_points):
        if start in seen:
            continue
        block = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in image._neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    block.append(w)
                    queue.append(w)
        blocks.append(tuple(sorted(block)))
    return tuple(blocks)


def is_connected(image: DigitalImage) -> bool:
    return len(components(image)) == 1


def is_totally_disconnected(image: DigitalImage) -> bool:
    """True when every component is a singleton, i.e. the image has no edges."""
    return not image._edges


@dataclass(frozen=True)
class Isomorphism:
    """An adjacency-preserving bijection between two images (both directions)."""

    domain: DigitalImage
    codomain: DigitalImage
    forward: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "forward", tuple(self.forward))
        n = self.domain.n_points
        if self.codomain.n_points != n or sorted(self.forward) != list(range(n)):
            raise InvalidInputError("forward must be a bijection between the point sets")
        for i in range(n):
            for j in range(i + 1, n):
                if self.domain.adjacent(i, j) != self.codomain.adjacent(
                    self.forward[i], self.forward[j]
                ):
                    raise InvalidInputError(
                        f"bijection does not preserve adjacency at pair ({i}, {j})"
                    )

    def apply(self, x: int) -> int:
        return self.forward[x]

    def inverse(self) -> Isomorphism:
        inv = [0] * len(self.forward)
        for i, y in enumerate(self.forward):
            inv[y] = i
        return Isomorphism(self.codomain, self.domain, tuple(inv))


def find_isomorphism(x_img: DigitalImage, y_img: DigitalImage) -> Isomorphism | None:
    """Exhaustive isomorphism search with degree and neighborhood pruning.

    Returns the first match in deterministic order, or None.
    """
    n = x_img.n_points
    if y_img.n_points != n or x_img.degree_sequence() != y_img.degree_sequence():
        return None

    x_nbrs = x_img.neighbor_sets()
    y_nbrs = y_img.neighbor_sets()
    x_deg = [len(s) for s in x_nbrs]
    y_deg = [len(s) for s in y_nbrs]
    order = _traversal_order(x_img)

    assign: dict[int, int] = {}
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or x_deg[v] != y_deg[w]:
                continue
            ok = True
            for u, img_u in assign.items():
                if (u in x_nbrs[v]) != (img_u in y_nbrs[w]):
                    ok = False
                    break
            if not ok:
                continue
            assign[v] = w
            used[w] = True
            if extend(k + 1):
                return True
            del assign[v]
            used[w] = False
        return False

    if extend(0):
        forward = tuple(assign[i] for i in range(n))
        return Isomorphism(x_img, y_img, forward)
    return None


def _traversal_order(image: DigitalImage) -> list[int]:
    """Per-component BFS order from the lowest index; neighbors visited ascending.

    Every point after the first of its component is adjacent to an earlier
    point in the order, which is what backtracking searches rely on.
    """
    n = image.n_points
    nbrs = image.neighbor_sets()
    order: list[int] = []
    seen: set[int] = set()
    for start in range(n):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(nbrs[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order
