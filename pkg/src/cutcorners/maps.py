"""Planar maps encoded as rotation systems.

A map is given by two permutations on darts (oriented edges):

* ``rev`` pairs every dart with its reversal,
* ``rot`` sends an outgoing dart to the next outgoing dart counterclockwise
  around its initial vertex.

Faces are traced with the face on the left of every dart, i.e. with the
permutation ``d -> rot^-1(rev(d))``.  Bounded regions are then traversed
counterclockwise and the outer face clockwise.  The outer face is the face
containing ``outer_dart``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

OUTER = -1


class MapError(ValueError):
    pass


class NotInvolution(MapError):
    pass


class NotPermutation(MapError):
    pass


class NotConnected(MapError):
    pass


class NotPlanar(MapError):
    pass


class BadOuterDart(MapError):
    pass


class BasepointNotOnBoundary(MapError):
    pass


class UnknownRegion(MapError):
    pass


class UnknownVertex(MapError):
    pass


class InvalidDecomposition(MapError):
    pass


@dataclass(frozen=True)
class Region:
    """A bounded face; ``boundary`` lists its darts counterclockwise,
    starting from the smallest dart id."""

    index: int
    boundary: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class RegionProfile:
    region: int
    edge_count: int
    neighbors: frozenset[int]
    outer_boundary: tuple[tuple[int, ...], ...]
    inner_boundary: tuple[int, ...]
    outer_edges: frozenset[int]
    vertices: frozenset[int]
    is_inner: bool
    is_proper_boundary: bool
    # a boundary edge of the region is traversed twice by its own boundary
    double_traversal: bool = False

    @property
    def r(self) -> int:
        return sum(len(p) for p in self.outer_boundary)

    @property
    def s(self) -> int:
        return len(self.inner_boundary)


@dataclass(frozen=True)
class VertexProfile:
    vertex: int
    valence: int
    is_inner: bool


@dataclass(frozen=True)
class BoundaryDecomposition:
    """Boundary cycle split as ``xi mu tau^-1 sigma^-1``.

    ``xi`` and ``mu`` are made of outer darts read along the boundary cycle;
    ``tau`` and ``sigma`` are read the other way (their darts are reversals
    of outer darts).  ``base`` is the outer dart where the cycle starts, so
    the paths ``xi mu`` and ``sigma tau`` both begin at ``tail(base)``.
    """

    xi: tuple[int, ...]
    mu: tuple[int, ...]
    tau: tuple[int, ...]
    sigma: tuple[int, ...]
    base: int

    @property
    def lengths(self) -> tuple[int, int, int, int]:
        return len(self.xi), len(self.mu), len(self.tau), len(self.sigma)


class CombinatorialMap:
    """Finite planar connected simply connected 2-complex.

    Instances are immutable once built; use :func:`build_map` to construct
    one from raw data.  Dart ids are ``1..n_darts``.
    """

    __slots__ = (
        "n_darts", "rev", "rot", "rot_inv", "outer_dart", "vertex_of", "vertices",
        "face_of", "regions", "outer_cycle", "cycle_position", "_profiles",
        "_valence", "_inner_vertex", "edge_id", "_plist",
    )

    def __init__(self, n_darts: int, rev: Sequence[int], rot: Sequence[int], outer_dart: int):
        self.n_darts = n_darts
        self.rev = tuple(rev)
        self.rot = tuple(rot)
        self.edge_id = (0,) + tuple(min(d, rev[d]) for d in range(1, n_darts + 1))
        inv = [0] * (n_darts + 1)
        for d in range(1, n_darts + 1):
            inv[rot[d]] = d
        self.rot_inv = tuple(inv)
        self.outer_dart = outer_dart

        vertex_of = [-1] * (n_darts + 1)
        vertices = []
        for d in range(1, n_darts + 1):
            if vertex_of[d] >= 0:
                continue
            cyc = _orbit(d, self.rot)
            for x in cyc:
                vertex_of[x] = len(vertices)
            vertices.append(cyc)
        self.vertex_of = tuple(vertex_of)
        self.vertices = tuple(vertices)

        face_of = [-2] * (n_darts + 1)
        outer = self.face_orbit(outer_dart)
        for x in outer:
            face_of[x] = OUTER
        regions = []
        for d in range(1, n_darts + 1):
            if face_of[d] != -2:
                continue
            cyc = self.face_orbit(d)
            for x in cyc:
                face_of[x] = len(regions)
            regions.append(Region(len(regions), cyc))
        self.face_of = tuple(face_of)
        self.regions = tuple(regions)
        self.outer_cycle = outer
        self.cycle_position = {d: i for i, d in enumerate(outer)}
        self._profiles: dict = {}
        self._plist = None
        self._valence = tuple(len(v) for v in self.vertices)
        inner = [True] * len(self.vertices)
        for d in outer:
            inner[vertex_of[d]] = False
        self._inner_vertex = tuple(inner)

    # --- elementary structure -------------------------------------------

    def phi(self, d: int) -> int:
        return self.rot_inv[self.rev[d]]

    def face_orbit(self, d: int) -> tuple[int, ...]:
        out = [d]
        x = self.rot_inv[self.rev[d]]
        while x != d:
            out.append(x)
            x = self.rot_inv[self.rev[x]]
        return tuple(out)

    def tail(self, d: int) -> int:
        return self.vertex_of[d]

    def head(self, d: int) -> int:
        return self.vertex_of[self.rev[d]]

    def edge(self, d: int) -> int:
        return self.edge_id[d]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return self.n_darts // 2

    @property
    def n_regions(self) -> int:
        return len(self.regions)

    @property
    def boundary_length(self) -> int:
        return len(self.outer_cycle)

    def edges(self) -> list[int]:
        return [d for d in range(1, self.n_darts + 1) if d < self.rev[d]]

    def is_outer_dart(self, d: int) -> bool:
        return self.face_of[d] == OUTER

    def is_boundary_edge(self, d: int) -> bool:
        return self.face_of[d] == OUTER or self.face_of[self.rev[d]] == OUTER

    def valence(self, v: int) -> int:
        return self._valence[v]

    def is_inner_vertex(self, v: int) -> bool:
        return self._inner_vertex[v]

    def region_of_edge(self, d: int) -> int:
        """Region on the bounded side of a boundary edge (OUTER for spine edges)."""
        f = self.face_of[d]
        return self.face_of[self.rev[d]] if f == OUTER else f

    def mirror(self) -> "CombinatorialMap":
        """The same complex with the opposite orientation."""
        return CombinatorialMap(self.n_darts, self.rev, self.rot_inv, self.rev[self.outer_dart])

    def profile(self, region: int, removal: str = "outer") -> RegionProfile:
        key = (region, removal)
        p = self._profiles.get(key)
        if p is None:
            p = _compute_profile(self, region, removal)
            self._profiles[key] = p
        return p

    def profiles(self) -> list[RegionProfile]:
        if self._plist is None:
            self._plist = [self.profile(i) for i in range(len(self.regions))]
        return self._plist

    def __eq__(self, other) -> bool:
        if not isinstance(other, CombinatorialMap):
            return NotImplemented
        return (self.rev, self.rot, self.outer_dart) == (other.rev, other.rot, other.outer_dart)

    def __hash__(self) -> int:
        return hash((self.rev, self.rot, self.outer_dart))

    def __repr__(self) -> str:
        return (f"CombinatorialMap(V={self.n_vertices}, E={self.n_edges}, "
                f"R={self.n_regions}, boundary={self.boundary_length})")


def _orbit(d: int, perm: Sequence[int]) -> tuple[int, ...]:
    out = [d]
    x = perm[d]
    while x != d:
        out.append(x)
        x = perm[x]
    return tuple(out)


def build_map(
    n_darts: int,
    reversal: Mapping[int, int] | Iterable[tuple[int, int]],
    rotation: Iterable[Sequence[int]],
    outer_dart: int,
) -> CombinatorialMap:
    """Validate raw rotation-system data and return the map.

    ``reversal`` is either a dict ``d -> rev(d)`` or an iterable of dart
    pairs; ``rotation`` lists the counterclockwise cycle of outgoing darts
    at every vertex.
    """
    if n_darts < 1:
        raise BadOuterDart("a map needs at least one edge")
    pairs = reversal.items() if isinstance(reversal, Mapping) else reversal
    rev = [0] * (n_darts + 1)
    for a, b in pairs:
        for x, y in ((a, b), (b, a)):
            if not 1 <= x <= n_darts or not 1 <= y <= n_darts:
                raise NotInvolution(f"dart {x} or {y} out of range")
            if x == y:
                raise NotInvolution(f"dart {x} is its own reversal")
            if rev[x] not in (0, y):
                raise NotInvolution(f"dart {x} paired twice")
            rev[x] = y
    missing = [d for d in range(1, n_darts + 1) if rev[d] == 0]
    if missing:
        raise NotInvolution(f"darts without reversal: {missing}")

    rot = [0] * (n_darts + 1)
    for cyc in rotation:
        cyc = list(cyc)
        if not cyc:
            raise NotPermutation("empty vertex cycle")
        for i, d in enumerate(cyc):
            if not 1 <= d <= n_darts:
                raise NotPermutation(f"dart {d} out of range")
            if rot[d]:
                raise NotPermutation(f"dart {d} appears at two vertices")
            rot[d] = cyc[(i + 1) % len(cyc)]
    missing = [d for d in range(1, n_darts + 1) if rot[d] == 0]
    if missing:
        raise NotPermutation(f"darts at no vertex: {missing}")

    if not 1 <= outer_dart <= n_darts:
        raise BadOuterDart(f"outer dart {outer_dart} out of range")

    # transitivity of <rev, rot>
    seen = {1}
    stack = [1]
    while stack:
        d = stack.pop()
        for x in (rev[d], rot[d]):
            if x not in seen:
                seen.add(x)
                stack.append(x)
    if len(seen) != n_darts:
        raise NotConnected(f"{n_darts - len(seen)} darts unreachable from dart 1")

    m = CombinatorialMap(n_darts, rev, rot, outer_dart)
    euler = m.n_vertices - m.n_edges + m.n_regions + 1
    if euler != 2:
        raise NotPlanar(f"V - E + F = {euler}, expected 2")
    return m


def boundary_cycle(M: CombinatorialMap, basepoint: int) -> tuple[int, ...]:
    """Outer boundary cycle starting at ``basepoint`` (an outer dart)."""
    i = M.cycle_position.get(basepoint)
    if i is None:
        raise BasepointNotOnBoundary(f"dart {basepoint} is not on the outer face")
    c = M.outer_cycle
    return c[i:] + c[:i]


def _region(M: CombinatorialMap, D) -> int:
    idx = D.index if isinstance(D, Region) else D
    if not isinstance(idx, int) or not 0 <= idx < M.n_regions:
        raise UnknownRegion(f"no region {D!r}")
    if isinstance(D, Region) and M.regions[idx] != D:
        raise UnknownRegion(f"region {D!r} does not belong to this map")
    return idx


def region_profile(M: CombinatorialMap, D, removal: str = "outer") -> RegionProfile:
    """Local data of region ``D`` (a Region or a region index).

    ``removal`` selects what the properness test deletes besides the open
    2-cell: ``"outer"`` removes the outer-boundary edges only, ``"all"``
    removes every edge of the region boundary.
    """
    if removal not in ("outer", "all"):
        raise ValueError(f"unknown removal mode {removal!r}")
    return M.profile(_region(M, D), removal)


def _compute_profile(M: CombinatorialMap, idx: int, removal: str) -> RegionProfile:
    darts = M.regions[idx].boundary
    face_of = M.face_of
    rev = M.rev
    outer_flags = [face_of[rev[d]] == OUTER for d in darts]
    neighbors = frozenset(
        face_of[rev[d]] for d in darts if face_of[rev[d]] not in (OUTER, idx)
    )
    inner = tuple(d for d, f in zip(darts, outer_flags) if not f)
    outer_edges = frozenset(M.edge(d) for d, f in zip(darts, outer_flags) if f)
    edge_list = [M.edge(d) for d in darts]
    double = len(set(edge_list)) != len(edge_list)

    # maximal runs of outer darts along the region boundary
    runs: list[tuple[int, ...]] = []
    n = len(darts)
    if all(outer_flags):
        runs.append(darts)
    elif any(outer_flags):
        start = next(i for i in range(n) if not outer_flags[i])
        cur: list[int] = []
        for k in range(1, n + 1):
            i = (start + k) % n
            if outer_flags[i]:
                cur.append(darts[i])
            elif cur:
                runs.append(tuple(cur))
                cur = []
        if cur:
            runs.append(tuple(cur))

    vertices = frozenset(M.vertex_of[d] for d in darts)
    is_inner = not outer_edges
    proper = False
    if not is_inner:
        removed = outer_edges if removal == "outer" else frozenset(edge_list)
        proper = _connected_after_removal(M, removed)
    return RegionProfile(
        region=idx,
        edge_count=n,
        neighbors=neighbors,
        outer_boundary=tuple(runs),
        inner_boundary=inner,
        outer_edges=outer_edges,
        vertices=vertices,
        is_inner=is_inner,
        is_proper_boundary=proper,
        double_traversal=double,
    )


def _connected_after_removal(M: CombinatorialMap, removed: frozenset[int]) -> bool:
    parent = list(range(M.n_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    alive = set()
    for e in M.edges():
        if e in removed:
            continue
        a, b = M.tail(e), M.head(e)
        alive.add(a)
        alive.add(b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    if not alive:
        return False
    return len({find(v) for v in alive}) == 1


def vertex_profile(M: CombinatorialMap, v: int) -> VertexProfile:
    if not isinstance(v, int) or not 0 <= v < M.n_vertices:
        raise UnknownVertex(f"no vertex {v!r}")
    return VertexProfile(v, M.valence(v), M.is_inner_vertex(v))


def decompose(M: CombinatorialMap, base: int, xi: int, mu: int, tau: int) -> BoundaryDecomposition:
    """Decomposition starting at outer dart ``base`` with the given lengths
    of xi, mu and tau; sigma takes the rest of the cycle."""
    if xi not in (0, 1) or tau not in (0, 1):
        raise InvalidDecomposition("xi and tau have length at most one")
    c = boundary_cycle(M, base)
    n = len(c)
    if mu < 0 or xi + mu + tau > n:
        raise InvalidDecomposition(f"lengths {xi}+{mu}+{tau} exceed boundary length {n}")
    rev = M.rev
    j = xi + mu
    return BoundaryDecomposition(
        xi=c[:xi],
        mu=c[xi:j],
        tau=tuple(rev[d] for d in reversed(c[j:j + tau])),
        sigma=tuple(rev[d] for d in reversed(c[j + tau:])),
        base=base,
    )


def locate(M: CombinatorialMap, d: BoundaryDecomposition) -> tuple[int, int, int, int]:
    """Validate ``d`` against ``M`` and return ``(base position, |xi|, |mu|, |tau|)``."""
    x, m, t, s = d.lengths
    if x > 1 or t > 1:
        raise InvalidDecomposition("xi and tau have length at most one")
    pos = M.cycle_position.get(d.base)
    if pos is None:
        raise InvalidDecomposition(f"base dart {d.base} is not on the outer face")
    n = len(M.outer_cycle)
    if x + m + t + s != n:
        raise InvalidDecomposition(f"path lengths sum to {x + m + t + s}, boundary has {n}")
    rev = M.rev
    word = d.xi + d.mu + tuple(rev[e] for e in reversed(d.tau)) + tuple(rev[e] for e in reversed(d.sigma))
    c = M.outer_cycle
    for k, e in enumerate(word):
        if c[(pos + k) % n] != e:
            raise InvalidDecomposition("paths do not concatenate to the boundary cycle")
    return pos, x, m, t
