"""Thinness, map classes, cut corners and thick configurations."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .maps import (
    OUTER,
    BoundaryDecomposition,
    CombinatorialMap,
    MapError,
    RegionProfile,
    locate,
)


class PathNotOnBoundary(MapError):
    pass


class Side(str, Enum):
    MU = "mu-side"
    SIGMA = "sigma-side"

    @classmethod
    def parse(cls, value) -> "Side":
        if isinstance(value, Side):
            return value
        v = str(value).lower()
        if v in ("mu", "mu-side", "alpha"):
            return cls.MU
        if v in ("sigma", "sigma-side", "beta"):
            return cls.SIGMA
        raise ValueError(f"unknown side {value!r}")


@dataclass(frozen=True)
class CutCornerReport:
    region: int
    side: Side
    kind: str
    ell: int
    r: int
    s: int
    aux_region: int | None = None
    corner_vertex: int | None = None

    def as_dict(self) -> dict:
        return {
            "region": self.region, "side": self.side.value, "kind": self.kind,
            "ell": self.ell, "r": self.r, "s": self.s,
            "aux_region": self.aux_region, "corner_vertex": self.corner_vertex,
        }


@dataclass(frozen=True)
class ThickConfigReport:
    kind: str
    regions: tuple[int, ...]
    mu: tuple[int, ...]
    sigma: tuple[int, ...]
    leading_edge: int | None = None

    def as_dict(self) -> dict:
        return {
            "kind": self.kind, "regions": list(self.regions), "mu": list(self.mu),
            "sigma": list(self.sigma), "leading_edge": self.leading_edge,
        }


@dataclass(frozen=True)
class MapClass:
    is_v6: bool
    is_proper_v6: bool
    is_proper_c7: bool
    is_proper_c4t4: bool

    def as_dict(self) -> dict:
        return {
            "is_v6": self.is_v6, "is_proper_v6": self.is_proper_v6,
            "is_proper_c7": self.is_proper_c7, "is_proper_c4t4": self.is_proper_c4t4,
        }

    def member(self, name: str) -> bool:
        if name in ("none", None):
            return True
        return {
            "v6": self.is_v6, "proper_v6": self.is_proper_v6,
            "proper_c7": self.is_proper_c7, "proper_c4t4": self.is_proper_c4t4,
        }[name]


# --- decomposition helpers --------------------------------------------------

def side_darts(M: CombinatorialMap, pos: int, x: int, m: int, t: int, side: Side) -> tuple[int, ...]:
    """mu or sigma of the decomposition at cycle position ``pos``, as dart paths."""
    c = M.outer_cycle
    n = len(c)
    if side is Side.MU:
        return tuple(c[(pos + k) % n] for k in range(x, x + m))
    rev = M.rev
    return tuple(rev[c[(pos - k) % n]] for k in range(1, n - x - m - t + 1))


def side_paths(M: CombinatorialMap, d: BoundaryDecomposition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two paths ``xi mu`` and ``sigma tau`` compared by thinness."""
    locate(M, d)
    return d.xi + d.mu, d.sigma + d.tau


# --- thinness -----------------------------------------------------------------

def is_thin(M: CombinatorialMap, d: BoundaryDecomposition, reading: str = "vertex") -> bool:
    """Whether ``M`` is ``(xi mu, sigma tau)``-thin.

    Every region needs at most two neighbors and must meet both sides.  With
    ``reading="vertex"`` a region meets a side when its boundary has a point
    (vertex or edge) in common with the side path.  ``reading="edge"`` asks
    for a common edge, except that a zero-length mu or sigma is a vertex and
    is met by the regions through it.
    """
    pos, x, m, t = locate(M, d)
    return thin_at(M, pos, x, m, t, reading)


def thin_at(M: CombinatorialMap, pos: int, x: int, m: int, t: int, reading: str = "vertex") -> bool:
    if reading not in ("edge", "vertex"):
        raise ValueError(f"unknown reading {reading!r}")
    profiles = M.profiles()
    if any(len(p.neighbors) > 2 for p in profiles):
        return False
    c = M.outer_cycle
    n = len(c)
    cut = x + m
    edge = M.edge
    a_edges = {edge(c[(pos + k) % n]) for k in range(cut)}
    b_edges = {edge(c[(pos + k) % n]) for k in range(cut, n)}
    if reading == "vertex":
        tail = M.tail
        a_vs = {tail(c[(pos + k) % n]) for k in range(cut + 1)}
        b_vs = {tail(c[(pos + k) % n]) for k in range(cut, n + 1)}
        return all(not p.vertices.isdisjoint(a_vs) and not p.vertices.isdisjoint(b_vs)
                   for p in profiles)
    # a zero-length mu or sigma is a single vertex and is met by the regions through it
    a_vertex = M.tail(c[(pos + x) % n]) if m == 0 else None
    b_vertex = M.tail(c[pos]) if x + m + t == n else None
    for p in profiles:
        for side, v in ((a_edges, a_vertex), (b_edges, b_vertex)):
            if p.outer_edges.isdisjoint(side) and v not in p.vertices:
                return False
    return True


# --- map classes --------------------------------------------------------------

def classify_map(M: CombinatorialMap) -> MapClass:
    profiles = M.profiles()
    val = M.valence
    inner_v = M.is_inner_vertex
    n_v = M.n_vertices
    no_inner_val2 = all(not inner_v(v) or val(v) != 2 for v in range(n_v))

    is_v6 = True
    boundary_ok = True
    for p in profiles:
        if p.is_inner:
            need = 6 if any(val(v) == 3 for v in p.vertices) else 4
            if len(p.neighbors) < need:
                is_v6 = False
        else:
            need = 6 if any(val(v) == 3 and inner_v(v) for v in p.vertices) else 4
            if p.edge_count < need:
                boundary_ok = False
    proper_v6 = is_v6 and no_inner_val2 and boundary_ok
    proper_c7 = no_inner_val2 and all(p.edge_count >= 7 for p in profiles)
    proper_c4t4 = (all(not inner_v(v) or val(v) >= 4 for v in range(n_v))
                   and all(p.edge_count >= 4 for p in profiles))
    return MapClass(is_v6, proper_v6, proper_c7, proper_c4t4)


# --- cut corners ----------------------------------------------------------------

def _span(p: RegionProfile, index: dict[int, int]) -> int | None:
    """1-based position of the first outer edge of ``p`` when its whole outer
    boundary is a contiguous run of the indexed path, else None."""
    js = []
    for e in p.outer_edges:
        j = index.get(e)
        if j is None:
            return None
        js.append(j)
    lo = min(js)
    if max(js) - lo + 1 != len(js):
        return None
    return lo


def _path_index(M: CombinatorialMap, path: Sequence[int]) -> dict[int, int]:
    eid = M.edge_id
    return {eid[e]: j for j, e in enumerate(path, 1)}


def cut_corners_on_path(M: CombinatorialMap, path: Sequence[int], side: Side) -> list[CutCornerReport]:
    """Cut corners for a boundary path ``e_1 ... e_n`` given as darts."""
    if not path:
        return []
    index = _path_index(M, path)
    reports = []
    for p in M.profiles():
        if not p.is_proper_boundary:
            continue
        ell = _span(p, index)
        if ell is None:
            continue
        r = len(p.outer_edges)
        s = p.edge_count - r
        corner = M.tail(path[ell - 1]) if ell > 1 else None
        val3 = corner is not None and M.valence(corner) == 3
        D = p.region
        if s < r:
            reports.append(CutCornerReport(D, side, "T1", ell, r, s, None, corner))
        if s == r == 2 and val3:
            reports.append(CutCornerReport(D, side, "T2", ell, r, s, None, corner))
        if s == r == 3 and val3:
            E = M.region_of_edge(path[ell - 2])
            if E not in (OUTER, D) and E in p.neighbors:
                if M.profile(E).edge_count <= 5:
                    reports.append(CutCornerReport(D, side, "T3", ell, r, s, E, corner))
                if ell > 2 and M.region_of_edge(path[ell - 3]) == E:
                    reports.append(CutCornerReport(D, side, "T4", ell, r, s, E, corner))
    return reports


def find_cut_corners(M: CombinatorialMap, d: BoundaryDecomposition, side) -> list[CutCornerReport]:
    side = Side.parse(side)
    locate(M, d)
    path = d.mu if side is Side.MU else d.sigma
    return cut_corners_on_path(M, path, side)


def c7_witnesses_at(M: CombinatorialMap, mu: Sequence[int], sigma: Sequence[int]) -> list[int]:
    found = set()
    for path in (mu, sigma):
        if not path:
            continue
        index = _path_index(M, path)
        for p in M.profiles():
            if p.is_proper_boundary and len(p.neighbors) <= 3 and _span(p, index) is not None:
                found.add(p.region)
    return sorted(found)


def c7_witnesses(M: CombinatorialMap, d: BoundaryDecomposition) -> list[int]:
    """Proper boundary regions with at most three neighbors whose outer
    boundary is a subpath of mu or of sigma."""
    locate(M, d)
    return c7_witnesses_at(M, d.mu, d.sigma)


# --- thick configurations ---------------------------------------------------------

def check_boundary_path(M: CombinatorialMap, path: Sequence[int]) -> None:
    for k, e in enumerate(path):
        if not 1 <= e <= M.n_darts or not M.is_boundary_edge(e):
            raise PathNotOnBoundary(f"dart {e} is not on the boundary")
        if k and M.head(path[k - 1]) != M.tail(e):
            raise PathNotOnBoundary(f"darts {path[k - 1]} and {e} are not consecutive")


def _oriented_boundary(M: CombinatorialMap, region: int, first: int) -> tuple[int, ...] | None:
    """Boundary of ``region`` read from dart ``first`` in the direction of
    that dart (``first`` may be a dart of the region or its reversal)."""
    cyc = M.regions[region].boundary
    rev = M.rev
    if first not in cyc:
        cyc = tuple(rev[e] for e in reversed(cyc))
        if first not in cyc:
            return None
    i = cyc.index(first)
    return cyc[i:] + cyc[:i]


def find_thick_configurations(M: CombinatorialMap, side_path: Sequence[int]) -> list[ThickConfigReport]:
    path = tuple(side_path)
    check_boundary_path(M, path)
    return thick_on_path(M, path)


def thick_on_path(M: CombinatorialMap, path: tuple[int, ...]) -> list[ThickConfigReport]:
    """:func:`find_thick_configurations` without the path check."""
    if not path:
        return []
    rev = M.rev
    owner = [M.region_of_edge(e) for e in path]
    positions: dict[int, list[int]] = {}
    for j, D in enumerate(owner):
        if D != OUTER:
            positions.setdefault(D, []).append(j)
    reports = []

    for D in sorted(positions):
        js = positions[D]
        if js[-1] - js[0] + 1 != len(js):
            continue
        mu = path[js[0]:js[-1] + 1]
        cyc = _oriented_boundary(M, D, mu[0])
        if cyc is None or cyc[:len(mu)] != mu:
            continue
        sigma = tuple(rev[e] for e in reversed(cyc[len(mu):]))
        if len(mu) > len(sigma):
            reports.append(ThickConfigReport("single-region", (D,), mu, sigma))

    for j in range(1, len(path) - 1):
        D2 = owner[j]
        if D2 == OUTER or owner[j + 1] != D2 or len(M.regions[D2]) != 4:
            continue
        mu = path[j:j + 2]
        cyc = _oriented_boundary(M, D2, mu[0])
        if cyc is None or cyc[:2] != mu:
            continue
        sigma = tuple(rev[e] for e in reversed(cyc[2:]))
        if any(M.is_boundary_edge(e) for e in sigma):
            continue
        D1 = owner[j - 1]
        if D1 in (OUTER, D2) or D1 not in M.profile(D2).neighbors:
            continue
        reports.append(ThickConfigReport("two-region", (D1, D2), mu, sigma, path[j - 1]))
    return reports
