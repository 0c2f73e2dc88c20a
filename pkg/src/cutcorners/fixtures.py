"""Named example maps.

The maps are built from straight-line plane drawings: the rotation at each
vertex is the counterclockwise order of its edges by angle, and the outer
face is the face of negative signed area.  Coordinates are only used here,
to name regions and darts; the resulting maps carry no geometry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .maps import CombinatorialMap, build_map

Point = tuple[float, float]


@dataclass
class Fixture:
    """A map together with names for some of its regions and vertices."""

    name: str
    map: CombinatorialMap
    regions: dict[str, int] = field(default_factory=dict)
    vertices: dict[Point, int] = field(default_factory=dict)
    darts: dict[tuple[Point, Point], int] = field(default_factory=dict)

    def dart(self, p: Point, q: Point) -> int:
        return self.darts[(tuple(p), tuple(q))]

    def path(self, *points: Point) -> tuple[int, ...]:
        return tuple(self.dart(p, q) for p, q in zip(points, points[1:]))


def from_plane_graph(name: str, edges: list[tuple[Point, Point]],
                     regions: dict[str, Point] | None = None) -> Fixture:
    """Build a map from a plane straight-line drawing.

    Edge ``i`` (0-based) becomes darts ``2i+1`` (as listed) and ``2i+2``.
    ``regions`` maps a name to a point inside the named region.
    """
    edges = [(tuple(p), tuple(q)) for p, q in edges]
    points = sorted({p for e in edges for p in e})
    out: dict[Point, list[int]] = {p: [] for p in points}
    darts: dict[tuple[Point, Point], int] = {}
    head: dict[int, Point] = {}
    pairs = []
    for i, (p, q) in enumerate(edges):
        a, b = 2 * i + 1, 2 * i + 2
        pairs.append((a, b))
        darts[(p, q)] = a
        darts[(q, p)] = b
        out[p].append(a)
        out[q].append(b)
        head[a], head[b] = q, p

    def angle(p: Point, d: int) -> float:
        q = head[d]
        return math.atan2(q[1] - p[1], q[0] - p[0])

    rotation = [sorted(out[p], key=lambda d, p=p: angle(p, d)) for p in points]
    n = 2 * len(edges)
    tail = {d: p for p in points for d in out[p]}

    # pick the outer face by signed area
    probe = build_map(n, pairs, rotation, 1)
    outer_dart = None
    for f in [probe.outer_cycle] + [r.boundary for r in probe.regions]:
        area = sum(tail[d][0] * head[d][1] - head[d][0] * tail[d][1] for d in f)
        if area < 0:
            outer_dart = f[0]
            break
    M = build_map(n, pairs, rotation, outer_dart)

    named = {}
    for rname, pt in (regions or {}).items():
        for r in M.regions:
            poly = [tail[d] for d in r.boundary]
            if _inside(pt, poly):
                named[rname] = r.index
                break
        else:
            raise ValueError(f"no region contains {pt}")
    vertices = {p: M.tail(out[p][0]) for p in points}
    return Fixture(name, M, named, vertices, darts)


def _inside(pt: Point, poly: list[Point]) -> bool:
    x, y = pt
    inside = False
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        if (y1 > y) != (y2 > y):
            if x < x1 + (y - y1) * (x2 - x1) / (y2 - y1):
                inside = not inside
    return inside


def grid(cols: int, rows: int, name: str | None = None) -> Fixture:
    """``cols x rows`` unit squares; regions named by (column, row)."""
    edges = []
    for y in range(rows + 1):
        for x in range(cols):
            edges.append(((x, y), (x + 1, y)))
    for x in range(cols + 1):
        for y in range(rows):
            edges.append(((x, y), (x, y + 1)))
    regions = {f"{x},{y}": (x + 0.5, y + 0.5) for x in range(cols) for y in range(rows)}
    return from_plane_graph(name or f"grid{cols}x{rows}", edges, regions)


def sq1() -> Fixture:
    f = grid(1, 1, "SQ1")
    f.regions["D"] = f.regions["0,0"]
    return f


def lad2() -> Fixture:
    f = grid(2, 1, "LAD2")
    f.regions.update(left=f.regions["0,0"], right=f.regions["1,0"])
    return f


def lad3() -> Fixture:
    f = grid(3, 1, "LAD3")
    f.regions.update(left=f.regions["0,0"], middle=f.regions["1,0"], right=f.regions["2,0"])
    return f


def grid4() -> Fixture:
    f = grid(2, 2, "GRID4")
    f.regions.update(SW=f.regions["0,0"], SE=f.regions["1,0"],
                     NW=f.regions["0,1"], NE=f.regions["1,1"])
    return f


def tri_wheel() -> Fixture:
    A, B, C = (0.0, 0.0), (8.0, 0.0), (4.0, 8.0)
    a, b, c = (3.0, 2.0), (5.0, 2.0), (4.0, 4.0)
    edges = [(A, B), (B, C), (C, A), (a, b), (b, c), (c, a), (A, a), (B, b), (C, c)]
    regions = {"T": (4.0, 2.6), "south": (4.0, 1.0), "east": (5.5, 3.5), "west": (2.5, 3.5)}
    return from_plane_graph("TRI_WHEEL", edges, regions)


def all_fixtures() -> dict[str, Fixture]:
    return {f.name: f for f in (sq1(), lad2(), lad3(), grid4(), tri_wheel())}

