"""Slow reference implementations used to cross-check the detectors.

Everything here is recomputed from the raw ``rev``/``rot`` arrays of a map
and written for obviousness rather than speed.  Regions are named by their
least boundary dart and vertices by their least outgoing dart, so results
can be compared with the fast code without sharing its indexing.
"""

from __future__ import annotations

from itertools import combinations

from .maps import CombinatorialMap
from .presentations import Presentation, Word


class RawMap:
    def __init__(self, M: CombinatorialMap):
        n = M.n_darts
        self.darts = list(range(1, n + 1))
        self.rev = {d: M.rev[d] for d in self.darts}
        self.rot = {d: M.rot[d] for d in self.darts}
        inv = {self.rot[d]: d for d in self.darts}
        # face on the left: leave d's head, turn to the previous dart around that vertex
        self.phi = {d: inv[self.rev[d]] for d in self.darts}
        self.vertex = {}
        for d in self.darts:
            if d not in self.vertex:
                cyc = self._orbit(d, self.rot)
                for e in cyc:
                    self.vertex[e] = min(cyc)
        faces = {}
        for d in self.darts:
            if not any(d in f for f in faces.values()):
                f = self._orbit(d, self.phi)
                faces[min(f)] = f
        outer = next(k for k, f in faces.items() if M.outer_dart in f)
        self.outer = faces.pop(outer)
        self.faces = faces

    @staticmethod
    def _orbit(d, perm):
        out = [d]
        e = perm[d]
        while e != d:
            out.append(e)
            e = perm[e]
        return out

    def edge(self, d):
        return frozenset((d, self.rev[d]))

    def head(self, d):
        return self.vertex[self.rev[d]]

    def valence(self, v):
        return sum(1 for d in self.darts if self.vertex[d] == v)

    def boundary_edges(self):
        return {self.edge(d) for d in self.outer}

    def edges_of(self, f):
        return {self.edge(d) for d in self.faces[f]}

    def outer_edges_of(self, f):
        return self.edges_of(f) & self.boundary_edges()

    def vertices_of(self, f):
        return {self.vertex[d] for d in self.faces[f]}

    def neighbors(self, f):
        return {g for g in self.faces if g != f and self.edges_of(f) & self.edges_of(g)}

    def is_proper(self, f):
        out = self.outer_edges_of(f)
        if not out:
            return False
        keep = {self.edge(d) for d in self.darts} - out
        verts = {self.vertex[d] for e in keep for d in e}
        if not verts:
            return False
        adj = {v: set() for v in verts}
        for e in keep:
            a, b = tuple(e) if len(e) == 2 else (next(iter(e)),) * 2
            adj[self.vertex[a]].add(self.vertex[b])
            adj[self.vertex[b]].add(self.vertex[a])
        seen = {next(iter(verts))}
        stack = list(seen)
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == verts


def outer_cycle_from(raw: RawMap, base: int) -> list[int]:
    cyc = raw.outer
    i = cyc.index(base)
    return cyc[i:] + cyc[:i]


def decomposition_paths(raw: RawMap, base: int, x: int, m: int, t: int):
    """(xi, mu, tau, sigma) as dart lists, tau and sigma read towards the end vertex."""
    c = outer_cycle_from(raw, base)
    xi, mu = c[:x], c[x:x + m]
    tau = [raw.rev[d] for d in reversed(c[x + m:x + m + t])]
    sigma = [raw.rev[d] for d in reversed(c[x + m + t:])]
    return xi, mu, tau, sigma


def thin(raw: RawMap, base: int, x: int, m: int, t: int, reading: str = "vertex") -> bool:
    xi, mu, tau, sigma = decomposition_paths(raw, base, x, m, t)
    origin = raw.vertex[base]
    end = raw.head(xi[-1]) if xi else origin

    def path_vertices(path, start):
        return {start} | {raw.head(d) for d in path}

    a_path, b_path = xi + mu, sigma + tau
    a_vs = path_vertices(a_path, origin)
    b_vs = path_vertices(b_path, origin)
    a_es = {raw.edge(d) for d in a_path}
    b_es = {raw.edge(d) for d in b_path}
    for f in raw.faces:
        if len(raw.neighbors(f)) > 2:
            return False
        if reading == "vertex":
            if not (raw.vertices_of(f) & a_vs and raw.vertices_of(f) & b_vs):
                return False
        else:
            mu_vertex = {end} if not mu else set()
            sigma_vertex = {origin} if not sigma else set()
            if not (raw.edges_of(f) & a_es or raw.vertices_of(f) & mu_vertex):
                return False
            if not (raw.edges_of(f) & b_es or raw.vertices_of(f) & sigma_vertex):
                return False
    return True


def cut_corners(raw: RawMap, path: list[int], side: str) -> set[tuple]:
    """Tuples ``(region, side, kind, ell, r, s, aux, corner)`` straight from the
    clauses; regions and vertices use the naming described above."""
    found = set()
    pe = [raw.edge(d) for d in path]
    for f in raw.faces:
        if not raw.is_proper(f):
            continue
        out = raw.outer_edges_of(f)
        r = len(out)
        s = len(raw.faces[f]) - r
        for ell in range(1, len(path) - r + 2):
            if set(pe[ell - 1:ell - 1 + r]) != out:
                continue
            corner = raw.vertex[path[ell - 1]] if ell > 1 else None
            v3 = corner is not None and raw.valence(corner) == 3
            if s < r:
                found.add((f, side, "T1", ell, r, s, None, corner))
            if s == r == 2 and ell > 1 and v3:
                found.add((f, side, "T2", ell, r, s, None, corner))
            if s == r == 3 and ell > 1 and v3:
                for E in raw.neighbors(f):
                    if not raw.outer_edges_of(E):
                        continue
                    if pe[ell - 2] in raw.edges_of(E) and len(raw.faces[E]) <= 5:
                        found.add((f, side, "T3", ell, r, s, E, corner))
                    if ell > 2 and {pe[ell - 3], pe[ell - 2]} <= raw.edges_of(E):
                        found.add((f, side, "T4", ell, r, s, E, corner))
    return found


def c7_witnesses(raw: RawMap, mu: list[int], sigma: list[int]) -> set[int]:
    found = set()
    for path in (mu, sigma):
        pe = [raw.edge(d) for d in path]
        for f in raw.faces:
            if not raw.is_proper(f) or len(raw.neighbors(f)) > 3:
                continue
            r = len(raw.outer_edges_of(f))
            if any(set(pe[i:i + r]) == raw.outer_edges_of(f) for i in range(len(pe) - r + 1)):
                found.add(f)
    return found


# --- presentations -------------------------------------------------------------

def pieces(P: Presentation) -> set[Word]:
    out = set()
    for R1, R2 in combinations(sorted(P.relators), 2):
        k = 1
        while k <= min(len(R1), len(R2)) and R1.letters[:k] == R2.letters[:k]:
            out.add(Word(R1.letters[:k]))
            k += 1
    return out


def min_piece_decomposition(R: Word, piece_set) -> int | None:
    """Try every way of cutting ``R`` into consecutive factors."""
    n = len(R)
    ps = {p.letters for p in piece_set}
    best = None
    for mask in range(1 << (n - 1)):
        cuts = [0] + [i + 1 for i in range(n - 1) if mask >> i & 1] + [n]
        parts = [R.letters[a:b] for a, b in zip(cuts, cuts[1:])]
        if all(p in ps for p in parts):
            if best is None or len(parts) < best:
                best = len(parts)
    return best
