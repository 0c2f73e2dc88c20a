"""Exhaustive campaigns over small shellable maps.

Maps are generated by polygon shelling: start from one k-gon and glue each
new k'-gon along a contiguous boundary path of length ``1 <= L < k'``.  The
generator is sound (every map it emits is a valid planar map) but does not
reach non-shellable complexes.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import asdict, dataclass, field, replace
from typing import Iterator

from .conditions import (
    Side,
    c7_witnesses_at,
    classify_map,
    cut_corners_on_path,
    thick_on_path,
    side_darts,
    thin_at,
)
from .maps import BoundaryDecomposition, CombinatorialMap, build_map, decompose, locate

log = logging.getLogger(__name__)

CLASSES = ("none", "proper_v6", "proper_c7", "proper_c4t4")
READINGS = ("vertex", "edge")
THEOREM_CLASS = {"main": "proper_v6", "c7": "proper_c7", "c4t4": "proper_c4t4"}


class ConfigInvalid(ValueError):
    pass


class NotInClass(ValueError):
    pass


@dataclass(frozen=True)
class EnumConfig:
    max_regions: int = 1
    region_edge_range: tuple[int, int] = (4, 4)
    max_boundary_length: int = 16
    class_filter: str = "none"
    dedup: bool = True
    reading: str = "vertex"

    def validate(self) -> "EnumConfig":
        lo, hi = self.region_edge_range
        if self.max_regions < 1:
            raise ConfigInvalid("max_regions must be at least 1")
        if not 1 <= lo <= hi <= 16:
            raise ConfigInvalid(f"region_edge_range {self.region_edge_range} not within [1, 16]")
        if self.max_boundary_length < 1:
            raise ConfigInvalid("max_boundary_length must be positive")
        if self.class_filter not in CLASSES:
            raise ConfigInvalid(f"unknown class filter {self.class_filter!r}")
        if self.reading not in READINGS:
            raise ConfigInvalid(f"unknown thinness reading {self.reading!r}")
        return self


# --- shelling ------------------------------------------------------------------

def polygon(k: int) -> CombinatorialMap:
    """A single k-gon; dart ``2i-1`` runs counterclockwise along side i."""
    # vertex i has outgoing darts 2i+1 (forward) and 2i (backward along side i)
    rotation = []
    for i in range(k):
        fwd = 2 * i + 1
        back = 2 * ((i - 1) % k) + 2
        rotation.append((fwd, back))
    pairs = [(2 * i + 1, 2 * i + 2) for i in range(k)]
    return build_map(2 * k, pairs, rotation, 2)


def glue(M: CombinatorialMap, start: int, length: int, k: int) -> CombinatorialMap:
    """Attach a new k-gon along the boundary path of ``length`` darts
    starting at cycle position ``start``."""
    c = M.outer_cycle
    n = len(c)
    new_edges = k - length
    if not 1 <= length < n or new_edges < 1:
        raise ValueError(f"cannot glue a {k}-gon along {length} of {n} boundary edges")
    first = c[start % n]
    last = c[(start + length - 1) % n]
    before = c[(start - 1) % n]
    after = c[(start + length) % n]
    u = M.head(last)
    w = M.tail(first)
    if u == w:
        raise ValueError("gluing path is closed")
    rot = list(M.rot)
    rev = list(M.rev)
    base = M.n_darts
    q = [base + 2 * j + 1 for j in range(new_edges)]
    for d in q:
        rev += [d + 1, d]
        rot += [0, 0]
    # q[j] runs from z_j to z_{j+1}; z_0 = u, z_m = w
    rot[after] = q[0]
    rot[q[0]] = M.rev[last]
    qm_rev = q[-1] + 1
    rot[first] = qm_rev
    rot[qm_rev] = M.rev[before]
    for j in range(new_edges - 1):
        a, b = q[j] + 1, q[j + 1]
        rot[a], rot[b] = b, a
    return CombinatorialMap(base + 2 * new_edges, rev, rot, before)


def canonical_form(M: CombinatorialMap, mirror: bool = False) -> tuple:
    """Lexicographically least relabelling over all outer starting darts.

    Orientation-preserving unless ``mirror`` is set, in which case both
    orientations are tried.
    """
    rev = M.rev
    variants = [(M.rot, M.outer_cycle)]
    if mirror:
        variants.append((M.rot_inv, tuple(rev[d] for d in M.outer_cycle)))
    best = None
    for rot, starts in variants:
        for s in starts:
            label = {s: 0}
            order = [s]
            code = []
            i = 0
            while i < len(order):
                d = order[i]
                i += 1
                for x in (rev[d], rot[d]):
                    if x not in label:
                        label[x] = len(order)
                        order.append(x)
                    code.append(label[x])
            key = tuple(code)
            if best is None or key < best:
                best = key
    return best


def _hopeless(M: CombinatorialMap, cls: str) -> bool:
    """Failures no later gluing can repair (only boundary cells change)."""
    if cls == "none":
        return False
    inner = [v for v in range(M.n_vertices) if M.is_inner_vertex(v)]
    val = M.valence
    if cls == "proper_c4t4":
        return any(val(v) < 4 for v in inner) or any(len(r) < 4 for r in M.regions)
    if any(val(v) == 2 for v in inner):
        return True
    if cls == "proper_c7":
        return any(len(r) < 7 for r in M.regions)
    inner3 = {v for v in inner if val(v) == 3}
    for p in M.profiles():
        if p.edge_count < 4:
            return True
        has3 = not inner3.isdisjoint(p.vertices)
        if has3 and p.edge_count < 6:
            return True
        if p.is_inner and len(p.neighbors) < (6 if has3 else 4):
            return True
    return False


@dataclass
class EnumStats:
    generated: int = 0
    in_class: int = 0
    per_level: dict = field(default_factory=dict)


def _shell(cfg: EnumConfig, stats: EnumStats | None = None) -> Iterator[tuple[CombinatorialMap, bool]]:
    cfg.validate()
    lo, hi = cfg.region_edge_range
    cls = cfg.class_filter
    stats = stats if stats is not None else EnumStats()
    level = [polygon(k) for k in range(lo, hi + 1)]
    for nreg in range(1, cfg.max_regions + 1):
        if nreg > 1:
            nxt = []
            seen = set()
            for M in level:
                n = M.boundary_length
                for k in range(lo, hi + 1):
                    for L in range(1, min(k - 1, n - 1) + 1):
                        for start in range(n):
                            try:
                                G = glue(M, start, L, k)
                            except ValueError:
                                continue
                            if _hopeless(G, cls):
                                continue
                            if cfg.dedup:
                                key = canonical_form(G)
                                if key in seen:
                                    continue
                                seen.add(key)
                            nxt.append(G)
            level = nxt
        else:
            level = [M for M in level if not _hopeless(M, cls)]
        count = 0
        for M in level:
            if M.boundary_length > cfg.max_boundary_length:
                continue
            stats.generated += 1
            ok = classify_map(M).member(cls)
            if ok:
                stats.in_class += 1
                count += 1
            yield M, ok
        stats.per_level[nreg] = count
        log.debug("level %d: %d maps kept for expansion, %d emitted", nreg, len(level), count)


def enumerate_maps(cfg: EnumConfig) -> Iterator[CombinatorialMap]:
    for M, ok in _shell(cfg):
        if ok:
            yield M


def enumerate_decompositions(M: CombinatorialMap) -> list[BoundaryDecomposition]:
    return [decompose(M, M.outer_cycle[b], x, m, t) for b, x, m, t in decomposition_coords(M)]


def decomposition_coords(M: CombinatorialMap) -> Iterator[tuple[int, int, int, int]]:
    n = M.boundary_length
    for b in range(n):
        for x in (0, 1):
            for t in (0, 1):
                for m in range(n - x - t + 1):
                    yield b, x, m, t


# --- verdicts ------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    status: str  # pass | vacuous_thin | counterexample
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"status": self.status, "details": self.details}


def _bundle(M: CombinatorialMap, pos: int, x: int, m: int, t: int, theorem: str) -> dict:
    from .io import serialize_map

    return {
        "theorem": theorem,
        "map": serialize_map(M),
        "decomposition": {"base": M.outer_cycle[pos], "xi": x, "mu": m, "tau": t},
    }


def _require(M: CombinatorialMap, cls: str) -> None:
    if not classify_map(M).member(cls):
        raise NotInClass(f"map is not {cls}")


def main_at(M, pos, x, m, t, reading: str = "vertex") -> Verdict:
    if thin_at(M, pos, x, m, t, reading):
        return Verdict("vacuous_thin")
    found = []
    for side in (Side.MU, Side.SIGMA):
        found += cut_corners_on_path(M, side_darts(M, pos, x, m, t, side), side)
    if found:
        return Verdict("pass", {"cut_corners": [r.as_dict() for r in found]})
    return Verdict("counterexample", _bundle(M, pos, x, m, t, "main"))


def c7_at(M, pos, x, m, t, reading: str = "vertex") -> Verdict:
    if thin_at(M, pos, x, m, t, reading):
        return Verdict("vacuous_thin")
    mu = side_darts(M, pos, x, m, t, Side.MU)
    sigma = side_darts(M, pos, x, m, t, Side.SIGMA)
    w = c7_witnesses_at(M, mu, sigma)
    if w:
        return Verdict("pass", {"witnesses": w})
    return Verdict("counterexample", _bundle(M, pos, x, m, t, "c7"))


def c4t4_at(M, pos, x, m, t, reading: str = "vertex") -> Verdict:
    if thin_at(M, pos, x, m, t, reading):
        return Verdict("vacuous_thin")
    found = []
    for side in (Side.MU, Side.SIGMA):
        for rep in thick_on_path(M, side_darts(M, pos, x, m, t, side)):
            found.append({"side": side.value, **rep.as_dict()})
    if found:
        return Verdict("pass", {"thick_configurations": found})
    return Verdict("counterexample", _bundle(M, pos, x, m, t, "c4t4"))


def verify_main_theorem(M: CombinatorialMap, d: BoundaryDecomposition, reading: str = "vertex") -> Verdict:
    """Non-thin implies a cut corner on mu or on sigma."""
    _require(M, "proper_v6")
    return main_at(M, *locate(M, d), reading)


def verify_c7_corollary(M: CombinatorialMap, d: BoundaryDecomposition, reading: str = "vertex") -> Verdict:
    """Non-thin implies a proper boundary region with at most three
    neighbors whose outer boundary lies in mu or in sigma."""
    _require(M, "proper_c7")
    return c7_at(M, *locate(M, d), reading)


def verify_c4t4_corollary(M: CombinatorialMap, d: BoundaryDecomposition, reading: str = "vertex") -> Verdict:
    """Non-thin implies a thick configuration on mu or on sigma."""
    _require(M, "proper_c4t4")
    return c4t4_at(M, *locate(M, d), reading)


VERIFIERS = {"main": main_at, "c7": c7_at, "c4t4": c4t4_at}


# --- campaigns -------------------------------------------------------------------

@dataclass
class CampaignReport:
    theorem: str
    config: dict
    maps_generated: int = 0
    maps_in_class: int = 0
    decompositions_tested: int = 0
    pass_count: int = 0
    vacuous_count: int = 0
    counterexamples: list = field(default_factory=list)
    by_boundary_length: dict = field(default_factory=dict)
    audit: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["by_boundary_length"] = {str(k): v for k, v in sorted(self.by_boundary_length.items())}
        return d


def audit_instance(M, pos, x, m, t, theorem: str, verdict: Verdict,
                   reading: str = "vertex") -> list[str]:
    """Side properties checked alongside a verdict; returns violations."""
    problems = []
    corners = []
    for side in (Side.MU, Side.SIGMA):
        corners += cut_corners_on_path(M, side_darts(M, pos, x, m, t, side), side)
    if theorem == "c7":
        mu = side_darts(M, pos, x, m, t, Side.MU)
        sigma = side_darts(M, pos, x, m, t, Side.SIGMA)
        witnesses = set(c7_witnesses_at(M, mu, sigma))
        t1 = {r.region for r in corners if r.kind == "T1"}
        for r in corners:
            if r.kind != "T1" or r.s > 3 or r.region not in witnesses:
                problems.append(f"cut corner {r.as_dict()} is not a T1 witness")
        for w in witnesses:
            if len(M.profile(w).neighbors) > 3 or w not in t1:
                problems.append(f"witness {w} is not a T1 cut corner")
    if theorem == "c4t4":
        for side in (Side.MU, Side.SIGMA):
            mine = [r for r in corners if r.side is side]
            if not mine:
                continue
            thick = thick_on_path(M, side_darts(M, pos, x, m, t, side))
            used = set()
            for r in mine:
                if r.kind not in ("T1", "T2"):
                    problems.append(f"cut corner of kind {r.kind} on a C(4)&T(4) map")
                    continue
                want = "single-region" if r.kind == "T1" else "two-region"
                match = [i for i, c in enumerate(thick)
                         if c.kind == want and c.regions[-1] == r.region and i not in used]
                if not match:
                    problems.append(f"cut corner {r.as_dict()} has no thick configuration")
                else:
                    used.add(match[0])
    if theorem in ("c7", "c4t4") and verdict.status == "pass":
        if main_at(M, pos, x, m, t, reading).status != "pass":
            problems.append("corollary passes but the main verifier does not")
    return problems


def run_campaign(cfg: EnumConfig, theorem: str, audit: bool = False,
                 max_counterexamples: int = 50) -> CampaignReport:
    """Run a verifier over every enumerated map and decomposition.

    The class filter is set from the theorem.  With ``audit`` the side
    properties of :func:`audit_instance` are checked on every instance.
    """
    if theorem not in VERIFIERS:
        raise ConfigInvalid(f"unknown theorem {theorem!r}")
    cfg = replace(cfg, class_filter=THEOREM_CLASS[theorem]).validate()
    verifier = VERIFIERS[theorem]
    report = CampaignReport(theorem, _config_dict(cfg))
    stats = EnumStats()
    violations: list = []
    n_violations = 0
    monotone_fail = 0
    for M, ok in _shell(cfg, stats):
        if not ok:
            continue
        mc = classify_map(M)
        if (mc.is_proper_c7 or mc.is_proper_c4t4) and not mc.is_proper_v6:
            monotone_fail += 1
        row = report.by_boundary_length.setdefault(
            M.boundary_length, {"pass": 0, "vacuous_thin": 0, "counterexample": 0})
        for pos, x, m, t in decomposition_coords(M):
            v = verifier(M, pos, x, m, t, cfg.reading)
            report.decompositions_tested += 1
            row[v.status] += 1
            if v.status == "pass":
                report.pass_count += 1
            elif v.status == "vacuous_thin":
                report.vacuous_count += 1
            else:
                report.counterexamples.append(v.details)
            if audit:
                probs = audit_instance(M, pos, x, m, t, theorem, v, cfg.reading)
                n_violations += len(probs)
                if probs and len(violations) < max_counterexamples:
                    violations.append({**_bundle(M, pos, x, m, t, theorem), "problems": probs})
    report.maps_generated = stats.generated
    report.maps_in_class = stats.in_class
    report.counterexamples.sort(key=lambda b: (b["map"], sorted(b["decomposition"].items())))
    if audit:
        report.audit = {"violations": n_violations, "examples": violations,
                        "class_monotonicity_failures": monotone_fail}
    return report


def _config_dict(cfg: EnumConfig) -> dict:
    d = asdict(cfg)
    d["region_edge_range"] = list(cfg.region_edge_range)
    return d


def summarize(report: CampaignReport) -> Counter:
    return Counter({"pass": report.pass_count, "vacuous_thin": report.vacuous_count,
                    "counterexample": len(report.counterexamples)})
