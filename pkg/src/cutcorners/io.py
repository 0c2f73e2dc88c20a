"""Line-based text formats for maps and presentations, and DOT export.

Map document::

    kmap 1
    darts 8
    vertex 1 8
    vertex 2 3
    ...
    outer 2
    label 1 a

Darts are ``1..N`` with reversal pairs ``(2i-1, 2i)``.  Each ``vertex``
line lists the outgoing darts of one vertex counterclockwise.  ``label d x``
labels dart ``d`` with generator letter ``x`` (uppercase is the inverse).

Presentation document::

    pres 1
    gens a b
    rel abAB
"""

from __future__ import annotations

import json
from typing import Iterable

from .maps import CombinatorialMap, MapError, build_map
from .presentations import (
    DiagramLabelling,
    NotFreelyReduced,
    Presentation,
    UnknownGenerator,
    Word,
    symmetric_closure,
)


class DocumentSyntaxError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class DanglingDart(MapError):
    pass


class DuplicateDart(MapError):
    pass


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def parse_map(text: str) -> tuple[CombinatorialMap, DiagramLabelling | None]:
    lines = list(_lines(text))
    if not lines or lines[0][1] != ["kmap", "1"]:
        raise DocumentSyntaxError("expected header 'kmap 1'", lines[0][0] if lines else 1)
    n = None
    outer = None
    cycles = []
    labels: dict[int, str] = {}
    seen: dict[int, int] = {}
    for no, toks in lines[1:]:
        key, args = toks[0], toks[1:]
        try:
            nums = [int(a) for a in args] if key != "label" else [int(args[0])]
        except (ValueError, IndexError):
            raise DocumentSyntaxError(f"bad arguments to {key!r}", no) from None
        if key == "darts":
            if n is not None or len(nums) != 1 or nums[0] < 2 or nums[0] % 2:
                raise DocumentSyntaxError("'darts' takes one positive even count", no)
            n = nums[0]
        elif key == "vertex":
            if n is None:
                raise DocumentSyntaxError("'vertex' before 'darts'", no)
            if not nums:
                raise DocumentSyntaxError("empty vertex", no)
            for d in nums:
                if not 1 <= d <= n:
                    raise DocumentSyntaxError(f"dart {d} out of range", no)
                if d in seen:
                    raise DuplicateDart(f"line {no}: dart {d} already listed on line {seen[d]}")
                seen[d] = no
            cycles.append(nums)
        elif key == "outer":
            if outer is not None or len(nums) != 1:
                raise DocumentSyntaxError("'outer' takes one dart", no)
            outer = nums[0]
        elif key == "label":
            if len(args) != 2 or len(args[1]) != 1 or not args[1].isalpha():
                raise DocumentSyntaxError("'label' takes a dart and one letter", no)
            d = nums[0]
            if d in labels or (d % 2 and d + 1 in labels) or (not d % 2 and d - 1 in labels):
                raise DocumentSyntaxError(f"edge of dart {d} labelled twice", no)
            labels[d] = args[1]
        else:
            raise DocumentSyntaxError(f"unknown keyword {key!r}", no)
    if n is None:
        raise DocumentSyntaxError("missing 'darts' line")
    if outer is None:
        raise DocumentSyntaxError("missing 'outer' line")
    missing = [d for d in range(1, n + 1) if d not in seen]
    if missing:
        raise DanglingDart(f"darts at no vertex: {missing}")
    pairs = [(2 * i + 1, 2 * i + 2) for i in range(n // 2)]
    M = build_map(n, pairs, cycles, outer)
    L = DiagramLabelling.from_text(labels) if labels else None
    if L is not None:
        L.check(M)
    return M, L


def _uses_standard_pairs(M: CombinatorialMap) -> bool:
    return all(M.rev[d] == (d + 1 if d % 2 else d - 1) for d in range(1, M.n_darts + 1))


def serialize_map(M: CombinatorialMap, L: DiagramLabelling | None = None) -> str:
    if not _uses_standard_pairs(M):
        raise ValueError("map does not use the (2i-1, 2i) reversal convention")
    out = ["kmap 1", f"darts {M.n_darts}"]
    cycles = []
    for cyc in M.vertices:
        i = cyc.index(min(cyc))
        cycles.append(cyc[i:] + cyc[:i])
    for cyc in sorted(cycles):
        out.append("vertex " + " ".join(map(str, cyc)))
    out.append(f"outer {M.outer_dart}")
    if L is not None:
        for d in sorted(L.labels):
            g, s = L.labels[d]
            out.append(f"label {d} {g if s > 0 else g.upper()}")
    return "\n".join(out) + "\n"


def parse_presentation(text: str, symmetrize: bool = False) -> Presentation:
    lines = list(_lines(text))
    if not lines or lines[0][1] != ["pres", "1"]:
        raise DocumentSyntaxError("expected header 'pres 1'", lines[0][0] if lines else 1)
    gens = None
    rels = []
    for no, toks in lines[1:]:
        key, args = toks[0], toks[1:]
        if key == "gens":
            if gens is not None:
                raise DocumentSyntaxError("duplicate 'gens' line", no)
            if any(len(g) != 1 or not g.islower() for g in args) or len(set(args)) != len(args):
                raise DocumentSyntaxError("generators are distinct lowercase letters", no)
            gens = tuple(args)
        elif key == "rel":
            if gens is None:
                raise DocumentSyntaxError("'rel' before 'gens'", no)
            if len(args) != 1:
                raise DocumentSyntaxError("'rel' takes one word", no)
            try:
                w = Word.parse(args[0])
            except ValueError as exc:
                raise DocumentSyntaxError(str(exc), no) from None
            unknown = w.generators() - set(gens)
            if unknown:
                raise UnknownGenerator(f"line {no}: unknown generators {sorted(unknown)}")
            if not w.is_freely_reduced() or not w.letters:
                raise NotFreelyReduced(f"line {no}: {args[0]} is not freely reduced")
            rels.append(w)
        else:
            raise DocumentSyntaxError(f"unknown keyword {key!r}", no)
    if gens is None:
        raise DocumentSyntaxError("missing 'gens' line")
    relators = symmetric_closure(rels) if symmetrize else frozenset(rels)
    return Presentation(gens, relators)


def serialize_presentation(P: Presentation) -> str:
    out = ["pres 1", "gens " + " ".join(P.generators)]
    for w in sorted(P.relators, key=lambda w: (len(w), str(w))):
        out.append(f"rel {w}")
    return "\n".join(out) + "\n"


def export_dot(M: CombinatorialMap, highlight: Iterable[int] = (), labels: DiagramLabelling | None = None,
               name: str = "kmap") -> str:
    """Graphviz text: vertices as nodes, edges as undirected edges, and one
    cluster per region holding a marker node.  Regions in ``highlight`` are
    filled."""
    hl = set(highlight)
    out = [f"graph {name} {{", "  node [shape=circle, width=0.25, fontsize=9];"]
    for v in range(M.n_vertices):
        attrs = f'label="{v}"' + (", style=filled, fillcolor=gray90" if M.is_inner_vertex(v) else "")
        out.append(f"  v{v} [{attrs}];")
    for e in M.edges():
        txt = str(e)
        if labels is not None:
            g, s = labels.letter(M, e)
            txt += ":" + (g if s > 0 else g.upper())
        style = "solid" if M.is_boundary_edge(e) else "dashed"
        out.append(f'  v{M.tail(e)} -- v{M.head(e)} [label="{txt}", style={style}];')
    for r in M.regions:
        p = M.profile(r.index)
        fill = "style=filled, fillcolor=lightsalmon" if r.index in hl else "style=dotted"
        out.append(f"  subgraph cluster_R{r.index} {{")
        out.append(f'    label="R{r.index}"; {fill.replace(", ", "; ")};')
        out.append(f'    R{r.index} [shape=plaintext, label="R{r.index}\\n{p.edge_count} edges"];')
        out.append("  }")
        for v in sorted(p.vertices):
            out.append(f"  R{r.index} -- v{v} [style=invis];")
    out.append("}")
    return "\n".join(out) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=_default) + "\n"


def _default(o):
    if hasattr(o, "as_dict"):
        return o.as_dict()
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    if isinstance(o, Word):
        return str(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")
