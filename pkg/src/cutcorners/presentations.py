"""Free-group words, symmetric closure, pieces and V(6) classification.

Words are written with one character per letter; an uppercase letter is the
inverse of the lowercase generator (``abAB`` is the commutator).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .maps import CombinatorialMap, MapError

Letter = tuple[str, int]


class NotCyclicallyReduced(ValueError):
    pass


class NotSymmetricallyClosed(ValueError):
    pass


class UnknownGenerator(ValueError):
    pass


class NotFreelyReduced(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Word:
    letters: tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "Word":
        letters = []
        for ch in text.strip():
            if ch in "1ε":
                continue
            if not ch.isalpha():
                raise ValueError(f"bad letter {ch!r} in {text!r}")
            letters.append((ch.lower(), -1 if ch.isupper() else 1))
        return cls(tuple(letters))

    def __str__(self) -> str:
        return "".join(g if s > 0 else g.upper() for g, s in self.letters) or "1"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.letters[i])
        return self.letters[i]

    def inverse(self) -> "Word":
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def rotate(self, k: int) -> "Word":
        k %= max(len(self.letters), 1)
        return Word(self.letters[k:] + self.letters[:k])

    def generators(self) -> set[str]:
        return {g for g, _ in self.letters}

    def is_freely_reduced(self) -> bool:
        ls = self.letters
        return all(ls[i][0] != ls[i + 1][0] or ls[i][1] != -ls[i + 1][1] for i in range(len(ls) - 1))

    def is_cyclically_reduced(self) -> bool:
        ls = self.letters
        if not self.is_freely_reduced():
            return False
        return len(ls) < 2 or ls[0] != (ls[-1][0], -ls[-1][1])


def inverse_letter(a: Letter) -> Letter:
    return a[0], -a[1]


def free_reduce(W: Word) -> Word:
    out: list[Letter] = []
    for a in W.letters:
        if out and out[-1] == (a[0], -a[1]):
            out.pop()
        else:
            out.append(a)
    return Word(tuple(out))


def symmetric_closure(relators: Iterable[Word]) -> frozenset[Word]:
    out = set()
    for R in relators:
        if not R.is_cyclically_reduced():
            raise NotCyclicallyReduced(f"{R} is not freely and cyclically reduced")
        for V in (R, R.inverse()):
            for k in range(len(V)):
                out.add(V.rotate(k))
    return frozenset(out)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: frozenset[Word] = field(default_factory=frozenset)

    def closed(self) -> "Presentation":
        return Presentation(self.generators, symmetric_closure(self.relators))

    def is_symmetrically_closed(self) -> bool:
        try:
            return symmetric_closure(self.relators) == self.relators
        except NotCyclicallyReduced:
            return False


def _require_closed(P: Presentation) -> None:
    if not P.is_symmetrically_closed():
        raise NotSymmetricallyClosed("relator set is not symmetrically closed")


def pieces(P: Presentation) -> frozenset[Word]:
    """Non-empty common prefixes of two distinct relators."""
    _require_closed(P)
    owners: dict[tuple[Letter, ...], int] = {}
    for R in P.relators:
        for k in range(1, len(R) + 1):
            key = R.letters[:k]
            owners[key] = owners.get(key, 0) + 1
    return frozenset(Word(k) for k, c in owners.items() if c >= 2)


def min_piece_decomposition(R: Word, piece_set: Iterable[Word]) -> int | None:
    """Fewest pieces whose concatenation is ``R``, or None if impossible."""
    ps = {p.letters for p in piece_set}
    if not ps or not R.letters:
        return None
    lengths = sorted({len(p) for p in ps})
    n = len(R)
    best: list[int | None] = [None] * (n + 1)
    best[0] = 0
    for i in range(1, n + 1):
        for L in lengths:
            if L > i:
                break
            prev = best[i - L]
            if prev is not None and R.letters[i - L:i] in ps:
                if best[i] is None or prev + 1 < best[i]:
                    best[i] = prev + 1
    return best[n]


def _joins_reduced(U: Word, V: Word) -> bool:
    if not U.letters or not V.letters:
        return True
    return U.letters[-1] != inverse_letter(V.letters[0])


@dataclass(frozen=True)
class PresentationClass:
    v6: bool
    vprime6: bool
    per_relator: Mapping[Word, str]
    pieces: frozenset[Word]
    min_pieces: Mapping[Word, int | None]
    vacuous_pieces: bool
    vacuous_relators: tuple[Word, ...]

    def as_dict(self) -> dict:
        return {
            "V6": self.v6,
            "Vprime6": self.vprime6,
            "per_relator": {str(R): c for R, c in sorted(self.per_relator.items(), key=_wkey)},
            "min_pieces": {str(R): k for R, k in sorted(self.min_pieces.items(), key=_wkey)},
            "pieces": sorted((str(p) for p in self.pieces), key=lambda s: (len(s), s)),
            "vacuous": {
                "no_pieces": self.vacuous_pieces,
                "no_decomposition": sorted(str(R) for R in self.vacuous_relators),
            },
        }


def _wkey(item):
    s = str(item[0])
    return len(s), s


def classify_presentation(P: Presentation, pairs: str = "all") -> PresentationClass:
    """V(6) / V'(6) classification.

    ``pairs`` sets the quantifier of the triple-product clause: ``"all"``
    ranges over every ordered pair of relators, repeats included;
    ``"distinct"`` only over pairs with R, R', R'' pairwise distinct.
    """
    if pairs not in ("all", "distinct"):
        raise ValueError(f"unknown pair mode {pairs!r}")
    _require_closed(P)
    ps = pieces(P)
    rels = sorted(P.relators)
    per: dict[Word, str] = {}
    mins: dict[Word, int | None] = {}
    vacuous = []
    for R in rels:
        k = min_piece_decomposition(R, ps)
        mins[R] = k
        if k is None:
            vacuous.append(R)
        if (k is None or k >= 4) and _triple_clause(R, rels, pairs):
            per[R] = "clause-1"
        elif k is None or k >= 6:
            per[R] = "clause-2"
        else:
            per[R] = "fail"
    v6 = all(c != "fail" for c in per.values())
    vprime6 = v6 and all(len(p) == 1 for p in ps)
    return PresentationClass(v6, vprime6, per, ps, mins, not ps, tuple(vacuous))


def _triple_clause(R: Word, rels: list[Word], pairs: str) -> bool:
    for R1 in rels:
        for R2 in rels:
            if pairs == "distinct" and len({R, R1, R2}) < 3:
                continue
            if not (_joins_reduced(R, R1) or _joins_reduced(R1, R2) or _joins_reduced(R2, R)):
                return False
    return True


# --- labelled diagrams ---------------------------------------------------------

class DiagramError(MapError):
    pass


class UnlabelledEdge(DiagramError):
    pass


class RegionLabelNotRelator(DiagramError):
    pass


class BoundaryMismatch(DiagramError):
    pass


@dataclass(frozen=True)
class DiagramLabelling:
    """One letter per edge, read along the stored dart; the reversal reads
    the inverse letter."""

    labels: Mapping[int, Letter]

    @classmethod
    def from_text(cls, labels: Mapping[int, str]) -> "DiagramLabelling":
        out = {}
        for d, ch in labels.items():
            (letter,) = Word.parse(ch).letters
            out[d] = letter
        return cls(out)

    def letter(self, M: CombinatorialMap, d: int) -> Letter:
        a = self.labels.get(d)
        if a is not None:
            return a
        a = self.labels.get(M.rev[d])
        if a is None:
            raise UnlabelledEdge(f"edge of dart {d} has no label")
        return inverse_letter(a)

    def read(self, M: CombinatorialMap, darts: Iterable[int]) -> Word:
        return Word(tuple(self.letter(M, d) for d in darts))

    def check(self, M: CombinatorialMap) -> None:
        for e in M.edges():
            has = (e in self.labels) + (M.rev[e] in self.labels)
            if has == 0:
                raise UnlabelledEdge(f"edge {e} has no label")
            if has == 2 and self.labels[M.rev[e]] != inverse_letter(self.labels[e]):
                raise UnlabelledEdge(f"edge {e} carries two inconsistent labels")
        for d in self.labels:
            if not 1 <= d <= M.n_darts:
                raise UnlabelledEdge(f"label on unknown dart {d}")


@dataclass(frozen=True)
class DiagramVerdict:
    valid: bool
    regions: tuple[dict, ...]
    boundary_word: Word
    boundary_match: bool | None
    reduced: bool

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "regions": list(self.regions),
            "boundary_word": str(self.boundary_word),
            "boundary_match": self.boundary_match,
            "reduced": self.reduced,
        }


def _cyclic_words(W: Word) -> set[Word]:
    return {V.rotate(k) for V in (W, W.inverse()) for k in range(max(len(V), 1))}


def diagram_diagnostics(M: CombinatorialMap, L: DiagramLabelling, P: Presentation,
                        boundary_word: Word | None = None) -> DiagramVerdict:
    """Per-region reading of a labelled map; never raises on label mismatch."""
    L.check(M)
    closure = symmetric_closure(P.relators)
    rows = []
    for r in M.regions:
        w = L.read(M, r.boundary)
        rows.append({"region": r.index, "word": str(w), "relator": w in closure})
    outer = L.read(M, M.outer_cycle)
    match = None
    if boundary_word is not None:
        match = boundary_word in _cyclic_words(outer)
    valid = all(row["relator"] for row in rows) and match is not False
    return DiagramVerdict(valid, tuple(rows), outer, match, is_reduced(M, L))


def validate_diagram(M: CombinatorialMap, L: DiagramLabelling, P: Presentation,
                     boundary_word: Word | None = None) -> DiagramVerdict:
    """Check that every region reads a relator of the symmetric closure and,
    if given, that the boundary reads ``boundary_word`` (from some dart, in
    either direction)."""
    v = diagram_diagnostics(M, L, P, boundary_word)
    for row in v.regions:
        if not row["relator"]:
            raise RegionLabelNotRelator(f"region {row['region']} reads {row['word']}")
    if v.boundary_match is False:
        raise BoundaryMismatch(f"boundary reads {v.boundary_word}, not {boundary_word}")
    return v


def is_reduced(M: CombinatorialMap, L: DiagramLabelling) -> bool:
    """No two regions across an edge read the same relator from that edge
    (a cancelling mirror pair)."""
    rev = M.rev
    face_of = M.face_of
    for e in M.edges():
        f1, f2 = face_of[e], face_of[rev[e]]
        if f1 < 0 or f2 < 0 or f1 == f2:
            continue
        b1 = M.regions[f1].boundary
        b2 = M.regions[f2].boundary
        if len(b1) != len(b2):
            continue
        i = b1.index(e)
        w1 = L.read(M, b1[i:] + b1[:i])
        # region f2 read clockwise, starting along e
        j = b2.index(rev[e])
        cw = [rev[x] for x in reversed(b2[j + 1:] + b2[:j + 1])]
        w2 = L.read(M, cw)
        if w1 == w2:
            return False
    return True


def labellings(M: CombinatorialMap, P: Presentation):
    """All labellings of ``M`` under which every region reads a relator."""
    closure = sorted(symmetric_closure(P.relators))
    by_len: dict[int, list[Word]] = {}
    for R in closure:
        by_len.setdefault(len(R), []).append(R)
    order = sorted(M.regions, key=lambda r: -len(r.boundary))
    rev = M.rev
    labels: dict[int, Letter] = {}

    def assign(k: int):
        if k == len(order):
            yield DiagramLabelling(dict(labels))
            return
        darts = order[k].boundary
        for R in by_len.get(len(darts), ()):
            added = []
            ok = True
            for d, a in zip(darts, R.letters):
                key = min(d, rev[d])
                want = a if key == d else inverse_letter(a)
                have = labels.get(key)
                if have is None:
                    labels[key] = want
                    added.append(key)
                elif have != want:
                    ok = False
                    break
            if ok:
                yield from assign(k + 1)
            for key in added:
                del labels[key]

    yield from assign(0)
