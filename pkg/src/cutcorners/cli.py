"""Command line interface.

Every subcommand prints a JSON report on standard output.  Exit status is 0
when the check passes, 1 when a condition fails or a counterexample is
found, and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path

from . import fixtures
from .conditions import (
    Side,
    classify_map,
    find_cut_corners,
    find_thick_configurations,
    is_thin,
)
from .io import dumps, export_dot, parse_map, parse_presentation, serialize_map
from .maps import MapError, decompose
from .presentations import Word, classify_presentation, diagram_diagnostics
from .verify import (
    READINGS,
    THEOREM_CLASS,
    VERIFIERS,
    ConfigInvalid,
    EnumConfig,
    NotInClass,
    _shell,
    run_campaign,
    verify_c4t4_corollary,
    verify_c7_corollary,
    verify_main_theorem,
)

log = logging.getLogger("cutcorners")

OK, FAIL, INPUT_ERROR = 0, 1, 2
SINGLE = {"main": verify_main_theorem, "c7": verify_c7_corollary, "c4t4": verify_c4t4_corollary}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def load_map(source: str):
    """A map document path, ``-`` for stdin, or ``fixture:NAME``."""
    if source.startswith("fixture:"):
        name = source.split(":", 1)[1].upper()
        table = fixtures.all_fixtures()
        if name not in table:
            raise UsageError(f"unknown fixture {name!r}; known: {', '.join(sorted(table))}")
        return table[name].map, None
    return parse_map(_read(source))


def _decomposition(M, args):
    if args.base is None:
        raise UsageError("a decomposition needs --base")
    return decompose(M, args.base, args.xi, args.mu, args.tau)


def _add_decomposition(p, required=True):
    p.add_argument("--base", type=int, required=required, help="outer dart where xi starts")
    p.add_argument("--xi", type=int, default=0, choices=(0, 1))
    p.add_argument("--mu", type=int, default=0, help="length of mu")
    p.add_argument("--tau", type=int, default=0, choices=(0, 1))


def _add_enum(p):
    p.add_argument("--max-regions", type=int, default=1)
    p.add_argument("--gon", type=int, help="shorthand for --min-edges N --max-edges N")
    p.add_argument("--min-edges", type=int, default=4)
    p.add_argument("--max-edges", type=int, default=4)
    p.add_argument("--max-boundary", type=int, default=16)
    p.add_argument("--no-dedup", action="store_true")
    p.add_argument("--reading", choices=READINGS, default="vertex", help="thinness reading")


def _enum_config(args, class_filter="none") -> EnumConfig:
    lo, hi = (args.gon, args.gon) if args.gon else (args.min_edges, args.max_edges)
    return EnumConfig(args.max_regions, (lo, hi), args.max_boundary, class_filter,
                      not args.no_dedup, args.reading).validate()


# --- subcommands -------------------------------------------------------------------

def cmd_check_map(args):
    M, L = load_map(args.map)
    out = {
        "vertices": M.n_vertices, "edges": M.n_edges, "regions": M.n_regions,
        "boundary_length": M.boundary_length, "outer_cycle": list(M.outer_cycle),
        "labelled": L is not None,
    }
    print(dumps(out), end="")
    return OK


def cmd_classify_map(args):
    M, _ = load_map(args.map)
    mc = classify_map(M)
    out = mc.as_dict()
    out["regions"] = [
        {"region": p.region, "edges": p.edge_count, "neighbors": sorted(p.neighbors),
         "inner": p.is_inner, "proper_boundary": p.is_proper_boundary}
        for p in M.profiles()
    ]
    print(dumps(out), end="")
    if args.require and not mc.member(args.require):
        return FAIL
    return OK


def cmd_classify_pres(args):
    P = parse_presentation(_read(args.pres), symmetrize=True)
    pc = classify_presentation(P, pairs=args.pairs)
    print(dumps(pc.as_dict()), end="")
    return OK if pc.v6 else FAIL


def _sides(arg):
    return [Side.MU, Side.SIGMA] if arg == "both" else [Side.parse(arg)]


def cmd_cut_corners(args):
    M, _ = load_map(args.map)
    d = _decomposition(M, args)
    reports = [r for side in _sides(args.side) for r in find_cut_corners(M, d, side)]
    out = {"thin": is_thin(M, d, args.reading), "cut_corners": [r.as_dict() for r in reports]}
    print(dumps(out), end="")
    return OK if reports else FAIL


def cmd_thick_configs(args):
    M, _ = load_map(args.map)
    d = _decomposition(M, args)
    found = []
    for side in _sides(args.side):
        path = d.mu if side is Side.MU else d.sigma
        found += [{"side": side.value, **c.as_dict()} for c in find_thick_configurations(M, path)]
    print(dumps({"thin": is_thin(M, d, args.reading), "thick_configurations": found}), end="")
    return OK if found else FAIL


def cmd_validate_diagram(args):
    M, L = load_map(args.map)
    if L is None:
        raise UsageError("the map document carries no labels")
    P = parse_presentation(_read(args.pres), symmetrize=True)
    bw = Word.parse(args.boundary) if args.boundary else None
    v = diagram_diagnostics(M, L, P, bw)
    print(dumps(v.as_dict()), end="")
    return OK if v.valid else FAIL


def cmd_verify(args):
    if args.map:
        M, _ = load_map(args.map)
        v = SINGLE[args.theorem](M, _decomposition(M, args), args.reading)
        print(dumps(v.as_dict()), end="")
        return FAIL if v.status == "counterexample" else OK
    cfg = _enum_config(args, THEOREM_CLASS[args.theorem])
    report = run_campaign(cfg, args.theorem, audit=args.audit)
    print(dumps(report.as_dict()), end="")
    if args.out_dir:
        write_report_files(report, Path(args.out_dir))
    bad = report.counterexamples or (args.audit and report.audit.get("violations"))
    return FAIL if bad else OK


def write_report_files(report, out: Path) -> None:
    """``report.json``, ``verdicts.tsv`` and ``verdicts.png`` under ``out``."""
    from .plotting import plot_verdicts

    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(dumps(report.as_dict()))
    with open(out / "verdicts.tsv", "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["boundary_length", "pass", "vacuous_thin", "counterexample"])
        for n, row in sorted(report.by_boundary_length.items()):
            w.writerow([n, row["pass"], row["vacuous_thin"], row["counterexample"]])
    plot_verdicts(report, out / "verdicts.png")
    log.info("wrote report files to %s", out)


def cmd_enumerate(args):
    cfg = _enum_config(args, args.class_filter)
    docs = []
    counts: dict[int, int] = {}
    for M, ok in _shell(cfg):
        if ok:
            counts[M.n_regions] = counts.get(M.n_regions, 0) + 1
            docs.append(serialize_map(M))
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, doc in enumerate(docs):
            (out / f"map{i:05d}.kmap").write_text(doc)
    out = {"maps": len(docs), "by_regions": {str(k): v for k, v in sorted(counts.items())}}
    if args.emit:
        out["documents"] = docs
    print(dumps(out), end="")
    return OK


def cmd_export_dot(args):
    M, L = load_map(args.map)
    highlight = set(args.highlight or ())
    if args.base is not None:
        d = _decomposition(M, args)
        for side in (Side.MU, Side.SIGMA):
            highlight |= {r.region for r in find_cut_corners(M, d, side)}
    sys.stdout.write(export_dot(M, sorted(highlight), L))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cutcorners", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check-map", help="parse and validate a map document")
    s.add_argument("map")
    s.set_defaults(func=cmd_check_map)

    s = sub.add_parser("classify-map", help="V(6) family membership")
    s.add_argument("map")
    s.add_argument("--require", choices=("v6", "proper_v6", "proper_c7", "proper_c4t4"))
    s.set_defaults(func=cmd_classify_map)

    s = sub.add_parser("classify-pres", help="pieces and V(6)/V'(6) classification")
    s.add_argument("pres")
    s.add_argument("--pairs", choices=("all", "distinct"), default="all")
    s.set_defaults(func=cmd_classify_pres)

    for name, func, hlp in (("cut-corners", cmd_cut_corners, "cut corners along mu and sigma"),
                            ("thick-configs", cmd_thick_configs, "thick configurations along mu and sigma")):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("map")
        _add_decomposition(s)
        s.add_argument("--side", choices=("mu", "sigma", "both"), default="both")
        s.add_argument("--reading", choices=READINGS, default="vertex")
        s.set_defaults(func=func)

    s = sub.add_parser("validate-diagram", help="check a labelled map against a presentation")
    s.add_argument("map")
    s.add_argument("pres")
    s.add_argument("--boundary", help="expected boundary word")
    s.set_defaults(func=cmd_validate_diagram)

    s = sub.add_parser("verify", help="run a theorem verifier on one instance or a campaign")
    s.add_argument("map", nargs="?", help="verify a single map instead of a campaign")
    s.add_argument("--theorem", choices=sorted(VERIFIERS), default="main")
    _add_enum(s)
    _add_decomposition(s, required=False)
    s.add_argument("--audit", action="store_true", help="check side properties as well")
    s.add_argument("--out-dir", help="also write report.json, verdicts.tsv and verdicts.png")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", help="list shellable maps")
    _add_enum(s)
    s.add_argument("--class", dest="class_filter", default="none",
                   choices=("none", "proper_v6", "proper_c7", "proper_c4t4"))
    s.add_argument("--emit", action="store_true", help="include map documents in the report")
    s.add_argument("--out-dir", help="write one .kmap file per map")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("export-dot", help="Graphviz text for a map")
    s.add_argument("map")
    s.add_argument("--highlight", type=int, nargs="*", help="region indices to fill")
    _add_decomposition(s, required=False)
    s.set_defaults(func=cmd_export_dot)
    return p


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"cutcorners: {exc}", file=sys.stderr)
        return INPUT_ERROR
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, MapError, ConfigInvalid, NotInClass, ValueError, OSError) as exc:
        print(f"cutcorners: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INPUT_ERROR


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
