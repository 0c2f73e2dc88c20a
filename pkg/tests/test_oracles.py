"""Fast detectors against the slow reference code and the frozen golden files."""

import json
from pathlib import Path

import pytest

from cutcorners import fixtures, oracles
from cutcorners.conditions import Side, c7_witnesses_at, cut_corners_on_path, side_darts, thin_at
from cutcorners.verify import EnumConfig, decomposition_coords, enumerate_maps

GOLDEN = Path(__file__).parent / "golden"


def naming(M):
    region = {r.index: min(r.boundary) for r in M.regions}
    vertex = {v: min(cyc) for v, cyc in enumerate(M.vertices)}
    return region, vertex


def fast_corners(M, pos, x, m, t):
    region, vertex = naming(M)
    out = set()
    for side in (Side.MU, Side.SIGMA):
        for r in cut_corners_on_path(M, side_darts(M, pos, x, m, t, side), side):
            out.add((region[r.region], side.value, r.kind, r.ell, r.r, r.s,
                     None if r.aux_region is None else region[r.aux_region],
                     None if r.corner_vertex is None else vertex[r.corner_vertex]))
    return out


def compare(M):
    raw = oracles.RawMap(M)
    region, _ = naming(M)
    for pos, x, m, t in decomposition_coords(M):
        base = M.outer_cycle[pos]
        _, mu, _, sigma = oracles.decomposition_paths(raw, base, x, m, t)
        assert list(side_darts(M, pos, x, m, t, Side.MU)) == mu
        assert list(side_darts(M, pos, x, m, t, Side.SIGMA)) == sigma
        for reading in ("vertex", "edge"):
            assert thin_at(M, pos, x, m, t, reading) == oracles.thin(raw, base, x, m, t, reading)
        want = oracles.cut_corners(raw, mu, "mu-side") | oracles.cut_corners(raw, sigma, "sigma-side")
        assert fast_corners(M, pos, x, m, t) == want
        assert {region[w] for w in c7_witnesses_at(M, mu, sigma)} == oracles.c7_witnesses(raw, mu, sigma)


@pytest.mark.parametrize("name", ["SQ1", "LAD2", "LAD3", "GRID4"])
def test_fixtures_match_oracle(name):
    compare(fixtures.all_fixtures()[name].map)


def test_small_maps_match_oracle():
    n = 0
    for M in enumerate_maps(EnumConfig(3, (3, 6))):
        compare(M)
        n += 1
    assert n > 100


@pytest.mark.parametrize("name", ["SQ1", "LAD2", "LAD3", "GRID4"])
def test_golden(name):
    M = fixtures.all_fixtures()[name].map
    data = json.loads((GOLDEN / f"{name.lower()}.json").read_text())
    coords = {(M.outer_cycle[pos], x, m, t): (pos, x, m, t) for pos, x, m, t in decomposition_coords(M)}
    assert len(data["decompositions"]) == len(coords)
    for row in data["decompositions"]:
        pos, x, m, t = coords[row["base"], row["xi"], row["mu"], row["tau"]]
        assert thin_at(M, pos, x, m, t, "vertex") == row["thin"]
        assert thin_at(M, pos, x, m, t, "edge") == row["thin_edge"]
        assert fast_corners(M, pos, x, m, t) == {tuple(c) for c in row["cut_corners"]}
