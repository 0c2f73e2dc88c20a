import pytest
from conftest import north_east

from cutcorners.conditions import (
    PathNotOnBoundary,
    Side,
    c7_witnesses,
    classify_map,
    find_cut_corners,
    find_thick_configurations,
    is_thin,
    side_paths,
    thin_at,
)
from cutcorners.maps import decompose
from cutcorners.verify import decomposition_coords, enumerate_decompositions, enumerate_maps, EnumConfig


def lad2_left_t1(f):
    """mu = the left square's three outer edges, sigma = the right square's."""
    mu = f.path((1, 0), (0, 0), (0, 1), (1, 1))
    return decompose(f.map, mu[0], 0, 3, 0)


# --- thinness ---------------------------------------------------------------------

def test_sq1_thin(sq1):
    north = sq1.path((0, 0), (0, 1), (1, 1))
    d = decompose(sq1.map, north[0], 0, 2, 0)
    assert is_thin(sq1.map, d)
    assert is_thin(sq1.map, d, reading="edge")


def test_lad2_ladder_thin(lad2):
    f = lad2
    west = f.dart((0, 0), (0, 1))
    d = decompose(f.map, west, 1, 2, 1)
    assert d.mu == f.path((0, 1), (1, 1), (2, 1))
    assert d.tau == f.path((2, 0), (2, 1))
    assert is_thin(f.map, d)
    assert is_thin(f.map, d, reading="edge")


def test_grid4_non_thin_in_edge_reading(grid4):
    M = grid4.map
    assert not any(is_thin(M, d, reading="edge") for d in enumerate_decompositions(M))


def test_grid4_vertex_reading_thin_cases(grid4):
    # xi mu runs from one side's midpoint to the opposite midpoint
    M = grid4.map
    thin = [c for c in decomposition_coords(M) if thin_at(M, *c)]
    assert len(thin) == 16
    mids = {grid4.vertices[p] for p in ((1, 0), (0, 1), (1, 2), (2, 1))}
    for pos, x, m, t in thin:
        assert x + m == 4
        assert M.tail(M.outer_cycle[pos]) in mids


def test_lad2_short_side(lad2):
    # mu is one corner edge of the left square: the right square meets xi mu
    # only at a vertex
    f = lad2
    mu = f.dart((1, 0), (0, 0))
    d = decompose(f.map, mu, 0, 1, 1)
    assert is_thin(f.map, d)
    assert not is_thin(f.map, d, reading="edge")


def test_single_region_always_thin(sq1):
    M = sq1.map
    assert all(is_thin(M, d) for d in enumerate_decompositions(M))
    assert all(is_thin(M, d, reading="edge") for d in enumerate_decompositions(M))


def test_three_neighbors_not_thin(tri_wheel):
    M = tri_wheel.map
    assert not any(is_thin(M, d) for d in enumerate_decompositions(M))


def test_unknown_reading(sq1):
    d = enumerate_decompositions(sq1.map)[0]
    with pytest.raises(ValueError):
        is_thin(sq1.map, d, reading="face")


def test_side_paths(lad2):
    d = lad2_left_t1(lad2)
    a, b = side_paths(lad2.map, d)
    assert a == d.mu and b == d.sigma


def _swap(M, pos, x, m, t):
    """(tau^-1, sigma^-1, xi^-1, mu^-1): the same cycle read from the end vertex of mu."""
    n = M.boundary_length
    return (pos + x + m) % n, t, n - x - m - t, x


@pytest.mark.parametrize("reading", ["vertex", "edge"])
def test_thin_swap_invariance(reading):
    for M in enumerate_maps(EnumConfig(3, (4, 5))):
        for c in decomposition_coords(M):
            assert thin_at(M, *c, reading) == thin_at(M, *_swap(M, *c), reading)


@pytest.mark.parametrize("reading", ["vertex", "edge"])
def test_thin_mirror_invariance(reading):
    # in the mirror map the boundary runs the other way; mu and sigma trade places
    for M in enumerate_maps(EnumConfig(3, (4, 5))):
        W = M.mirror()
        n = M.boundary_length
        where = {d: i for i, d in enumerate(W.outer_cycle)}
        for pos, x, m, t in decomposition_coords(M):
            wpos = where[M.rev[M.outer_cycle[(pos - 1) % n]]]
            if x == t == 0:
                assert thin_at(M, pos, 0, m, 0, reading) == thin_at(W, wpos, 0, n - m, 0, reading)
            if reading == "vertex":
                # sides sigma tau and xi mu keep their vertex and edge sets
                assert thin_at(M, pos, x, m, t) == thin_at(W, wpos, 0, n - x - m, 0)


# --- classification ------------------------------------------------------------------

def test_classify_grid4(grid4):
    mc = classify_map(grid4.map)
    assert (mc.is_v6, mc.is_proper_v6, mc.is_proper_c7, mc.is_proper_c4t4) == (True, True, False, True)


def test_classify_sq1(sq1):
    mc = classify_map(sq1.map)
    assert (mc.is_v6, mc.is_proper_v6, mc.is_proper_c7, mc.is_proper_c4t4) == (True, True, False, True)


def test_classify_tri_wheel(tri_wheel):
    assert not classify_map(tri_wheel.map).is_v6


def test_class_monotonicity():
    for M in enumerate_maps(EnumConfig(3, (4, 7))):
        mc = classify_map(M)
        if mc.is_proper_c7 or mc.is_proper_c4t4:
            assert mc.is_proper_v6


def test_member_names(grid4):
    mc = classify_map(grid4.map)
    assert mc.member("none") and mc.member("proper_c4t4") and not mc.member("proper_c7")


# --- cut corners ---------------------------------------------------------------------

def test_lad2_t1(lad2):
    d = lad2_left_t1(lad2)
    reps = find_cut_corners(lad2.map, d, "mu")
    assert [(r.region, r.kind, r.r, r.s, r.ell) for r in reps] == [(lad2.regions["left"], "T1", 3, 1, 1)]
    assert reps[0].side is Side.MU


def test_grid4_t2_ne(grid4):
    d = north_east(grid4)
    reps = find_cut_corners(grid4.map, d, Side.MU)
    assert len(reps) == 1
    r = reps[0]
    assert (r.region, r.kind, r.ell, r.r, r.s) == (grid4.regions["NE"], "T2", 2, 2, 2)
    assert r.corner_vertex == grid4.vertices[(1, 2)]
    assert grid4.map.valence(r.corner_vertex) == 3


def test_grid4_t2_sigma_mirror(grid4):
    d = north_east(grid4)
    reps = find_cut_corners(grid4.map, d, "sigma")
    assert [(r.region, r.kind, r.ell) for r in reps] == [(grid4.regions["SW"], "T2", 2)]


def test_sq1_no_cut_corners(sq1):
    for d in enumerate_decompositions(sq1.map):
        assert find_cut_corners(sq1.map, d, "mu") == []
        assert find_cut_corners(sq1.map, d, "sigma") == []


def test_report_invariants():
    for M in enumerate_maps(EnumConfig(3, (4, 6))):
        for d in enumerate_decompositions(M)[::7]:
            for side in Side:
                for r in find_cut_corners(M, d, side):
                    if r.kind == "T1":
                        assert r.s < r.r
                    elif r.kind == "T2":
                        assert r.s == r.r == 2 and r.ell > 1
                    elif r.kind == "T3":
                        assert r.s == r.r == 3 and r.ell > 1
                        assert r.aux_region is not None and M.profile(r.aux_region).edge_count <= 5
                    else:
                        assert r.s == r.r == 3 and r.ell > 2 and r.aux_region is not None


def test_side_parse():
    assert Side.parse("alpha") is Side.MU and Side.parse("beta") is Side.SIGMA
    with pytest.raises(ValueError):
        Side.parse("left")


# --- c7 witnesses ------------------------------------------------------------------

def test_c7_lad2(lad2):
    assert c7_witnesses(lad2.map, lad2_left_t1(lad2)) == sorted(lad2.regions[k] for k in ("left", "right"))


def test_c7_grid4(grid4):
    # NE lies in mu, SW in sigma; both have two neighbors
    w = c7_witnesses(grid4.map, north_east(grid4))
    assert w == sorted([grid4.regions["NE"], grid4.regions["SW"]])


def test_c7_sq1(sq1):
    assert all(c7_witnesses(sq1.map, d) == [] for d in enumerate_decompositions(sq1.map))


# --- thick configurations -------------------------------------------------------------

def test_thick_lad2(lad2):
    f = lad2
    alpha = f.path((1, 0), (0, 0), (0, 1), (1, 1))
    reps = find_thick_configurations(f.map, alpha)
    assert len(reps) == 1
    r = reps[0]
    assert (r.kind, r.regions, len(r.mu), len(r.sigma)) == ("single-region", (f.regions["left"],), 3, 1)
    assert r.sigma == (f.dart((1, 0), (1, 1)),)


def test_thick_grid4(grid4):
    f = grid4
    alpha = f.path((0, 2), (1, 2), (2, 2), (2, 1), (2, 0))
    reps = find_thick_configurations(f.map, alpha)
    assert len(reps) == 1
    r = reps[0]
    assert r.kind == "two-region"
    assert r.regions == (f.regions["NW"], f.regions["NE"])
    assert r.leading_edge == f.dart((0, 2), (1, 2))
    assert r.mu == f.path((1, 2), (2, 2), (2, 1))
    assert all(not f.map.is_boundary_edge(e) for e in r.sigma)


def test_thick_sq1(sq1):
    alpha = sq1.path((0, 0), (0, 1), (1, 1))
    assert find_thick_configurations(sq1.map, alpha) == []


def test_thick_path_checks(grid4):
    f = grid4
    with pytest.raises(PathNotOnBoundary):
        find_thick_configurations(f.map, [f.dart((1, 0), (1, 1))])
    with pytest.raises(PathNotOnBoundary):
        find_thick_configurations(f.map, [f.dart((0, 2), (1, 2)), f.dart((2, 1), (2, 0))])
