import pytest

from cutcorners.fixtures import from_plane_graph
from cutcorners.maps import (
    BadOuterDart,
    BasepointNotOnBoundary,
    InvalidDecomposition,
    NotConnected,
    NotInvolution,
    NotPermutation,
    NotPlanar,
    UnknownRegion,
    UnknownVertex,
    boundary_cycle,
    build_map,
    decompose,
    locate,
    region_profile,
    vertex_profile,
)

SQ1_ROT = [(1, 8), (3, 2), (5, 4), (7, 6)]
SQ1_PAIRS = [(1, 2), (3, 4), (5, 6), (7, 8)]


def test_sq1_raw():
    M = build_map(8, SQ1_PAIRS, SQ1_ROT, 2)
    assert (M.n_vertices, M.n_edges, M.n_regions) == (4, 4, 1)
    assert M.n_vertices - M.n_edges + M.n_regions == 1
    assert M.boundary_length == 4


def test_grid4_counts(grid4):
    M = grid4.map
    assert (M.n_vertices, M.n_edges, M.n_regions) == (9, 12, 4)
    assert M.boundary_length == 8


def test_missing_reversal_pair():
    with pytest.raises(NotInvolution):
        build_map(8, SQ1_PAIRS[:-1], SQ1_ROT, 2)


def test_self_paired_dart():
    with pytest.raises(NotInvolution):
        build_map(2, [(1, 1)], [(1, 2)], 1)


def test_dart_at_two_vertices():
    with pytest.raises(NotPermutation):
        build_map(8, SQ1_PAIRS, [(1, 8), (3, 2), (5, 4), (7, 6, 1)], 2)


def test_disconnected():
    rot = SQ1_ROT + [(9, 16), (11, 10), (13, 12), (15, 14)]
    pairs = SQ1_PAIRS + [(9, 10), (11, 12), (13, 14), (15, 16)]
    with pytest.raises(NotConnected):
        build_map(16, pairs, rot, 2)


def test_torus_rejected():
    # one vertex, two loops with interleaved rotation: a torus
    with pytest.raises(NotPlanar):
        build_map(4, [(1, 2), (3, 4)], [(1, 3, 2, 4)], 1)


def test_bad_outer_dart():
    with pytest.raises(BadOuterDart):
        build_map(8, SQ1_PAIRS, SQ1_ROT, 9)


def test_valence_one_and_two_allowed():
    # a square with a pendant edge hanging into the outer face
    f = from_plane_graph("flag", [((0, 0), (1, 0)), ((1, 0), (1, 1)), ((1, 1), (0, 1)),
                                  ((0, 1), (0, 0)), ((1, 1), (2, 2))])
    M = f.map
    assert sorted(M.valence(v) for v in range(M.n_vertices)) == [1, 2, 2, 2, 3]
    # the pendant edge is traversed twice by the boundary cycle
    assert M.boundary_length == 6


@pytest.mark.parametrize("name,length", [("sq1", 4), ("grid4", 8), ("lad2", 6), ("lad3", 8)])
def test_boundary_cycle_lengths(name, length, request):
    M = request.getfixturevalue(name).map
    for d in M.outer_cycle:
        c = boundary_cycle(M, d)
        assert len(c) == length
        i = M.outer_cycle.index(d)
        assert c == M.outer_cycle[i:] + M.outer_cycle[:i]


def test_lad2_shared_edge_not_on_boundary(lad2):
    M = lad2.map
    shared = lad2.dart((1, 0), (1, 1))
    c = boundary_cycle(M, M.outer_cycle[0])
    assert shared not in c and M.rev[shared] not in c


def test_boundary_cycle_bad_basepoint(grid4):
    inner = grid4.dart((1, 0), (1, 1))
    with pytest.raises(BasepointNotOnBoundary):
        boundary_cycle(grid4.map, inner)


def test_boundary_cycle_is_clockwise(sq1):
    f = sq1
    c = boundary_cycle(f.map, f.dart((0, 0), (0, 1)))
    assert c == f.path((0, 0), (0, 1), (1, 1), (1, 0), (0, 0))


def test_profile_grid4_ne(grid4):
    M = grid4.map
    r = grid4.regions
    p = region_profile(M, r["NE"])
    assert p.edge_count == 4
    assert p.neighbors == {r["NW"], r["SE"]}
    assert (p.r, p.s) == (2, 2)
    assert len(p.inner_boundary) == 2
    assert p.is_proper_boundary and not p.is_inner


def test_profile_sq1(sq1):
    p = region_profile(sq1.map, sq1.regions["D"])
    assert p.neighbors == frozenset()
    assert p.r == 4 and p.inner_boundary == ()
    assert not p.is_proper_boundary


def test_profile_lad3_middle(lad3):
    p = region_profile(lad3.map, lad3.regions["middle"])
    assert len(p.outer_boundary) == 2
    assert all(len(run) == 1 for run in p.outer_boundary)
    assert not p.is_proper_boundary


def test_profile_lad3_ends_are_proper(lad3):
    for name in ("left", "right"):
        assert region_profile(lad3.map, lad3.regions[name]).is_proper_boundary


def test_removal_all_switch(lad2):
    # dropping all of the left square's edges leaves the right square's outer path
    p = region_profile(lad2.map, lad2.regions["left"], removal="all")
    assert p.is_proper_boundary
    with pytest.raises(ValueError):
        region_profile(lad2.map, 0, removal="some")


def test_tri_wheel_center(tri_wheel):
    p = region_profile(tri_wheel.map, tri_wheel.regions["T"])
    assert p.is_inner and len(p.neighbors) == 3
    assert not p.is_proper_boundary and p.outer_edges == frozenset()


def test_unknown_region(sq1):
    with pytest.raises(UnknownRegion):
        region_profile(sq1.map, 5)


def test_vertex_profiles(grid4, sq1):
    g = grid4
    center = vertex_profile(g.map, g.vertices[(1, 1)])
    assert (center.valence, center.is_inner) == (4, True)
    north = vertex_profile(g.map, g.vertices[(1, 2)])
    assert (north.valence, north.is_inner) == (3, False)
    for v in range(sq1.map.n_vertices):
        p = vertex_profile(sq1.map, v)
        assert (p.valence, p.is_inner) == (2, False)
    with pytest.raises(UnknownVertex):
        vertex_profile(sq1.map, 4)


def test_decompose_and_locate(grid4):
    M = grid4.map
    base = M.outer_cycle[3]
    d = decompose(M, base, 1, 3, 1)
    assert d.lengths == (1, 3, 1, 3)
    assert locate(M, d) == (3, 1, 3, 1)
    rev = M.rev
    word = d.xi + d.mu + tuple(rev[e] for e in reversed(d.tau)) + tuple(rev[e] for e in reversed(d.sigma))
    assert word == boundary_cycle(M, base)


def test_decompose_rejects_long_xi(grid4):
    with pytest.raises(InvalidDecomposition):
        decompose(grid4.map, grid4.map.outer_cycle[0], 2, 1, 0)
    with pytest.raises(InvalidDecomposition):
        decompose(grid4.map, grid4.map.outer_cycle[0], 1, 8, 0)


def test_mirror_is_a_map(grid4):
    M = grid4.map
    W = M.mirror()
    assert (W.n_vertices, W.n_edges, W.n_regions, W.boundary_length) == (9, 12, 4, 8)
    assert W.mirror() == M


def test_equality_and_hash(sq1):
    M = sq1.map
    N = build_map(M.n_darts, {d: M.rev[d] for d in range(1, M.n_darts + 1)}, M.vertices, M.outer_dart)
    assert M == N and hash(M) == hash(N)
