import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minoruniv import corpus
from minoruniv.planar import (
    ChainGraph,
    Disconnected,
    FaceCycle,
    Infeasible,
    InvalidRotation,
    MissingEdge,
    NonPlanar,
    PathSet,
    PlaneGraph,
    all_darts,
    articulation_points,
    build_embedding,
    disjoint_paths,
    edge_key,
    euler_ok,
    faces,
    from_json,
    insert_path_in_face,
    internally_disjoint_paths,
    is_subcubic,
    is_two_connected,
    local_connectivity,
    subdivide_edge,
)


def face_lengths(g):
    return sorted(len(f) for f in faces(g))


def check_paths(adj, res, sources, sinks, forbidden=()):
    seen = set()
    for p in res.paths:
        assert p[0] in sources and p[-1] in sinks
        for x, y in zip(p, p[1:]):
            assert y in adj[x]
        assert not set(p) & set(forbidden)
        assert not set(p) & seen
        seen |= set(p)


# embeddings and faces


def test_triangle_faces():
    g = corpus.cycle(3)
    assert (g.num_vertices(), g.num_edges(), len(faces(g))) == (3, 3, 2)
    assert face_lengths(g) == [3, 3]


def test_k4_faces():
    g = corpus.k4()
    assert face_lengths(g) == [3, 3, 3, 3]
    assert g.num_vertices() - g.num_edges() + len(faces(g)) == 2


def test_cube_faces():
    assert face_lengths(corpus.cube()) == [4] * 6


def test_k5_nonplanar():
    with pytest.raises(NonPlanar):
        corpus.complete(5)


def test_bad_rotation_rejected():
    # K4 with one rotation reversed is a torus embedding
    good = corpus.k4().rotation
    bad = {v: list(ns) for v, ns in good.items()}
    bad[0] = list(reversed(bad[0]))
    bad[1] = [bad[1][1], bad[1][0], bad[1][2]]
    with pytest.raises(InvalidRotation):
        build_embedding(range(4), corpus.k4().edges(), bad)


def test_rotation_must_list_neighbours():
    with pytest.raises(InvalidRotation):
        build_embedding([0, 1, 2], [(0, 1), (1, 2), (0, 2)], {0: [1], 1: [0, 2], 2: [0, 1]})


def test_disconnected_faces():
    g = build_embedding(range(4), [(0, 1), (2, 3)])
    with pytest.raises(Disconnected):
        faces(g)
    assert euler_ok(g)


def test_json_roundtrip():
    g = corpus.prism()
    assert from_json(g.to_json()) == g


def test_faces_partition_darts():
    g = corpus.truncated_tetrahedron()
    darts = [d for f in faces(g) for d in f.darts]
    assert sorted(darts) == sorted(all_darts(g))


def test_canonical_rotation():
    f = FaceCycle(((2, 0), (0, 1), (1, 2)))
    assert f.canonical() == (0, 1, 2)


# edits


def test_subdivide_zero_is_identity():
    g = corpus.cycle(3)
    assert subdivide_edge(g, (0, 1), 0) == g


def test_subdivide_triangle_gives_c4():
    g = subdivide_edge(corpus.cycle(3), (0, 1), 1)
    assert g.num_vertices() == 4 and face_lengths(g) == [4, 4]


def test_subdivide_k4_counts():
    g = subdivide_edge(corpus.k4(), (0, 1), 2)
    assert (g.num_vertices(), g.num_edges(), len(faces(g))) == (6, 8, 4)
    assert euler_ok(g)


def test_subdivide_missing_edge():
    with pytest.raises(MissingEdge):
        subdivide_edge(corpus.cycle(4), (0, 2), 1)


def test_insert_path_splits_face():
    g = corpus.cycle(4)
    fc = faces(g)[0]
    (a, u), (b, w) = fc.darts[0], fc.darts[2]
    h = insert_path_in_face(g, (a, u), (b, w), [9])
    assert euler_ok(h)
    assert len(faces(h)) == 3


# connectivity predicates


def test_predicates():
    assert is_two_connected(corpus.cycle(3)) and is_subcubic(corpus.cycle(3))
    assert not is_two_connected(corpus.path(3))
    assert is_subcubic(corpus.k4())
    assert not is_subcubic(build_embedding(range(5), [(0, i) for i in range(1, 5)]))


def test_articulation_points_match_networkx():
    for g in [corpus.path(5), corpus.star(4), *corpus.trees(6)]:
        nxg = nx.Graph(list(g.edges()))
        assert articulation_points(g.rotation) == set(nx.articulation_points(nxg))


# flows


def test_c4_two_arcs():
    res = disjoint_paths(corpus.cycle(4), [0], [2], 2)
    assert isinstance(res, PathSet)
    assert sorted(res.paths) == [(0, 1, 2), (0, 3, 2)]


def test_k4_forbidden_vertex_infeasible():
    g = corpus.k4()
    res = disjoint_paths(g, [1], [2, 3], 3, forbidden=[0])
    assert isinstance(res, Infeasible)
    assert len(res.cut) < 3


def _grid_paths(rows, cols, s, t):
    """Every simple path from s to t in the grid, by depth-first search."""
    g = corpus.grid(rows, cols)
    out = []

    def dfs(path):
        x = path[-1]
        if x == t:
            out.append(tuple(path))
            return
        for y in g.rotation[x]:
            if y not in path:
                path.append(y)
                dfs(path)
                path.pop()

    dfs([s])
    return out


def test_grid_three_rows_brute_force_agrees():
    # terminals: rows 0, 2, 4 on the left and right edges of the 5x5 grid
    left = [0, 10, 20]
    right = [4, 14, 24]
    # brute force: is there a triple of disjoint short paths pairing them up?
    cands = {(s, t): [p for p in _grid_paths(5, 5, s, t) if len(p) <= 7] for s in left for t in right}
    found = False
    for perm in itertools.permutations(right):
        for combo in itertools.product(*(cands[(s, t)] for s, t in zip(left, perm))):
            if len(set().union(*map(set, combo))) == sum(map(len, combo)):
                found = True
                break
        if found:
            break
    assert found
    res = disjoint_paths(corpus.grid(5, 5), left, right, 3)
    assert isinstance(res, PathSet) and len(res) == 3
    check_paths(corpus.grid(5, 5).rotation, res, left, right)


def test_cut_size_bounds_found():
    g = corpus.grid(3, 3)
    res = disjoint_paths(g, [0, 3, 6], [2, 5, 8], 3, forbidden=[4, 1])
    assert isinstance(res, Infeasible)
    assert res.found == 1 and res.cut == frozenset({6})


def test_sources_sinks_must_differ():
    with pytest.raises(ValueError):
        disjoint_paths(corpus.cycle(4), [0], [0], 1)


def test_internally_disjoint_with_edge():
    res = internally_disjoint_paths(corpus.k4(), 1, 2, 3)
    assert isinstance(res, PathSet) and (1, 2) in res.paths
    assert local_connectivity(corpus.k4(), 0, 1) == 3


def test_chain_graph_grows():
    # a long cycle collapses to two runs; adding a chord splits one of them
    c = corpus.cycle(10)
    cg = ChainGraph(c.rotation, keep=[0, 5])
    assert len(cg.out) == 4
    cg.add({100: [2, 8]})
    # kept 0, 5; branch points 2, 8; runs 1 | 3-4 | 6-7 | 9 | 100
    assert len(cg.out) == 9
    res = cg.disjoint_paths([0], [5], 1)
    assert isinstance(res, PathSet)
    assert res.paths[0] in ((0, 1, 2, 3, 4, 5), (0, 9, 8, 7, 6, 5))


@st.composite
def grid_subgraphs(draw):
    rows = draw(st.integers(2, 5))
    cols = draw(st.integers(2, 5))
    edges = corpus.grid(rows, cols).edges()
    keep = draw(st.lists(st.sampled_from(edges), min_size=1, unique=True))
    verts = sorted({v for e in keep for v in e})
    return verts, keep


@settings(max_examples=60, deadline=None)
@given(grid_subgraphs())
def test_euler_holds_on_random_plane_graphs(data):
    verts, edges = data
    g = build_embedding(verts, edges)
    assert euler_ok(g)


@settings(max_examples=60, deadline=None)
@given(grid_subgraphs(), st.integers(0, 3), st.data())
def test_flow_value_matches_networkx(data, k_extra, draw):
    verts, edges = data
    g = build_embedding(verts, edges)
    srcs = draw.draw(st.lists(st.sampled_from(verts), min_size=1, max_size=3, unique=True))
    rest = [v for v in verts if v not in srcs]
    if not rest:
        return
    snks = draw.draw(st.lists(st.sampled_from(rest), min_size=1, max_size=3, unique=True))
    if len(srcs) == 1 and len(snks) == 1:
        return
    k = min(len(srcs), len(snks)) + k_extra
    res = disjoint_paths(g, srcs, snks, k)
    # oracle: split-vertex max flow in networkx
    d = nx.DiGraph()
    for v in verts:
        d.add_edge((v, "i"), (v, "o"), capacity=1)
    for u, v in edges:
        d.add_edge((u, "o"), (v, "i"), capacity=1)
        d.add_edge((v, "o"), (u, "i"), capacity=1)
    for s in srcs:
        d.add_edge("S", (s, "i"), capacity=1)
    for t in snks:
        d.add_edge((t, "o"), "T", capacity=1)
    value = nx.maximum_flow_value(d, "S", "T")
    if value >= k:
        assert isinstance(res, PathSet) and len(res) == k
        check_paths(g.rotation, res, srcs, snks)
    else:
        assert isinstance(res, Infeasible) and res.found == value
        assert len(res.cut) == value
        # removing the cut really separates the sides
        h = nx.Graph(edges)
        h.add_nodes_from(verts)
        h.remove_nodes_from(res.cut)
        for s in srcs:
            for t in snks:
                if s in h and t in h:
                    assert not nx.has_path(h, s, t)


def test_edge_key_orders():
    assert edge_key(3, 1) == (1, 3)


def test_plane_graph_succ_pred_inverse():
    g = corpus.cube()
    for v in g.vertices:
        for u in g.rotation[v]:
            assert g.pred(v, g.succ(v, u)) == u


def test_plane_graph_equality_is_structural():
    a = PlaneGraph({0: [1, 2], 1: [2, 0], 2: [0, 1]})
    b = PlaneGraph({0: [1, 2], 1: [2, 0], 2: [0, 1]})
    assert a == b and hash(a) == hash(b)
