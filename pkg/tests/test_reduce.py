import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minoruniv import corpus
from minoruniv.planar import (
    biconnected_blocks,
    build_embedding,
    edge_key,
    euler_ok,
    is_subcubic,
    is_two_connected,
)
from minoruniv.reduce import (
    NotTwoConnected,
    ReductionWitness,
    contract_witness,
    make_subcubic,
    make_two_connected,
    reduce,
)
from minoruniv.verify import brute_force_minor


def assert_witness(g, out, w):
    """Blow-ups are disjoint connected sets, edge images are paths between them,
    and contracting recovers exactly g."""
    nxo = nx.Graph(list(out.edges()))
    nxo.add_nodes_from(out.vertices)
    seen = set()
    for v, s in w.blowup.items():
        assert s and not s & seen
        seen |= s
        assert nx.is_connected(nxo.subgraph(s))
    verts, edges = contract_witness(out, w)
    assert verts == set(g.vertices)
    assert edges == set(g.edges())
    # added elements stay clear of the images
    used_edges = {edge_key(a, b) for p in w.edge_map.values() for a, b in zip(p, p[1:])}
    assert not w.added_vertices & seen
    assert not w.added_edges & used_edges


def assert_reduced(out):
    assert euler_ok(out)
    assert is_subcubic(out)
    assert is_two_connected(out)


# make_two_connected


def test_two_connected_unchanged():
    g = corpus.cycle(4)
    out, w = make_two_connected(g)
    assert out == g
    assert w.blowup == {v: {v} for v in g.vertices} and not w.added_vertices


def test_k2_becomes_a_cycle():
    g = corpus.path(2)
    out, w = make_two_connected(g)
    assert is_two_connected(out) and out.num_vertices() >= 3
    assert out.has_edge(*next(iter(g.edges())))
    assert_witness(g, out, w)


def test_single_vertex_padded():
    g = build_embedding([0], [])
    out, w = reduce(g)
    assert_reduced(out)
    assert w.blowup == {0: {0}}


def test_star_k13_repaired_and_minor():
    g = corpus.star(3)
    out, w = make_two_connected(g)
    assert is_two_connected(out) and euler_ok(out)
    assert_witness(g, out, w)
    assert brute_force_minor(out, g).found


def test_repair_never_adds_parallel_edges():
    for g in [corpus.path(5), corpus.star(4), *corpus.trees(6)]:
        out, _ = make_two_connected(g)
        assert len(set(out.edges())) == out.num_edges()
        assert all(len(set(ns)) == len(ns) for ns in out.rotation.values())


def test_disconnected_input_joined():
    g = build_embedding(range(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    out, w = make_two_connected(g)
    assert is_two_connected(out)
    assert_witness(g, out, w)


# make_subcubic


def test_subcubic_k4_unchanged():
    g = corpus.k4()
    out, _ = make_subcubic(g)
    assert out == g


def test_wheel_hub_spine():
    g = corpus.wheel(5)
    out, w = make_subcubic(g)
    assert_reduced(out)
    hub = max(g.vertices, key=g.degree)
    assert len(w.blowup[hub]) == 3
    assert_witness(g, out, w)


def test_octahedron_doubles():
    g = corpus.octahedron()
    out, w = make_subcubic(g)
    assert_reduced(out)
    assert out.num_vertices() == 12
    assert all(len(s) == 2 for s in w.blowup.values())
    assert_witness(g, out, w)


def test_subcubic_needs_two_connected():
    with pytest.raises(NotTwoConnected):
        make_subcubic(corpus.star(4))


# reduce


def test_c3_identity():
    out, w = reduce(corpus.cycle(3))
    assert out == corpus.cycle(3)
    assert w.edge_map == ReductionWitness.identity(out).edge_map


def test_k14_reduced_and_minor():
    g = corpus.star(4)
    out, w = reduce(g)
    assert_reduced(out)
    assert_witness(g, out, w)
    assert brute_force_minor(out, g).found


def test_w6_witness_contracts_back():
    g = corpus.wheel(6)
    out, w = reduce(g)
    assert_reduced(out)
    assert_witness(g, out, w)


@pytest.mark.parametrize("name", sorted(corpus.general()))
def test_corpus_sizes_linear(name):
    g = corpus.general()[name]
    out, w = reduce(g)
    assert_reduced(out)
    assert_witness(g, out, w)
    blocks = len(biconnected_blocks(g.rotation)) if g.num_vertices() > 1 else 1
    spine = sum(max(0, g.degree(v) - 2) for v in g.vertices)
    assert out.num_vertices() <= g.num_vertices() + spine + 2 * blocks + 2


def test_witness_json_shape():
    _, w = reduce(corpus.star(3))
    data = w.to_json()
    assert set(data) == {"blowup", "edge_map", "added"}
    assert set(data["added"]) == {"vertices", "edges"}


@st.composite
def plane_forests(draw):
    n = draw(st.integers(1, 9))
    edges = []
    for v in range(1, n):
        if draw(st.booleans()) or v < 2:
            edges.append((draw(st.integers(0, v - 1)), v))
    return n, edges


@settings(max_examples=50, deadline=None)
@given(plane_forests())
def test_random_forests_reduce(data):
    n, edges = data
    g = build_embedding(range(n), edges)
    out, w = reduce(g)
    assert_reduced(out)
    assert_witness(g, out, w)
