"""Turn any finite plane graph into a sub-cubic 2-connected one containing it as a minor."""

from __future__ import annotations

from dataclasses import dataclass, field

from .planar import (
    GraphError,
    PlaneGraph,
    biconnected_blocks,
    components,
    edge_key,
    euler_ok,
    face_of_dart,
    fresh_ids,
    insert_path_in_face,
    is_two_connected,
)


class NotTwoConnected(GraphError):
    pass


@dataclass
class ReductionWitness:
    """How the original graph sits inside the reduced one.

    ``blowup[v]`` is the connected vertex set replacing ``v``;
    ``edge_map[(u, v)]`` the path (as a vertex list) standing for the edge;
    ``added`` lists vertices and edges that belong to no original element.
    """

    blowup: dict
    edge_map: dict
    added_vertices: set = field(default_factory=set)
    added_edges: set = field(default_factory=set)

    @classmethod
    def identity(cls, g: PlaneGraph) -> "ReductionWitness":
        return cls({v: {v} for v in g.vertices}, {e: list(e) for e in g.edges()})

    def then(self, nxt: "ReductionWitness") -> "ReductionWitness":
        """Compose with a witness for the next reduction step."""
        blowup = {v: set().union(*(nxt.blowup[x] for x in s)) for v, s in self.blowup.items()}
        edge_map = {}
        for e, path in self.edge_map.items():
            out = []
            for x, y in zip(path, path[1:]):
                seg = nxt.edge_map[edge_key(x, y)]
                if seg[0] not in nxt.blowup[x]:
                    seg = list(reversed(seg))
                out.extend(seg if not out else seg[1:])
            edge_map[e] = out
        added_v = set()
        for x in self.added_vertices:
            added_v |= nxt.blowup[x]
        added_e = set(nxt.added_edges)
        for x, y in self.added_edges:
            seg = nxt.edge_map[edge_key(x, y)]
            added_e |= {edge_key(a, b) for a, b in zip(seg, seg[1:])}
        return ReductionWitness(blowup, edge_map, added_v | nxt.added_vertices, added_e)

    def to_json(self) -> dict:
        return {
            "blowup": {str(v): sorted(s) for v, s in self.blowup.items()},
            "edge_map": {f"{u}-{v}": list(p) for (u, v), p in self.edge_map.items()},
            "added": {
                "vertices": sorted(self.added_vertices),
                "edges": sorted([list(e) for e in self.added_edges]),
            },
        }


def _pad_small(g: PlaneGraph) -> tuple[PlaneGraph, ReductionWitness]:
    w = ReductionWitness.identity(g)
    vs = g.vertices
    if len(vs) == 1:
        (v,) = vs
        a, b = fresh_ids(vs, 2)
        out = PlaneGraph({v: [a, b], a: [b, v], b: [v, a]})
        w.added_vertices = {a, b}
        w.added_edges = {edge_key(v, a), edge_key(a, b), edge_key(v, b)}
        return out, w
    u, v = vs
    (z,) = fresh_ids(vs, 1)
    out = PlaneGraph({u: [v, z], v: [z, u], z: [u, v]})
    if not g.has_edge(u, v):
        w.added_edges.add(edge_key(u, v))
    w.added_vertices = {z}
    w.added_edges |= {edge_key(u, z), edge_key(v, z)}
    return out, w


def make_two_connected(g: PlaneGraph) -> tuple[PlaneGraph, ReductionWitness]:
    """Add length-2 paths through fresh vertices until no cut vertex is left.

    Components are first chained together through the outer corners; then,
    for any vertex whose consecutive neighbours (in rotation order) lie in
    different blocks, the two neighbours are joined around that corner.
    """
    if g.num_vertices() == 0:
        raise GraphError("empty graph")
    if is_two_connected(g):
        return g, ReductionWitness.identity(g)
    if g.num_vertices() <= 2:
        return _pad_small(g)

    witness = ReductionWitness.identity(g)
    comps = components(g.rotation)
    cur = g
    # join components in a chain: u (in comp i) - z - w (in comp i+1)
    for c1, c2 in zip(comps, comps[1:]):
        u, w = c1[0], c2[0]
        (z,) = fresh_ids(cur.rotation, 1)
        rot = {x: list(ns) for x, ns in cur.rotation.items()}
        rot[u].append(z)
        rot[w].append(z)
        rot[z] = [u, w]
        cur = PlaneGraph(rot)
        witness.added_vertices.add(z)
        witness.added_edges |= {edge_key(u, z), edge_key(z, w)}

    while not is_two_connected(cur):
        blocks = biconnected_blocks(cur.rotation)
        block_of = {}
        for i, blk in enumerate(blocks):
            for e in blk:
                block_of[e] = i
        done = False
        for v in cur.vertices:
            ns = cur.rotation[v]
            if len(ns) < 2:
                continue
            for i in range(len(ns)):
                u, w = ns[i], ns[(i + 1) % len(ns)]
                if block_of[edge_key(v, u)] == block_of[edge_key(v, w)]:
                    continue
                # the face through dart (u, v) then (v, w) holds the corner
                fc = face_of_dart(cur, (u, v))
                walk = fc.darts
                # dart entering w along that face is (v, w); the dart
                # entering u is the one just before (u, v)
                k = walk.index((u, v))
                t = walk[k - 1][0]
                (z,) = fresh_ids(cur.rotation, 1)
                cur = insert_path_in_face(cur, (t, u), (v, w), [z])
                witness.added_vertices.add(z)
                witness.added_edges |= {edge_key(u, z), edge_key(z, w)}
                done = True
                break
            if done:
                break
        if not done:  # pragma: no cover - every cut vertex has such a corner
            raise AssertionError("no corner found to repair a cut vertex")
    assert euler_ok(cur)
    return cur, witness


def make_subcubic(g: PlaneGraph) -> tuple[PlaneGraph, ReductionWitness]:
    """Replace each vertex of degree d >= 4 by a path of d - 2 vertices.

    The first spine vertex keeps the original id and takes the first two
    neighbours in rotation order, the last takes the final two, and the
    middle ones one each.
    """
    if not is_two_connected(g):
        raise NotTwoConnected("make_subcubic needs a 2-connected graph")
    witness = ReductionWitness.identity(g)
    rot = {x: list(ns) for x, ns in g.rotation.items()}
    owner = {v: v for v in g.vertices}
    endpoint = {}  # (v, original neighbour) -> spine vertex holding that incidence
    for v in g.vertices:
        ns = list(rot[v])  # current neighbours, possibly spine vertices of earlier blow-ups
        d = len(ns)
        if d <= 3:
            continue
        spine = [v] + fresh_ids(rot, d - 3)
        holder = {ns[0]: spine[0], ns[1]: spine[0], ns[-1]: spine[-1], ns[-2]: spine[-1]}
        for j in range(2, d - 2):
            holder[ns[j]] = spine[j - 1]
        rot[spine[0]] = [ns[0], ns[1], spine[1]]
        for j in range(1, d - 3):
            rot[spine[j]] = [spine[j - 1], ns[j + 1], spine[j + 1]]
        rot[spine[-1]] = [spine[-2], ns[-2], ns[-1]]
        for x in ns:
            h = holder[x]
            rx = rot[x]
            rx[rx.index(v)] = h
            endpoint[(v, owner[x])] = h
        for s_ in spine:
            owner[s_] = v
        witness.blowup[v] = set(spine)
    out = PlaneGraph(rot)
    for u, v in g.edges():
        witness.edge_map[(u, v)] = [endpoint.get((u, v), u), endpoint.get((v, u), v)]
        assert out.has_edge(*witness.edge_map[(u, v)])
    assert euler_ok(out), "spine rotation broke planarity"
    return out, witness


def reduce(g: PlaneGraph) -> tuple[PlaneGraph, ReductionWitness]:
    g2, w1 = make_two_connected(g)
    g3, w2 = make_subcubic(g2)
    return g3, w1.then(w2)


def contract_witness(reduced: PlaneGraph, w: ReductionWitness) -> tuple[set, set]:
    """Vertices and edges obtained by contracting blow-ups and deleting ``added``.

    Returns the original vertex set and the set of original edges whose
    images connect the right blow-up sets.
    """
    owner = {}
    for v, s in w.blowup.items():
        for x in s:
            if x in owner:
                raise AssertionError(f"{x!r} in two blow-up sets")
            owner[x] = v
    edges = set()
    for (u, v), path in w.edge_map.items():
        a, b = owner.get(path[0]), owner.get(path[-1])
        if {a, b} == {u, v} and all(reduced.has_edge(x, y) for x, y in zip(path, path[1:])):
            edges.add(edge_key(u, v))
    return set(w.blowup), edges
