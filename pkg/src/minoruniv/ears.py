"""Ear decompositions of 2-connected plane graphs, each ear tagged with its face."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .planar import (
    FaceCycle,
    GraphError,
    PathSet,
    PlaneGraph,
    edge_key,
    face_of_dart,
    fresh_ids,
    internally_disjoint_paths,
    is_two_connected,
)
from .reduce import NotTwoConnected


class EarNotInOneFace(GraphError):
    pass


@dataclass
class EarDecomposition:
    base_cycle: list
    ears: list  # each a vertex path whose two ends are already covered
    ear_faces: list  # FaceCycle of the prefix graph each ear lies in

    def prefix_edges(self, k: int) -> set:
        """Edges of the base cycle plus the first ``k`` ears."""
        c = self.base_cycle
        out = {edge_key(c[i], c[(i + 1) % len(c)]) for i in range(len(c))}
        for ear in self.ears[:k]:
            out |= {edge_key(a, b) for a, b in zip(ear, ear[1:])}
        return out

    def to_json(self) -> dict:
        return {
            "base_cycle": list(self.base_cycle),
            "ears": [
                {"path": list(ear), "face": list(fc.vertices)}
                for ear, fc in zip(self.ears, self.ear_faces)
            ],
        }


def cycle_through_two_edges(g: PlaneGraph, e0: tuple, e: tuple) -> list:
    """A simple cycle containing both edges, as a vertex list.

    Both edges are subdivided and two internally disjoint paths are routed
    between the new midpoints.
    """
    if not is_two_connected(g):
        raise NotTwoConnected("cycle_through_two_edges needs a 2-connected graph")
    e0, e = edge_key(*e0), edge_key(*e)
    if e0 == e or not g.has_edge(*e0) or not g.has_edge(*e):
        raise ValueError("need two distinct edges of g")
    m0, m1 = fresh_ids(g.rotation, 2)
    adj = {v: [w for w in ns if edge_key(v, w) not in (e0, e)] for v, ns in g.rotation.items()}
    adj[m0] = list(e0)
    adj[m1] = list(e)
    for mid, (a, b) in ((m0, e0), (m1, e)):
        adj[a].append(mid)
        adj[b].append(mid)
    res = internally_disjoint_paths(adj, m0, m1, 2)
    if not isinstance(res, PathSet):  # pragma: no cover - excluded by 2-connectivity
        raise NotTwoConnected("no two disjoint paths between the edges")
    p, q = res.paths
    return list(p[1:-1]) + list(reversed(q[1:-1]))


def _shortest_cycle_through(g: PlaneGraph, e0: tuple) -> list:
    u, v = e0
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.rotation[x]:
            if y in parent or (x, y) in ((u, v), (v, u)):
                continue
            parent[y] = x
            queue.append(y)
    if v not in parent:  # pragma: no cover
        raise NotTwoConnected(f"{e0} is a bridge")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return list(reversed(path))


def default_edge_order(g: PlaneGraph, seed: int | None = None) -> list:
    edges = sorted(g.edges())
    if seed is not None:
        random.Random(seed).shuffle(edges)
    return edges


def locate_ear_face(full: PlaneGraph, prefix_edges: set, ear: list, end: int = 0) -> FaceCycle:
    """The face of the embedded prefix that contains ``ear``.

    Scans the rotation at one end of the ear for the prefix neighbours
    flanking the ear's first edge; the prefix face through that corner is
    the answer.  ``end=-1`` does the same from the other end.
    """
    if end == 0:
        x, first = ear[0], ear[1]
    else:
        x, first = ear[-1], ear[-2]
    prefix = full.restrict(prefix_edges)
    ns = full.rotation[x]
    i = ns.index(first)
    for step in range(1, len(ns) + 1):
        u = ns[(i - step) % len(ns)]
        if edge_key(x, u) in prefix_edges:
            break
    else:
        raise EarNotInOneFace(f"{x!r} has no prefix neighbour")
    return face_of_dart(prefix, (u, x))


def same_face(a: FaceCycle, b: FaceCycle) -> bool:
    return set(a.darts) == set(b.darts)


def ear_decomposition(g: PlaneGraph, edge_order: list | None = None) -> EarDecomposition:
    """Ear decomposition following a total order on the edges.

    The base cycle runs through the least edge; each later ear is the
    stretch of a cycle through the least uncovered edge and the least edge
    that meets the covered part only at its ends.
    """
    if not is_two_connected(g):
        raise NotTwoConnected("ear decomposition needs a 2-connected graph")
    order = [edge_key(*e) for e in (edge_order or default_edge_order(g))]
    if sorted(order) != sorted(g.edges()):
        raise ValueError("edge_order must list every edge exactly once")
    e0 = order[0]
    base = _shortest_cycle_through(g, e0)
    covered_v = set(base)
    covered_e = {edge_key(base[i], base[(i + 1) % len(base)]) for i in range(len(base))}
    ears: list = []
    ear_faces: list = []
    for e in order:
        if e in covered_e:
            continue
        a, b = e
        if a in covered_v and b in covered_v:
            ear = [a, b]
        else:
            cyc = cycle_through_two_edges(g, e0, e)
            n = len(cyc)
            i = cyc.index(a)
            if cyc[(i + 1) % n] != b:
                cyc.reverse()
                i = cyc.index(a)
            # walk back from a and forward from b to the first covered vertices
            back = [a]
            j = i
            while back[-1] not in covered_v:
                j = (j - 1) % n
                back.append(cyc[j])
            fwd = [b]
            j = (i + 1) % n
            while fwd[-1] not in covered_v:
                j = (j + 1) % n
                fwd.append(cyc[j])
            ear = list(reversed(back)) + fwd
        face = locate_ear_face(g, covered_e, ear)
        other = locate_ear_face(g, covered_e, ear, end=-1)
        if not same_face(face, other):
            raise EarNotInOneFace(f"ear {ear} touches two faces")
        ears.append(ear)
        ear_faces.append(face)
        covered_v.update(ear)
        covered_e.update(edge_key(x, y) for x, y in zip(ear, ear[1:]))
    return EarDecomposition(base, ears, ear_faces)
