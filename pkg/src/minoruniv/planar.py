"""Finite plane graphs stored as rotation systems.

A rotation system gives, for every vertex, the cyclic order of its
neighbours.  Faces are traced with the usual combinatorial-map rule: the
dart following ``(u, v)`` is ``(v, succ_v(u))``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

import networkx as nx

Vertex = Hashable
Edge = tuple  # (u, v), stored with u < v where comparable


class GraphError(Exception):
    """Base class for errors raised by graph operations."""


class NonPlanar(GraphError):
    pass


class InvalidRotation(GraphError):
    pass


class Disconnected(GraphError):
    pass


class MissingEdge(GraphError):
    pass


def edge_key(u, v) -> tuple:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class FaceCycle:
    """A face boundary walk, as a cyclic sequence of darts."""

    darts: tuple

    @property
    def vertices(self) -> tuple:
        return tuple(d[0] for d in self.darts)

    def __len__(self) -> int:
        return len(self.darts)

    def canonical(self) -> tuple:
        """Vertex sequence rotated to start at its smallest vertex."""
        vs = self.vertices
        i = min(range(len(vs)), key=lambda j: vs[j])
        return vs[i:] + vs[:i]


@dataclass(frozen=True)
class PathSet:
    paths: tuple

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)


@dataclass(frozen=True)
class Infeasible:
    """Fewer than ``k`` disjoint paths exist; ``cut`` separates sources from sinks."""

    k: int
    found: int
    cut: frozenset
    reachable: frozenset = frozenset()  # source side of the cut


class PlaneGraph:
    """Simple graph with a rotation system.

    ``rotation[v]`` is the tuple of neighbours of ``v`` in cyclic order.
    Instances are treated as immutable once built.
    """

    __slots__ = ("rotation", "_succ", "_index")

    def __init__(self, rotation: Mapping[Vertex, Sequence[Vertex]]):
        self.rotation: dict = {v: tuple(ns) for v, ns in rotation.items()}
        self._succ: dict | None = None
        self._index: dict | None = None

    # basic queries -------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return tuple(self.rotation)

    def edges(self) -> list:
        seen = set()
        out = []
        for u, ns in self.rotation.items():
            for v in ns:
                k = edge_key(u, v)
                if k not in seen:
                    seen.add(k)
                    out.append(k)
        return out

    @property
    def adj(self) -> dict:
        return self.rotation

    def neighbors(self, v) -> tuple:
        return self.rotation[v]

    def degree(self, v) -> int:
        return len(self.rotation[v])

    def has_edge(self, u, v) -> bool:
        return u in self.rotation and v in self.rotation[u]

    def num_vertices(self) -> int:
        return len(self.rotation)

    def num_edges(self) -> int:
        return sum(len(ns) for ns in self.rotation.values()) // 2

    def succ(self, v, u):
        """Neighbour following ``u`` in the rotation at ``v``."""
        if self._succ is None:
            self._succ = {
                w: {ns[i]: ns[(i + 1) % len(ns)] for i in range(len(ns))}
                for w, ns in self.rotation.items()
            }
        return self._succ[v][u]

    def pred(self, v, u):
        ns = self.rotation[v]
        return ns[(ns.index(u) - 1) % len(ns)]

    def order_index(self) -> dict:
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self.rotation)}
        return self._index

    def restrict(self, edges: Iterable) -> "PlaneGraph":
        """Sub-embedding on the given edges (rotation order inherited)."""
        keep = {edge_key(*e) for e in edges}
        rot = {}
        for v, ns in self.rotation.items():
            kept = [w for w in ns if edge_key(v, w) in keep]
            if kept:
                rot[v] = kept
        return PlaneGraph(rot)

    def __repr__(self) -> str:
        return f"PlaneGraph(V={self.num_vertices()}, E={self.num_edges()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self.rotation == other.rotation

    def __hash__(self):
        return hash(frozenset(self.rotation))

    # serialisation -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.rotation),
            "edges": [list(e) for e in self.edges()],
            "rotation": {str(v): list(ns) for v, ns in self.rotation.items()},
        }

    def to_dot(self, name: str = "G", label=str) -> str:
        lines = [f"graph {name} {{"]
        for v in self.rotation:
            lines.append(f'  "{label(v)}";')
        for u, v in self.edges():
            lines.append(f'  "{label(u)}" -- "{label(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


# construction ------------------------------------------------------------


def _check_simple(vertices: Sequence, edges: Iterable) -> dict:
    nbrs: dict = {v: [] for v in vertices}
    seen = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at {u!r}")
        if u not in nbrs or v not in nbrs:
            raise GraphError(f"edge ({u!r}, {v!r}) has an unknown end")
        k = edge_key(u, v)
        if k in seen:
            raise GraphError(f"parallel edge {k!r}")
        seen.add(k)
        nbrs[u].append(v)
        nbrs[v].append(u)
    return nbrs


def build_embedding(vertices: Sequence, edges: Iterable, rotation: Mapping | None = None) -> PlaneGraph:
    """Return a planar embedding of a simple graph.

    With ``rotation`` given, it is validated (every incidence exactly once,
    Euler's formula per component).  Otherwise the left-right planarity
    algorithm from networkx computes one.
    """
    vertices = list(dict.fromkeys(vertices))
    edges = [tuple(e) for e in edges]
    nbrs = _check_simple(vertices, edges)
    if rotation is not None:
        rot = {}
        for v in vertices:
            given = list(rotation.get(v, ()))
            if sorted(map(repr, given)) != sorted(map(repr, nbrs[v])) or len(set(given)) != len(given):
                raise InvalidRotation(f"rotation at {v!r} does not list its neighbours exactly once")
            rot[v] = given
        g = PlaneGraph(rot)
        if not euler_ok(g):
            raise InvalidRotation("rotation system is not a sphere embedding")
        return g

    nxg = nx.Graph()
    nxg.add_nodes_from(vertices)
    nxg.add_edges_from(edges)
    planar, emb = nx.check_planarity(nxg)
    if not planar:
        raise NonPlanar("graph admits no planar embedding")
    g = PlaneGraph({v: list(emb.neighbors_cw_order(v)) if nbrs[v] else [] for v in vertices})
    assert euler_ok(g)
    return g


def from_json(data: Mapping) -> PlaneGraph:
    rot = data.get("rotation")
    if rot is not None:
        lookup = {str(v): v for v in data["vertices"]}
        rot = {lookup[str(k)]: ns for k, ns in rot.items()}
    return build_embedding(data["vertices"], [tuple(e) for e in data["edges"]], rot)


def load_graph(path: str) -> PlaneGraph:
    import sys

    if path == "-":
        return from_json(json.load(sys.stdin))
    with open(path) as fh:
        return from_json(json.load(fh))


# faces -------------------------------------------------------------------


def components(adj: Mapping) -> list[list]:
    seen = set()
    comps = []
    for s in adj:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def _trace(g: PlaneGraph, darts: Iterable) -> list[FaceCycle]:
    used = set()
    out = []
    for d in darts:
        if d in used:
            continue
        walk = []
        cur = d
        while cur not in used:
            used.add(cur)
            walk.append(cur)
            u, v = cur
            cur = (v, g.succ(v, u))
        if cur != d:
            raise InvalidRotation("face walk is not closed")
        out.append(FaceCycle(tuple(walk)))
    return out


def all_darts(g: PlaneGraph) -> Iterator[tuple]:
    for u, ns in g.rotation.items():
        for v in ns:
            yield (u, v)


def faces(g: PlaneGraph) -> list[FaceCycle]:
    if len(components(g.rotation)) > 1:
        raise Disconnected("face tracing needs a connected graph")
    return _trace(g, all_darts(g))


def face_of_dart(g: PlaneGraph, dart: tuple) -> FaceCycle:
    return _trace(g, [dart])[0]


def euler_ok(g: PlaneGraph) -> bool:
    """V - E + F == 2 on every connected component."""
    for comp in components(g.rotation):
        if len(comp) == 1:
            continue
        darts = [(u, v) for u in comp for v in g.rotation[u]]
        f = len(_trace(g, darts))
        e = len(darts) // 2
        if len(comp) - e + f != 2:
            return False
    return True


# edits -------------------------------------------------------------------


def fresh_ids(existing: Iterable, count: int) -> list[int]:
    ints = [v for v in existing if isinstance(v, int)]
    start = max(ints, default=-1) + 1
    return list(range(start, start + count))


def subdivide_edge(g: PlaneGraph, e: tuple, k: int, new_ids: Sequence | None = None) -> PlaneGraph:
    u, v = e
    if not g.has_edge(u, v):
        raise MissingEdge(f"{e!r} is not an edge")
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return g
    ids = list(new_ids) if new_ids is not None else fresh_ids(g.rotation, k)
    chain = [u, *ids, v]
    rot = {w: list(ns) for w, ns in g.rotation.items()}
    rot[u][rot[u].index(v)] = chain[1]
    rot[v][rot[v].index(u)] = chain[-2]
    for i in range(1, len(chain) - 1):
        rot[chain[i]] = [chain[i - 1], chain[i + 1]]
    return PlaneGraph(rot)


def insert_path_in_face(g: PlaneGraph, corner_u: tuple, corner_w: tuple, inner: Sequence) -> PlaneGraph:
    """Draw a path ``u - inner... - w`` through one face.

    ``corner_u = (a, u)`` and ``corner_w = (b, w)`` are darts of the same
    face; the new path leaves ``u`` right after ``a`` and enters ``w``
    right after ``b`` in rotation order.
    """
    a, u = corner_u
    b, w = corner_w
    path = [u, *inner, w]
    rot = {x: list(ns) for x, ns in g.rotation.items()}
    ru = rot[u]
    ru.insert(ru.index(a) + 1, path[1])
    rw = rot[w]
    rw.insert(rw.index(b) + 1, path[-2])
    for i in range(1, len(path) - 1):
        rot[path[i]] = [path[i + 1], path[i - 1]]
    return PlaneGraph(rot)


# connectivity ------------------------------------------------------------


def articulation_points(adj: Mapping) -> set:
    """Cut vertices, by iterative Hopcroft-Tarjan lowpoints."""
    disc: dict = {}
    low: dict = {}
    cut = set()
    counter = 0
    for root in adj:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        children = 0
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(adj[w])))
                    break
            else:
                stack.pop()
                if parent is not None:
                    low[parent] = min(low[parent], low[v])
                    if parent == root:
                        children += 1
                    elif low[v] >= disc[parent]:
                        cut.add(parent)
        if children >= 2:
            cut.add(root)
    return cut


def is_two_connected(g) -> bool:
    adj = g.adj if isinstance(g, PlaneGraph) else g
    if len(adj) < 3:
        return False
    if len(components(adj)) != 1:
        return False
    return not articulation_points(adj)


def is_subcubic(g) -> bool:
    adj = g.adj if isinstance(g, PlaneGraph) else g
    return all(len(ns) <= 3 for ns in adj.values())


def biconnected_blocks(adj: Mapping) -> list[set]:
    """Edge sets of the blocks (biconnected components)."""
    nxg = nx.Graph()
    nxg.add_nodes_from(adj)
    nxg.add_edges_from((u, v) for u in adj for v in adj[u])
    return [{edge_key(*e) for e in block} for block in nx.biconnected_component_edges(nxg)]


# disjoint paths ----------------------------------------------------------

_BIG = 1 << 30


class _Flow:
    """Max flow with unit vertex capacities on an index-relabelled graph.

    Each vertex ``i`` is split into an in-node and an out-node joined by an
    arc of capacity ``cap[i]``; graph edges become out->in arcs of capacity
    ``edge_cap`` in both directions.
    """

    def __init__(self, adj, sources, sinks, forbidden=(), cap=None, edge_cap=_BIG):
        forbidden = set(forbidden)
        verts = [v for v in adj if v not in forbidden]
        self.verts = verts
        index = {v: i for i, v in enumerate(verts)}
        self.index = index
        self.nbrs = [[index[w] for w in adj[v] if w in index] for v in verts]
        n = len(verts)
        cap = cap or {}
        self.cap = [cap.get(v, 1) for v in verts]
        self.src = [False] * n
        self.snk = [False] * n
        self.sources = [index[s] for s in sources if s in index]
        for i in self.sources:
            self.src[i] = True
        for t in sinks:
            if t in index:
                self.snk[index[t]] = True
        self.edge_cap = edge_cap
        self.vflow = [0] * n
        self.sflow = [0] * n
        self.tflow = [0] * n
        self.eflow: dict = {}
        self.reach_in: list | None = None
        self.reach_out: list | None = None

    def _augment(self) -> bool:
        n = len(self.verts)
        nbrs, cap, vflow, sflow, tflow, eflow = self.nbrs, self.cap, self.vflow, self.sflow, self.tflow, self.eflow
        snk, ecap = self.snk, self.edge_cap
        # parents: for in-node i -> par_in[i], out-node i -> par_out[i]
        # encoding: -1 unseen, -2 from source, 2*j (in j) or 2*j+1 (out j)
        par_in = [-1] * n
        par_out = [-1] * n
        queue = []
        for i in self.sources:
            if sflow[i] < cap[i] and par_in[i] == -1:
                par_in[i] = -2
                queue.append(2 * i)
        head = 0
        end = -1
        while head < len(queue):
            node = queue[head]
            head += 1
            i = node >> 1
            if node & 1 == 0:
                if vflow[i] < cap[i] and par_out[i] == -1:
                    par_out[i] = node
                    queue.append(node | 1)
                for j in nbrs[i]:
                    if par_out[j] == -1 and eflow.get(j * n + i, 0) > 0:
                        par_out[j] = node
                        queue.append(2 * j + 1)
            else:
                if snk[i] and tflow[i] < cap[i]:
                    end = i
                    break
                for j in nbrs[i]:
                    if par_in[j] == -1 and eflow.get(i * n + j, 0) < ecap:
                        par_in[j] = node
                        queue.append(2 * j)
                if vflow[i] > 0 and par_in[i] == -1:
                    par_in[i] = node
                    queue.append(2 * i)
        if end < 0:
            self.reach_in = par_in
            self.reach_out = par_out
            return False
        tflow[end] += 1
        node = 2 * end + 1
        while True:
            i = node >> 1
            prev = par_out[i] if node & 1 else par_in[i]
            if prev == -2:
                sflow[i] += 1
                break
            j = prev >> 1
            if node & 1:
                if prev & 1 == 0 and j == i:
                    vflow[i] += 1
                else:  # in j -> out i : undo flow on out i -> in j
                    eflow[i * n + j] -= 1
            else:
                if prev & 1 and j != i:
                    eflow[j * n + i] = eflow.get(j * n + i, 0) + 1
                else:  # out i -> in i backward
                    vflow[i] -= 1
            node = prev
        return True

    def run(self, limit: int) -> int:
        value = 0
        while value < limit and self._augment():
            value += 1
        return value

    def reachable(self) -> frozenset:
        return frozenset(self.verts[i] for i in range(len(self.verts)) if self.reach_in[i] != -1 and self.reach_out[i] != -1)

    def cut(self) -> frozenset:
        """A minimum vertex cut, read off the last failed search.

        Saturated sources the search could not enter, and saturated sinks
        it did reach, belong to the cut as well.
        """
        out = set()
        for i in range(len(self.verts)):
            rin, rout = self.reach_in[i] != -1, self.reach_out[i] != -1
            if rin and not rout:
                out.add(self.verts[i])
            elif self.src[i] and not rin:
                out.add(self.verts[i])
            elif self.snk[i] and rout and self.tflow[i] >= self.cap[i]:
                out.add(self.verts[i])
        return frozenset(out)

    def paths(self) -> list:
        n = len(self.verts)
        rem = dict(self.eflow)
        tleft = list(self.tflow)
        out = []
        for s in self.sources:
            for _ in range(self.sflow[s]):
                path = [s]
                i = s
                while True:
                    if self.snk[i] and tleft[i] > 0:
                        tleft[i] -= 1
                        break
                    for j in self.nbrs[i]:
                        if rem.get(i * n + j, 0) > 0:
                            rem[i * n + j] -= 1
                            path.append(j)
                            i = j
                            break
                    else:  # pragma: no cover - flow conservation guarantees a successor
                        raise AssertionError("broken flow decomposition")
                out.append([self.verts[k] for k in path])
        return out


class _Chain:
    """Stand-in for a maximal run of degree-2 vertices."""

    __slots__ = ("verts", "ends", "alive")

    def __init__(self, verts, ends, alive=True):
        self.verts = verts
        self.ends = ends
        self.alive = alive

    def __repr__(self) -> str:
        return f"_Chain({self.verts[0]!r}..{self.verts[-1]!r})"


class ChainGraph:
    """A graph with every maximal run of degree-2 vertices collapsed.

    With unit vertex capacities a path entering such a run must cross all
    of it, so the run behaves like a single vertex; flows on the collapsed
    graph are much smaller for subdivided hosts.  Vertices in ``keep`` are
    never collapsed, and runs attached at both ends to the same vertex (or
    closed up into a cycle) are useless for simple paths and are dropped.
    The graph can grow in place through :meth:`add`.
    """

    def __init__(self, adj: Mapping, keep: Iterable = (), forbidden: Iterable = ()):
        self.keep = set(keep)
        self.forbidden = set(forbidden)
        fb = self.forbidden
        self.live = {v: [w for w in ns if w not in fb] for v, ns in adj.items() if v not in fb}
        self.rank = {v: i for i, v in enumerate(self.live)}  # fixes iteration order
        self.chain_of: dict = {}
        self.out: dict = {}
        self._rebuild(set(self.live))

    def _inner(self, v) -> bool:
        return len(self.live[v]) == 2 and v not in self.keep

    def add(self, rows: Mapping) -> None:
        """Add vertices (``rows`` maps each to its neighbours) and their edges."""
        live, fb = self.live, self.forbidden
        touched = set()
        for v, ns in rows.items():
            if v in fb:
                continue
            row = live.setdefault(v, [])
            self.rank.setdefault(v, len(self.rank))
            touched.add(v)
            for w in ns:
                if w in fb or w in row:
                    continue
                row.append(w)
                self.rank.setdefault(w, len(self.rank))
                other = live.setdefault(w, [])
                if v not in other:
                    other.append(v)
                touched.add(w)
        self._rebuild(touched)

    def _rebuild(self, touched: set) -> None:
        live, chain_of, out = self.live, self.chain_of, self.out
        aff = set(touched)
        for v in touched:
            for x in [v, *live[v]]:
                node = chain_of.get(x)
                if node is not None:
                    aff.update(node.verts)
        old = {chain_of[v] for v in aff if v in chain_of}
        ends = set()
        for node in old:
            out.pop(node, None)
            ends.update(node.ends)
            for x in node.verts:
                del chain_of[x]
        for v in aff:
            out.pop(v, None)

        inner = self._inner
        rank = self.rank
        for v in sorted(aff, key=rank.__getitem__):
            if v in chain_of or not inner(v):
                continue
            # walk to one end of the run
            prev, cur = None, v
            cyclic = False
            while True:
                nxt = [w for w in live[cur] if w != prev and inner(w)]
                if not nxt:
                    break
                if nxt[0] == v:
                    cyclic = True
                    break
                prev, cur = cur, nxt[0]
            run = [cur]
            prev = None
            seen = {cur}
            while True:
                nxt = [w for w in live[run[-1]] if w != prev and inner(w) and w not in seen]
                if not nxt:
                    break
                prev = run[-1]
                run.append(nxt[0])
                seen.add(nxt[0])
            if cyclic:
                node = _Chain(run, (), alive=False)
            elif len(run) == 1:
                a, b = live[run[0]]
                node = _Chain(run, (a, b), alive=a != b)
            else:
                a = next(w for w in live[run[0]] if not inner(w))
                b = next(w for w in live[run[-1]] if not inner(w))
                node = _Chain(run, (a, b), alive=a != b)
            for x in run:
                chain_of[x] = node
            if node.alive:
                out[node] = list(node.ends)
            ends.update(node.ends)

        for v in sorted(aff | ends, key=rank.__getitem__):
            if v in chain_of:
                continue
            row = []
            for w in live[v]:
                node = chain_of.get(w)
                if node is None:
                    row.append(w)
                elif node.alive and node not in row:
                    row.append(node)
            out[v] = row

    def disjoint_paths(self, sources: Iterable, sinks: Iterable, k: int) -> "PathSet | Infeasible":
        """Like :func:`disjoint_paths`; sources and sinks must be in ``keep``."""
        sources = list(dict.fromkeys(sources))
        sinks = list(dict.fromkeys(sinks))
        if (set(sources) | set(sinks)) - self.keep:
            raise ValueError("sources and sinks must be kept uncollapsed")
        if k == 0:
            return PathSet(())
        fl = _Flow(self.out, sources, sinks)
        value = fl.run(k)
        if value < k:
            cut = frozenset(x.verts[0] if isinstance(x, _Chain) else x for x in fl.cut())
            reach = set()
            for x in fl.reachable():
                if isinstance(x, _Chain):
                    reach.update(x.verts)
                else:
                    reach.add(x)
            return Infeasible(k=k, found=value, cut=cut, reachable=frozenset(reach))
        return PathSet(tuple(tuple(_expand_path(p)) for p in fl.paths()))


def _expand_path(path: list) -> list:
    out = []
    for i, x in enumerate(path):
        if isinstance(x, _Chain):
            out.extend(x.verts if path[i - 1] == x.ends[0] else reversed(x.verts))
        else:
            out.append(x)
    return out


def disjoint_paths(g, sources: Iterable, sinks: Iterable, k: int, forbidden: Iterable = ()) -> PathSet | Infeasible:
    """Find ``k`` vertex-disjoint paths from distinct sources to distinct sinks.

    A single source with a single sink asks for ``k`` internally disjoint
    paths between them instead.  On failure the result carries a vertex cut of size < k separating the
    sources from the sinks in ``g - forbidden``.
    """
    adj = g.adj if isinstance(g, PlaneGraph) else g
    sources = list(dict.fromkeys(sources))
    sinks = list(dict.fromkeys(sinks))
    forbidden = set(forbidden)
    if set(sources) & set(sinks) or (set(sources) | set(sinks)) & forbidden:
        raise ValueError("sources, sinks and forbidden must be pairwise disjoint")
    if k == 0:
        return PathSet(())
    if len(sources) == 1 and len(sinks) == 1 and k > 1:
        return internally_disjoint_paths(adj, sources[0], sinks[0], k, forbidden)
    cg = ChainGraph(adj, set(sources) | set(sinks), forbidden)
    return cg.disjoint_paths(sources, sinks, k)


def _without_edge(adj: Mapping, s, t) -> tuple[Mapping, bool]:
    if t not in adj[s]:
        return adj, False
    out = dict(adj)
    out[s] = [w for w in adj[s] if w != t]
    out[t] = [w for w in adj[t] if w != s]
    return out, True


def internally_disjoint_paths(g, s, t, k: int, forbidden: Iterable = ()) -> PathSet | Infeasible:
    """``k`` paths from ``s`` to ``t`` sharing no vertex besides the ends.

    An edge ``st`` counts as one of the paths.  On failure the cut
    separates ``s`` from ``t`` once that edge is removed.
    """
    adj = g.adj if isinstance(g, PlaneGraph) else g
    adj, direct = _without_edge(adj, s, t)
    need = max(k - direct, 0)
    fl = _Flow(adj, [s], [t], forbidden, cap={s: _BIG, t: _BIG})
    value = fl.run(need)
    if value < need:
        return Infeasible(k=k, found=value + direct, cut=fl.cut())
    paths = [tuple(p) for p in fl.paths()]
    if direct and k > 0:
        paths.append((s, t))
    return PathSet(tuple(paths))


def local_connectivity(g, s, t, forbidden: Iterable = ()) -> int:
    """Maximum number of internally disjoint s-t paths (an edge st counts once)."""
    adj = g.adj if isinstance(g, PlaneGraph) else g
    adj, direct = _without_edge(adj, s, t)
    fl = _Flow(adj, [s], [t], forbidden, cap={s: _BIG, t: _BIG})
    return fl.run(_BIG) + direct
