"""Build an explicit minor model of a plane graph inside the universal graph.

The model is grown one ear at a time.  Every face ``F`` of the current
prefix owns a region of the host (a :class:`SliceRef`) and, for each of
its boundary vertices that will later be the end of an ear inside ``F``,
a terminal: the end of that vertex's branch path lying on the region
boundary.  To add an ear inside ``F`` we pick a deep face ``f`` inside the
region, route the terminals to ``∂f`` with disjoint paths, lay the ear
along a diameter of ``f``, and hand the two halves of ``f`` to the two new
faces.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .ears import EarDecomposition, default_edge_order, ear_decomposition, locate_ear_face
from .planar import (
    FaceCycle,
    GraphError,
    Infeasible,
    PlaneGraph,
    edge_key,
    face_of_dart,
    faces,
    ChainGraph,
    is_subcubic,
    is_two_connected,
)
from .reduce import NotTwoConnected, ReductionWitness, reduce
from .universal import (
    DEFAULT_CAP,
    FaceId,
    SliceRef,
    UniversalHost,
    boundary,
    diameter_path,
    face_length,
    region_adjacency,
)

log = logging.getLogger(__name__)


class DepthCapExceeded(GraphError):
    pass


class InternalOrderViolation(AssertionError):
    pass


@dataclass
class EmbedConfig:
    max_extra_depth: int = 12  # how far below the target face routing may expand
    max_rounds: int = 400  # expansion rounds per routing call
    cap: int = DEFAULT_CAP
    seed: int | None = None  # edge order for the ear decomposition
    check_steps: bool = True


@dataclass
class ActiveFace:
    cycle: tuple  # input vertices around the face, traced orientation
    region: SliceRef
    terminals: dict  # input vertex -> host vertex on region boundary


@dataclass
class StepRecord:
    ear: list
    face_length: int
    target: FaceId
    level: int
    rounds: int


@dataclass
class EmbedState:
    graph: PlaneGraph
    host: UniversalHost
    prefix_edges: set
    phi_v: dict  # input vertex -> host path
    phi_e: dict  # edge_key -> host path, oriented like the key
    faces: dict  # canonical cycle -> ActiveFace
    used: set = field(default_factory=set)
    steps: list = field(default_factory=list)

    @property
    def deepest(self) -> int:
        return max((f.depth for f in self.host.expanded), default=-1) + 1


@dataclass
class MinorModel:
    graph: PlaneGraph
    host: UniversalHost
    branch_sets: dict  # input vertex -> list of host vertices
    branch_paths: dict  # edge_key -> host path (ends in the end branch sets)

    def to_json(self) -> dict:
        return {
            "input": self.graph.to_json(),
            "host_level_map": {
                "expanded": [str(f) for f in self.host.expanded],
                "deepest": max((f.depth for f in self.host.expanded), default=-1) + 1,
            },
            "branch_sets": {str(v): sorted(str(a) for a in s) for v, s in self.branch_sets.items()},
            "branch_paths": {f"{u}-{v}": [str(a) for a in p] for (u, v), p in self.branch_paths.items()},
        }


# helpers -----------------------------------------------------------------


def _key(cycle) -> tuple:
    cycle = tuple(cycle)
    i = min(range(len(cycle)), key=lambda j: cycle[j])
    return cycle[i:] + cycle[:i]


def _cyclic_ok(positions: list) -> bool:
    """True if the positions increase around the cycle (one wrap allowed)."""
    n = len(positions)
    if n <= 2:
        return True
    descents = sum(positions[i] > positions[(i + 1) % n] for i in range(n))
    return descents <= 1


def _pending(state: EmbedState, among: set | None = None) -> dict:
    """For each active face key, the boundary vertices needing a terminal there.

    A covered vertex with an uncovered edge is the end of a later ear; that
    ear starts in whichever prefix face holds the edge's corner.
    """
    g = state.graph
    prefix = g.restrict(state.prefix_edges)
    out: dict = {}
    covered = set(prefix.vertices)
    for v in covered:
        if among is not None and v not in among:
            continue
        for w in g.rotation[v]:
            if edge_key(v, w) in state.prefix_edges:
                continue
            fc = locate_ear_face(g, state.prefix_edges, [v, w])
            out.setdefault(_key(fc.vertices), set()).add(v)
    return out


def _check_face(state: EmbedState, af: ActiveFace, needed: set) -> None:
    if set(af.terminals) != needed:
        raise InternalOrderViolation(f"terminals {set(af.terminals)} != needed {needed}")
    bd = af.region.boundary()
    pos = {a: i for i, a in enumerate(bd)}
    seq = []
    for v in af.cycle:
        if v in af.terminals:
            t = af.terminals[v]
            if t not in pos:
                raise InternalOrderViolation(f"terminal of {v} not on region boundary")
            if state.phi_v[v][0] != t and state.phi_v[v][-1] != t:
                raise InternalOrderViolation(f"terminal of {v} is not an end of its path")
            seq.append(pos[t])
    if not _cyclic_ok(seq):
        raise InternalOrderViolation("terminals out of cyclic order on region boundary")


def _deepen(host: UniversalHost, region_faces, blocked: Infeasible, alive, exclude, depth_limit) -> list:
    """Expand leaf faces of the region that straddle a blocking cut.

    A leaf face with boundary vertices on both sides of the cut gets a new
    centre joined to all of them, which bypasses the cut.  Falls back to
    faces touching the cut, then to the shallowest leaves.  Returns the
    expansions made.
    """
    leaves = [
        f
        for f in host.leaf_faces(region_faces)
        if f.depth < depth_limit and not any(f.is_within(x) for x in exclude)
    ]
    if not leaves:
        return []
    near = blocked.reachable
    cut = blocked.cut
    chosen = []
    for f in leaves:
        bd = boundary(f)
        if any(v in near for v in bd) and any(v in alive and v not in near and v not in cut for v in bd):
            chosen.append(f)
    if not chosen:
        chosen = [f for f in leaves if cut & set(boundary(f))]
    if not chosen:
        low = min(f.depth for f in leaves)
        chosen = [f for f in leaves if f.depth == low]
    return [host.expand_face(f) for f in chosen]


def _route(state: EmbedState, region_faces, region_bd, sources, sinks, k, exclude, depth_limit, config, drop_edges=()):
    """Disjoint paths inside a region, expanding the host until they exist.

    Paths are trimmed so that each meets the sources and the sinks only at
    its two ends.
    """
    host = state.host
    drop = set(drop_edges)
    srcs = set(sources)
    snks = set(sinks)
    adj = region_adjacency(host, region_faces, region_bd)
    if drop:
        adj = {v: [w for w in ns if edge_key(v, w) not in drop] for v, ns in adj.items()}
    forbidden = (state.used - srcs) & adj.keys()
    for x in exclude:
        forbidden |= host.interior_vertices(x)
    graph = ChainGraph(adj, srcs | snks, forbidden & adj.keys())
    for rounds in range(config.max_rounds):
        res = graph.disjoint_paths(sources, sinks, k)
        if not isinstance(res, Infeasible):
            out = []
            for p in res.paths:
                i = max(j for j, a in enumerate(p) if a in srcs)
                j = min(j for j, a in enumerate(p) if a in snks)
                out.append(list(p[i : j + 1]))
            return out, rounds
        grown = _deepen(host, region_faces, res, graph.live, exclude, depth_limit)
        if not grown:
            raise DepthCapExceeded(f"routing {k} paths failed; best {res.found}, cut {len(res.cut)}")
        # new vertices only touch the expanded face, which lies inside the region
        graph.add({v: host.adj[v] for x in grown for v in x.vertices})
    raise DepthCapExceeded(f"no routing after {config.max_rounds} rounds")


def _add_path(state: EmbedState, path) -> None:
    state.used.update(path)


# base case ---------------------------------------------------------------


def base_faces(l0: int) -> tuple[FaceId, FaceId, FaceId]:
    """The piece and two disjoint level-``l0`` faces inside it."""
    piece_face = FaceId("A", tuple(d + 1 for d in range(l0 - 2)))
    m = face_length(piece_face.depth)
    f0 = piece_face.child(0).child(2)
    f1 = piece_face.child(m // 2).child(2)
    return piece_face, f0, f1


def embed_base(cycle, graph: PlaneGraph | None = None, host: UniversalHost | None = None, config: EmbedConfig | None = None) -> EmbedState:
    """Map a base cycle onto paths joining two face cycles of one piece."""
    config = config or EmbedConfig()
    if isinstance(cycle, int):
        cycle = list(range(cycle))
    cycle = list(cycle)
    l0 = len(cycle)
    if l0 < 3:
        raise ValueError("base cycle needs at least 3 vertices")
    if graph is None:
        graph = PlaneGraph({v: [cycle[i - 1], cycle[(i + 1) % l0]] for i, v in enumerate(cycle)})
    host = host or UniversalHost(cap=config.cap)
    prefix_edges = {edge_key(cycle[i], cycle[(i + 1) % l0]) for i in range(l0)}
    state = EmbedState(graph, host, prefix_edges, {}, {}, {})

    piece_face, f0, f1 = base_faces(l0)
    host.ensure_expanded(f0.parent)
    host.ensure_expanded(f1.parent)
    c0, c1 = list(boundary(f0)), list(boundary(f1))
    assert not set(c0) & set(c1)
    for a in c0:
        assert not set(host.adj[a]) & set(c1), "base faces must not be adjacent"

    drop = {edge_key(c[i], c[(i + 1) % len(c)]) for c in (c0, c1) for i in range(len(c))}
    paths, rounds = _route(
        state, [piece_face], [], c0, c1, l0, [f0, f1],
        max(f0.depth, f1.depth) + config.max_extra_depth, config, drop,
    )
    pos0 = {a: i for i, a in enumerate(c0)}
    paths.sort(key=lambda p: pos0[p[0]])

    prefix = graph.restrict(prefix_edges)
    inner, outer = faces(prefix)
    inner_cycle = inner.vertices
    # branch paths for the base vertices follow the inner face's order
    for v, p in zip(inner_cycle, paths):
        state.phi_v[v] = p
        _add_path(state, p)
    for i, v in enumerate(inner_cycle):
        w = inner_cycle[(i + 1) % l0]
        a, b = pos0[state.phi_v[v][0]], pos0[state.phi_v[w][0]]
        arc = [c0[j % len(c0)] for j in range(a, a + ((b - a) % len(c0)) + 1)]
        k = edge_key(v, w)
        state.phi_e[k] = arc if k == (v, w) else list(reversed(arc))
        _add_path(state, arc)

    needed = _pending(state)
    for fc, face, end in ((inner, f0, 0), (outer, f1, -1)):
        key = _key(fc.vertices)
        want = needed.get(key, set())
        af = ActiveFace(fc.vertices, SliceRef(face), {v: state.phi_v[v][end] for v in want})
        _check_face(state, af, want)
        state.faces[key] = af
    # the outer face sees the paths' far ends in reversed order
    pos1 = {a: i for i, a in enumerate(c1)}
    if not _cyclic_ok([pos1[state.phi_v[v][-1]] for v in outer.vertices]):
        raise InternalOrderViolation("base paths land out of order")
    state.steps.append(StepRecord(list(cycle), l0, f0, f0.depth, rounds))
    return state


# inductive step ----------------------------------------------------------


def choose_target(host: UniversalHost, region: SliceRef, level: int) -> FaceId:
    """Descend through middle children until a level-``level`` face clear of the region boundary."""
    fs = region.faces()
    g = fs[len(fs) // 2]
    bd = set(region.boundary())
    while True:
        if g.depth >= level and g not in host.expanded and not set(boundary(g)) & bd:
            return g
        if g not in host.expanded:
            host.expand_face(g)
        g = g.child(face_length(g.depth) // 2)


def route_terminals(state: EmbedState, af: ActiveFace, target: FaceId, config: EmbedConfig):
    """Disjoint paths from each terminal of ``af`` to the boundary of ``target``."""
    terms = af.terminals
    if not terms:
        return {}, 0
    order = [v for v in af.cycle if v in terms]
    paths, rounds = _route(
        state, af.region.faces(), af.region.boundary(), [terms[v] for v in order],
        list(boundary(target)), len(order), [target],
        target.depth + config.max_extra_depth, config,
    )
    by_start = {p[0]: p for p in paths}
    return {v: by_start[terms[v]] for v in order}, rounds


def embed_ear(state: EmbedState, ear: list, face: FaceCycle, config: EmbedConfig | None = None) -> EmbedState:
    config = config or EmbedConfig()
    host = state.host
    key = _key(face.vertices)
    af = state.faces[key]
    x, y = ear[0], ear[-1]
    L = len(ear) - 1
    l = len(af.cycle)
    if x not in af.terminals or y not in af.terminals:
        raise InternalOrderViolation("ear ends lack terminals")

    region_level = max(f.depth for f in af.region.faces())
    level = max(2 * L + l - 3, region_level + 1)
    target = choose_target(host, af.region, level)
    routes, rounds = route_terminals(state, af, target, config)

    tb = list(boundary(target))
    tpos = {a: i for i, a in enumerate(tb)}
    landing = [tpos[routes[v][-1]] for v in af.cycle if v in routes]
    if not _cyclic_ok(landing):
        raise InternalOrderViolation("landing points out of cyclic order")

    old_e = dict(state.phi_e) if config.check_steps else None
    old_v = {v: list(p) for v, p in state.phi_v.items()} if config.check_steps else None

    for v, p in routes.items():
        cur = state.phi_v[v]
        if cur[-1] == p[0]:
            state.phi_v[v] = cur + p[1:]
        elif cur[0] == p[0]:
            state.phi_v[v] = list(reversed(p[1:])) + cur
        else:
            raise InternalOrderViolation(f"route for {v} does not start at its terminal")
        _add_path(state, p)

    a, b = tpos[routes[x][-1]], tpos[routes[y][-1]]
    host.expand_face(target)
    dia = diameter_path(target, a, b)
    spots = [round(j * (len(dia) - 1) / L) for j in range(L + 1)]
    for j in range(1, L):
        v = ear[j]
        state.phi_v[v] = [dia[spots[j]]]
    for j in range(L):
        seg = dia[spots[j] : spots[j + 1] + 1]
        k = edge_key(ear[j], ear[j + 1])
        state.phi_e[k] = seg if k == (ear[j], ear[j + 1]) else list(reversed(seg))
    _add_path(state, dia)

    # split the face: F1 keeps the arc x -> y of F, F2 the arc y -> x
    cyc = list(af.cycle)
    i = cyc.index(x)
    cyc = cyc[i:] + cyc[:i]
    j = cyc.index(y)
    inner = ear[1:-1]
    f1_cycle = tuple(cyc[: j + 1] + list(reversed(inner)))
    f2_cycle = tuple(cyc[j:] + [x] + inner)

    for e in zip(ear, ear[1:]):
        state.prefix_edges.add(edge_key(*e))
    prefix = state.graph.restrict(state.prefix_edges)
    for fc in (f1_cycle, f2_cycle):
        traced = face_of_dart(prefix, (fc[0], fc[1]))
        if _key(traced.vertices) != _key(fc):
            raise InternalOrderViolation("split faces disagree with the embedding")

    del state.faces[key]
    needed = _pending(state, among=set(af.cycle) | set(ear))
    for fc, side in ((f1_cycle, 0), (f2_cycle, 1)):
        fkey = _key(fc)
        want = needed.get(fkey, set())
        terms = {}
        for v in want:
            if v in (x, y):
                raise InternalOrderViolation("ear end reused; input not sub-cubic?")
            terms[v] = state.phi_v[v][0] if v in inner else routes[v][-1]
        nf = ActiveFace(fc, SliceRef(target, (a, b), side), terms)
        if config.check_steps:
            _check_face(state, nf, want)
        state.faces[fkey] = nf

    if config.check_steps:
        for k, p in old_e.items():
            assert state.phi_e[k] == p, "edge images must never change"
        for v, p in old_v.items():
            assert set(p) <= set(state.phi_v[v]), "vertex images must only grow"
    state.steps.append(StepRecord(list(ear), l, target, target.depth, rounds))
    log.debug("ear %s: level %d, %d rounds, host %d vertices", ear, target.depth, rounds, host.num_vertices())
    return state


# drivers -----------------------------------------------------------------


def embed(g: PlaneGraph, config: EmbedConfig | None = None, decomposition: EarDecomposition | None = None) -> MinorModel:
    """Minor model of a sub-cubic 2-connected plane graph in the universal graph."""
    config = config or EmbedConfig()
    if not is_two_connected(g):
        raise NotTwoConnected("embed needs a 2-connected graph")
    if not is_subcubic(g):
        raise GraphError("embed needs a sub-cubic graph")
    dec = decomposition or ear_decomposition(g, default_edge_order(g, config.seed))
    state = embed_base(dec.base_cycle, g, config=config)
    for ear, fc in zip(dec.ears, dec.ear_faces):
        embed_ear(state, ear, fc, config)
    assert state.prefix_edges == set(g.edges())
    return MinorModel(g, state.host, {v: list(p) for v, p in state.phi_v.items()}, dict(state.phi_e))


def project_model(model: MinorModel, original: PlaneGraph, witness: ReductionWitness) -> MinorModel:
    """Express a model of the reduced graph as a model of the original."""
    branch_sets = {}
    for v, blow in witness.blowup.items():
        s = set()
        for x in blow:
            s.update(model.branch_sets[x])
        for e, p in model.branch_paths.items():
            if e[0] in blow and e[1] in blow:
                s.update(p)
        branch_sets[v] = sorted(s)
        if original.degree(v) == 0:
            # nothing attaches, so one vertex of the blow-up is enough
            branch_sets[v] = branch_sets[v][:1]
    branch_paths = {}
    for (u, v), path in witness.edge_map.items():
        host_path = []
        for a, b in zip(path, path[1:]):
            seg = model.branch_paths[edge_key(a, b)]
            if edge_key(a, b) != (a, b):
                seg = list(reversed(seg))
            host_path.extend(seg if not host_path else seg[1:])
        branch_paths[edge_key(u, v)] = host_path if (u, v) == edge_key(u, v) else list(reversed(host_path))
    return MinorModel(original, model.host, branch_sets, branch_paths)


def embed_any(g: PlaneGraph, config: EmbedConfig | None = None) -> MinorModel:
    """Minor model of any finite plane graph, via the reduction."""
    reduced, witness = reduce(g)
    model = embed(reduced, config)
    return project_model(model, g, witness)
