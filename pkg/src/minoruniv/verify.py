"""Independent checks: inflated-copy validation, a brute-force minor oracle,
and sampled connectivity of slices.

Nothing here calls into the embedder.  Models are read as plain mappings
from input vertices and edges to host vertices, and the host is only used
through its adjacency.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Mapping

from .planar import GraphError, PlaneGraph, edge_key, local_connectivity
from .universal import Addr, FaceId, SliceRef, UniversalHost, region_adjacency


class DanglingAddress(GraphError):
    """A model refers to a host vertex that does not exist."""


class CapExceeded(GraphError):
    pass


CONDITIONS = ("i", "ii", "iii", "iv")


def _adjacency(host) -> Mapping:
    if isinstance(host, PlaneGraph):
        return host.rotation
    if isinstance(host, UniversalHost):
        return host.adj
    return host


def _graph_parts(g) -> tuple[list, set]:
    if isinstance(g, PlaneGraph):
        return list(g.vertices), set(g.edges())
    adj = _adjacency(g)
    return list(adj), {edge_key(u, v) for u in adj for v in adj[u]}


# inflated copies -----------------------------------------------------------


@dataclass
class ConditionResult:
    ok: bool
    witness: Any = None
    message: str = ""


@dataclass
class InflatedCopyReport:
    conditions: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.conditions.values())

    def failures(self) -> list[str]:
        return [c for c, r in self.conditions.items() if not r.ok]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "conditions": {
                c: {"ok": r.ok, "witness": None if r.witness is None else str(r.witness), "message": r.message}
                for c, r in self.conditions.items()
            },
        }


def _components(verts: set, adj: Mapping) -> list[set]:
    left = set(verts)
    out = []
    while left:
        start = min(left, key=str)
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in left and y not in seen:
                    seen.add(y)
                    queue.append(y)
        left -= seen
        out.append(seen)
    return out


def check_inflated_copy(model, g=None, host=None) -> InflatedCopyReport:
    """Check the four inflated-copy conditions for a minor model.

    (i)   every branch set is non-empty and connected;
    (ii)  every branch path is a simple host path from the branch set of one
          end to the branch set of the other;
    (iii) branch sets and branch-path interiors are pairwise disjoint;
    (iv)  the model covers exactly the vertices and edges of ``g``.

    ``model`` needs ``branch_sets`` and ``branch_paths`` attributes (or
    keys).  ``g`` and ``host`` default to the model's own.
    """
    sets = model["branch_sets"] if isinstance(model, Mapping) else model.branch_sets
    paths = model["branch_paths"] if isinstance(model, Mapping) else model.branch_paths
    if g is None:
        g = model.graph
    if host is None:
        host = model.host
    adj = _adjacency(host)
    for owner, image in itertools.chain(sets.items(), paths.items()):
        for a in image:
            if a not in adj:
                raise DanglingAddress(f"{a} (image of {owner}) is not a host vertex")

    g_vertices, g_edges = _graph_parts(g)
    report = InflatedCopyReport()
    res = report.conditions

    # (i)
    res["i"] = ConditionResult(True)
    for v in g_vertices:
        s = set(sets.get(v, ()))
        if not s:
            res["i"] = ConditionResult(False, v, f"branch set of {v} is empty")
            break
        comps = _components(s, adj)
        if len(comps) > 1:
            stray = min(comps[1], key=str)
            res["i"] = ConditionResult(False, stray, f"branch set of {v} is disconnected at {stray}")
            break

    # (ii)
    res["ii"] = ConditionResult(True)
    for e in sorted(g_edges, key=str):
        p = list(paths.get(e, ()))
        u, v = e
        bad = None
        if len(p) < 2:
            bad = (e, "missing or too short")
        elif len(set(p)) != len(p):
            bad = (e, "repeats a vertex")
        elif any(y not in adj[x] for x, y in zip(p, p[1:])):
            x, y = next((x, y) for x, y in zip(p, p[1:]) if y not in adj[x])
            bad = ((x, y), f"path of {e} uses a non-edge")
        else:
            su, sv = set(sets.get(u, ())), set(sets.get(v, ()))
            if not ((p[0] in su and p[-1] in sv) or (p[0] in sv and p[-1] in su)):
                bad = (e, "ends are not in the end branch sets")
        if bad:
            res["ii"] = ConditionResult(False, bad[0], bad[1])
            break

    # (iii)
    res["iii"] = ConditionResult(True)
    claimed: dict = {}
    clash = None
    for v in g_vertices:
        for a in sets.get(v, ()):
            if a in claimed and claimed[a] != ("v", v):
                clash = (a, claimed[a], ("v", v))
                break
            claimed[a] = ("v", v)
        if clash:
            break
    if not clash:
        for e in sorted(g_edges, key=str):
            for a in list(paths.get(e, ()))[1:-1]:
                if a in claimed:
                    clash = (a, claimed[a], ("e", e))
                    break
                claimed[a] = ("e", e)
            if clash:
                break
    if clash:
        a, first, second = clash
        res["iii"] = ConditionResult(False, a, f"{a} lies in the images of {first[1]} and {second[1]}")

    # (iv)
    res["iv"] = ConditionResult(True)
    extra_v = [v for v in sets if v not in set(g_vertices)]
    extra_e = [e for e in paths if edge_key(*e) not in g_edges]
    missing = [v for v in g_vertices if v not in sets] + [e for e in g_edges if e not in paths]
    if extra_v or extra_e:
        w = (extra_v + extra_e)[0]
        res["iv"] = ConditionResult(False, w, f"model has an image for {w}, which is not in the graph")
    elif missing:
        res["iv"] = ConditionResult(False, missing[0], f"{missing[0]} has no image")
    return report


def model_from_json(data: Mapping):
    """Rebuild (graph, host, branch_sets, branch_paths) from a model file.

    Returns a plain namespace-like dict.  Addresses are resolved against a
    host rebuilt from the list of expanded faces.
    """
    from .planar import from_json

    g = from_json(data["input"])
    host = UniversalHost.from_expanded(FaceId.parse(f) for f in data["host_level_map"]["expanded"])
    by_name = {str(v): v for v in g.vertices}

    def addr(text):
        try:
            return Addr.parse(text)
        except (ValueError, KeyError) as exc:
            raise DanglingAddress(f"unparseable address {text!r}") from exc

    sets = {}
    for k, vs in data["branch_sets"].items():
        if k not in by_name:
            raise GraphError(f"branch set for unknown vertex {k!r}")
        sets[by_name[k]] = [addr(a) for a in vs]
    paths = {}
    for k, ps in data["branch_paths"].items():
        a, _, b = k.partition("-")
        if a not in by_name or b not in by_name:
            raise GraphError(f"branch path for unknown edge {k!r}")
        paths[edge_key(by_name[a], by_name[b])] = [addr(x) for x in ps]
    return {"graph": g, "host": host, "branch_sets": sets, "branch_paths": paths}


# brute-force minor oracle --------------------------------------------------


@dataclass
class MinorResult:
    found: bool
    branch_sets: dict | None = None

    def __bool__(self) -> bool:
        return self.found


def _simplify(adj: dict, min_deg: int) -> tuple[dict, dict]:
    """Drop host vertices that cannot matter for a pattern of minimum degree
    ``min_deg``.  Returns the smaller host and, for each kept vertex, the
    original vertices merged into it."""
    adj = {v: set(ns) for v, ns in adj.items()}
    merged = {v: {v} for v in adj}
    changed = True
    while changed:
        changed = False
        for v in sorted(adj, key=str):
            d = len(adj[v])
            if min_deg >= 2 and d <= 1:
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v]
                del merged[v]
                changed = True
                break
            if min_deg >= 3 and d == 2:
                a, b = sorted(adj[v], key=str)
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                merged[a] |= merged.pop(v)
                del adj[v]
                changed = True
                break
    return adj, merged


def _connected_sets(adj: dict, seeds: list, allowed: set, limit: int):
    """All connected vertex sets within ``allowed`` meeting ``seeds``, each once,
    of size at most ``limit``."""
    seen = set()
    order = {v: i for i, v in enumerate(sorted(adj, key=str))}
    for s in sorted(seeds, key=order.get):
        if s not in allowed:
            continue
        # sets whose least seed (in ``order``) is s
        ok = {x for x in allowed if x not in seeds or order[x] >= order[s]}
        stack = [(frozenset([s]), frozenset(w for w in adj[s] if w in ok))]
        while stack:
            cur, ext = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            yield cur
            if len(cur) >= limit:
                continue
            ext_list = sorted(ext, key=order.get)
            for i, w in enumerate(ext_list):
                nxt = cur | {w}
                new_ext = (ext - set(ext_list[: i + 1])) | {y for y in adj[w] if y in ok and y not in nxt}
                stack.append((nxt, frozenset(new_ext - nxt)))


def brute_force_minor(host, g, host_cap: int = 20, pattern_cap: int = 6) -> MinorResult:
    """Decide by exhaustive search whether ``g`` is a minor of ``host``.

    Branch sets are grown one pattern vertex at a time; each must touch the
    sets already placed for its neighbours and have enough outside
    neighbours for its degree.  On success the returned branch sets are in
    terms of the original host vertices.
    """
    hadj = {v: set(ns) for v, ns in _adjacency(host).items()}
    g_vertices, g_edges = _graph_parts(g)
    if len(hadj) > host_cap:
        raise CapExceeded(f"host has {len(hadj)} vertices, cap is {host_cap}")
    if len(g_vertices) > pattern_cap:
        raise CapExceeded(f"pattern has {len(g_vertices)} vertices, cap is {pattern_cap}")
    if not g_vertices:
        return MinorResult(True, {})
    gadj = {v: set() for v in g_vertices}
    for u, v in g_edges:
        gadj[u].add(v)
        gadj[v].add(u)
    min_deg = min(len(ns) for ns in gadj.values())
    adj, merged = _simplify(hadj, min_deg)
    n_edges = sum(len(ns) for ns in adj.values()) // 2
    if len(adj) < len(g_vertices) or n_edges < len(g_edges):
        return MinorResult(False)

    # pattern order: each vertex after the first has an earlier neighbour if possible
    order = []
    rest = set(g_vertices)
    while rest:
        start = max(sorted(rest, key=str), key=lambda v: len(gadj[v]))
        queue = deque([start])
        rest.discard(start)
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(gadj[x], key=str):
                if y in rest:
                    rest.discard(y)
                    queue.append(y)
    k = len(order)
    all_host = set(adj)

    def search(i: int, placed: dict, free: set):
        if i == k:
            return dict(placed)
        v = order[i]
        earlier = [u for u in gadj[v] if u in placed]
        later = k - i - 1
        limit = len(free) - later
        if earlier:
            first = placed[earlier[0]]
            seeds = sorted({w for x in first for w in adj[x] if w in free}, key=str)
        else:
            seeds = sorted(free, key=str)
        for s in _connected_sets(adj, seeds, free, limit):
            touching = {w for x in s for w in adj[x]} - s
            if any(not (touching & placed[u]) for u in earlier):
                continue
            if len(touching) < len(gadj[v]):
                continue
            placed[v] = s
            found = search(i + 1, placed, free - s)
            if found is not None:
                return found
            del placed[v]
        return None

    found = search(0, {}, all_host)
    if found is None:
        return MinorResult(False)
    # each kept vertex stands for a connected group of host vertices, and a
    # kept edge for an adjacency between groups, so unions lift directly
    lifted = {}
    for v, s in found.items():
        out = set()
        for x in s:
            out |= merged[x]
        lifted[v] = sorted(out, key=str)
    return MinorResult(True, lifted)


def is_minor_model(host, g, branch_sets: Mapping) -> bool:
    """True if disjoint connected ``branch_sets`` realise every edge of ``g``."""
    adj = _adjacency(host)
    seen = set()
    for v, s in branch_sets.items():
        s = set(s)
        if not s or s & seen or len(_components(s, adj)) != 1:
            return False
        seen |= s
    _, g_edges = _graph_parts(g)
    for u, v in g_edges:
        sv = set(branch_sets[v])
        if not any(w in sv for x in branch_sets[u] for w in adj[x]):
            return False
    return True


# slice connectivity probe ----------------------------------------------------


@dataclass
class ProbeReport:
    n: int
    depth: int
    trials: int
    seed: int
    pairs: list  # (a, b) as address strings
    cuts: dict  # depth -> list of cuts, one per pair
    min_cut: dict  # depth -> minimum over the pairs
    sufficient: dict  # depth -> whether min cut reached n + 3
    monotone: bool

    @property
    def target(self) -> int:
        return self.n + 3

    @property
    def ok(self) -> bool:
        """Monotone, and the deepest level reached the target."""
        return self.monotone and self.sufficient.get(self.depth, False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "depth": self.depth,
            "trials": self.trials,
            "seed": self.seed,
            "target": self.target,
            "pairs": [list(p) for p in self.pairs],
            "min_cut": {str(d): c for d, c in self.min_cut.items()},
            "status": {str(d): ("ok" if s else "insufficient depth") for d, s in self.sufficient.items()},
            "monotone": self.monotone,
        }


def probe_face(n: int) -> FaceId:
    """A representative face of level ``n``: first children from root A."""
    return FaceId("A", (0,) * n)


def slice_connectivity_probe(n: int, depth: int, trials: int, seed: int, diameter: tuple | None = None,
                             cap: int = 2_000_000) -> ProbeReport:
    """Sample non-adjacent pairs of level at most n + 1 in an n-slice and
    record their local connectivity at every materialised depth 1..depth.

    The slice is ``probe_face(n)``, optionally cut along ``diameter``; base
    vertices and boundary edges are left out.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    rng = random.Random(seed)
    f = probe_face(n)
    host = UniversalHost(cap=cap)
    ref = SliceRef(f, diameter, 0, depth)
    if diameter is not None:
        host.ensure_expanded(f)
    elif f.parent is not None:
        host.ensure_expanded(f.parent)
    regions = ref.faces()
    bd = ref.boundary()
    bases = {Addr("B", None, i, 0) for i in range(3)}

    frontier = list(regions)
    cuts: dict = {}
    pairs: list = []
    for d in range(1, depth + 1):
        nxt = []
        for face in frontier:
            if face not in host.expanded:
                host.expand_face(face)
            nxt.extend(face.child(i) for i in range(2 * face.depth + 3))
        frontier = nxt
        adj = region_adjacency(host, regions, bd, drop=bases)
        if d == 1:
            cand = sorted((a for a in adj if a.level <= n + 1), key=str)
            possible = [(a, b) for a, b in itertools.combinations(cand, 2) if b not in adj[a]]
            if not possible:
                raise GraphError("no non-adjacent pairs to sample")
            pairs = [possible[rng.randrange(len(possible))] for _ in range(trials)]
        cuts[d] = [local_connectivity(adj, a, b) for a, b in pairs]
    min_cut = {d: min(c) for d, c in cuts.items()}
    monotone = all(
        cuts[d + 1][i] >= cuts[d][i] for d in range(1, depth) for i in range(len(pairs))
    )
    sufficient = {d: c >= n + 3 for d, c in min_cut.items()}
    return ProbeReport(n, depth, trials, seed, [(str(a), str(b)) for a, b in pairs], cuts, min_cut, sufficient, monotone)


# small hosts for the oracle ---------------------------------------------------


def shrink_model(model, limit: int = 20) -> tuple[dict, dict, dict]:
    """Contract a model's image down to at most ``limit`` vertices.

    Starts from the host subgraph induced on the image and contracts edges
    that lie inside a single image element (a branch set, or the interior
    of a branch path), longest elements first.  Contracting inside an
    element keeps the model valid, so the result is a minor of the host
    together with a model of the same graph.  Returns ``(adj, sets, paths)``.
    """
    full = _adjacency(model.host)
    sets = {v: list(s) for v, s in model.branch_sets.items()}
    paths = {e: list(p) for e, p in model.branch_paths.items()}
    verts = set().union(*map(set, sets.values()), *map(set, paths.values()))
    adj = {x: {y for y in full[x] if y in verts} for x in verts}

    def merge(keep, gone):
        for y in adj.pop(gone):
            if y != keep:
                adj[y].discard(gone)
                adj[y].add(keep)
                adj[keep].add(y)
        adj[keep].discard(gone)
        adj[keep].discard(keep)

    def step() -> bool:
        # a path interior of two or more vertices shrinks first
        best = None
        for e in sorted(paths, key=str):
            p = paths[e]
            if len(p) >= 4 and (best is None or len(p) > len(paths[best])):
                best = e
        if best is not None:
            p = paths[best]
            merge(p[1], p[2])
            del p[2]
            return True
        for v in sorted(sets, key=str):
            s = sets[v]
            if len(s) < 2:
                continue
            inside = set(s)
            for x in sorted(s, key=str):
                y = next((y for y in sorted(adj[x], key=str) if y in inside and y != x), None)
                if y is not None:
                    merge(x, y)
                    s.remove(y)
                    for p in paths.values():
                        p[:] = [x if z == y else z for z in p]
                    return True
        # finally absorb single path interiors into an end branch set
        for e in sorted(paths, key=str):
            p = paths[e]
            if len(p) == 3:
                merge(p[0], p[1])
                del p[1]
                return True
        return False

    while len(adj) > limit and step():
        pass
    return {x: sorted(ns, key=str) for x, ns in adj.items()}, sets, paths
