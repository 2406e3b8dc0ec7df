"""Truncations of the universal plane graph.

Level 0 is a triangle on the sphere.  Going from level ``n - 1`` to ``n``,
every face gets a centre joined to each boundary vertex by a spoke with
``n`` subdivision vertices.  Every vertex and face carries an address that
does not depend on how much of the graph has been built, so faces can be
expanded lazily, one at a time, in any order.

Conventions
-----------
* A face is named by its root (``"A"`` or ``"B"``, the two sides of the
  triangle) and the child indices taken at each level.  Child ``i`` of a
  face is the region between spokes ``i`` and ``i + 1``.
* ``boundary(f)`` lists the boundary vertices of ``f`` with the face
  interior on the left.  For a child face it starts at the parent-boundary
  vertex of smaller index.
* ``Sub(f, j, p)``: the ``p``-th subdivision vertex on spoke ``j`` of ``f``,
  counted from the boundary vertex (``p = 1``) towards the centre.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple

from .planar import FaceCycle, GraphError, PlaneGraph, edge_key

DEFAULT_CAP = 10**7


class TooLarge(GraphError):
    pass


class AlreadyExpanded(GraphError):
    pass


class NotExpanded(GraphError):
    pass


class EqualEnds(GraphError):
    pass


class FaceId(NamedTuple):
    root: str
    path: tuple = ()

    @property
    def depth(self) -> int:
        return len(self.path)

    def child(self, i: int) -> "FaceId":
        return FaceId(self.root, self.path + (i,))

    @property
    def parent(self) -> "FaceId | None":
        return FaceId(self.root, self.path[:-1]) if self.path else None

    def is_within(self, other: "FaceId") -> bool:
        return self.root == other.root and self.path[: len(other.path)] == other.path

    def __str__(self) -> str:
        return ".".join([self.root, *map(str, self.path)])

    @classmethod
    def parse(cls, text: str) -> "FaceId":
        root, *rest = text.split(".")
        if root not in ("A", "B"):
            raise ValueError(f"bad face root in {text!r}")
        return cls(root, tuple(int(x) for x in rest))


ROOTS = (FaceId("A"), FaceId("B"))


class Addr(NamedTuple):
    """Vertex address: kind ``B`` (base), ``C`` (centre) or ``S`` (spoke)."""

    kind: str
    face: FaceId | None = None
    spoke: int = 0
    pos: int = 0

    def __str__(self) -> str:
        if self.kind == "B":
            return f"B:{self.spoke}"
        if self.kind == "C":
            return f"C:{self.face}"
        return f"S:{self.face}:{self.spoke}:{self.pos}"

    @classmethod
    def parse(cls, text: str) -> "Addr":
        kind, _, rest = text.partition(":")
        if kind == "B":
            return base(int(rest))
        if kind == "C":
            return center(FaceId.parse(rest))
        if kind == "S":
            f, j, p = rest.split(":")
            return sub(FaceId.parse(f), int(j), int(p))
        raise ValueError(f"bad address {text!r}")

    @property
    def level(self) -> int:
        """Index of the first truncation containing this vertex."""
        return 0 if self.kind == "B" else self.face.depth + 1


def base(i: int) -> Addr:
    return Addr("B", None, i, 0)


def center(f: FaceId) -> Addr:
    return Addr("C", f, 0, 0)


def sub(f: FaceId, spoke: int, pos: int) -> Addr:
    return Addr("S", f, spoke, pos)


def face_length(depth: int) -> int:
    return 2 * depth + 3


@lru_cache(maxsize=None)
def boundary(f: FaceId) -> tuple:
    """Boundary vertices of ``f`` in order, interior on the left."""
    if not f.path:
        b0, b1, b2 = base(0), base(1), base(2)
        return (b0, b1, b2) if f.root == "A" else (b0, b2, b1)
    parent = f.parent
    pb = boundary(parent)
    m = len(pb)
    i = f.path[-1]
    if not 0 <= i < m:
        raise ValueError(f"child index {i} out of range for {parent}")
    n = parent.depth + 1
    j = (i + 1) % m
    return (
        (pb[i], pb[j])
        + tuple(sub(parent, j, p) for p in range(1, n + 1))
        + (center(parent),)
        + tuple(sub(parent, i, p) for p in range(n, 0, -1))
    )


def valid_face(f: FaceId) -> bool:
    if f.root not in ("A", "B"):
        return False
    for d, i in enumerate(f.path):
        if not 0 <= i < face_length(d):
            return False
    return True


def valid_addr(a: Addr) -> bool:
    if a.kind == "B":
        return a.face is None and 0 <= a.spoke < 3
    if a.face is None or not valid_face(a.face):
        return False
    if a.kind == "C":
        return True
    return a.kind == "S" and 0 <= a.spoke < face_length(a.face.depth) and 1 <= a.pos <= a.face.depth + 1


def census(n: int) -> tuple[int, int, int]:
    """(V, E, F) of level ``n`` without building it."""
    if n < 0:
        raise ValueError("level must be non-negative")
    v, e, f = 3, 3, 2
    for k in range(1, n + 1):
        m = 2 * k + 1  # face length at level k - 1
        v, e, f = v + f * (1 + k * m), e + f * m * (k + 1), f * m
    return v, e, f


def diameter_path(f: FaceId, a: int, b: int) -> list:
    """Vertices of the diameter of ``f`` between boundary vertices a and b."""
    bd = boundary(f)
    m = len(bd)
    if not (0 <= a < m and 0 <= b < m):
        raise IndexError("boundary index out of range")
    if a == b:
        raise EqualEnds("diameter ends must differ")
    n = f.depth + 1
    return (
        [bd[a]]
        + [sub(f, a, p) for p in range(1, n + 1)]
        + [center(f)]
        + [sub(f, b, p) for p in range(n, 0, -1)]
        + [bd[b]]
    )


@dataclass
class Expansion:
    face: FaceId
    center: Addr
    spokes: list  # spokes[j] = [Sub(f, j, 1), ..., Sub(f, j, n)]
    vertices: list
    edges: list
    children: list


class UniversalHost:
    """Lazily materialised part of the universal graph.

    Starts as the base triangle; ``expand_face`` adds one face's centre and
    spokes.  Only faces whose parent is already expanded may be expanded.
    """

    def __init__(self, cap: int = DEFAULT_CAP):
        self.cap = cap
        self.adj: dict[Addr, list] = {base(0): [base(1), base(2)], base(1): [base(0), base(2)], base(2): [base(0), base(1)]}
        self.expanded: dict[FaceId, None] = {}

    def __contains__(self, a) -> bool:
        return a in self.adj

    def num_vertices(self) -> int:
        return len(self.adj)

    def num_edges(self) -> int:
        return sum(len(ns) for ns in self.adj.values()) // 2

    def is_expanded(self, f: FaceId) -> bool:
        return f in self.expanded

    def is_face(self, f: FaceId) -> bool:
        """True when ``f`` currently exists (as a leaf or expanded face)."""
        return f.parent is None or f.parent in self.expanded

    def expand_face(self, f: FaceId) -> Expansion:
        if f in self.expanded:
            raise AlreadyExpanded(str(f))
        if not self.is_face(f):
            raise NotExpanded(f"parent of {f} is not expanded")
        bd = boundary(f)
        n = f.depth + 1
        added = 1 + n * len(bd)
        if len(self.adj) + added > self.cap:
            raise TooLarge(f"vertex cap {self.cap} exceeded")
        c = center(f)
        adj = self.adj
        adj[c] = []
        verts = [c]
        edges = []
        spokes = []
        for j, b in enumerate(bd):
            chain = [b] + [sub(f, j, p) for p in range(1, n + 1)] + [c]
            for p in range(1, n + 1):
                adj[chain[p]] = []
                verts.append(chain[p])
            for x, y in zip(chain, chain[1:]):
                adj[x].append(y)
                adj[y].append(x)
                edges.append((x, y))
            spokes.append(chain[1:-1])
        self.expanded[f] = None
        return Expansion(f, c, spokes, verts, edges, [f.child(i) for i in range(len(bd))])

    def ensure_expanded(self, f: FaceId) -> None:
        """Expand ``f`` and any unexpanded ancestors."""
        chain = []
        g = f
        while g is not None and g not in self.expanded:
            chain.append(g)
            g = g.parent
        for g in reversed(chain):
            self.expand_face(g)

    def expand_all(self, levels: int) -> None:
        frontier = [r for r in ROOTS]
        for _ in range(levels):
            nxt = []
            for f in frontier:
                if f not in self.expanded:
                    self.expand_face(f)
                nxt.extend(f.child(i) for i in range(face_length(f.depth)))
            frontier = nxt

    def leaf_faces(self, within: Iterable[FaceId] | None = None) -> list[FaceId]:
        """Current (unexpanded) faces, optionally inside the given faces."""
        out = []
        stack = list(within) if within is not None else list(ROOTS)
        stack.reverse()
        while stack:
            f = stack.pop()
            if f in self.expanded:
                stack.extend(reversed([f.child(i) for i in range(face_length(f.depth))]))
            else:
                out.append(f)
        return out

    def face_vertices(self, f: FaceId) -> set:
        """Vertices of the closed face ``f`` as currently materialised."""
        return set(self.face_vertex_list(f))

    def face_vertex_list(self, f: FaceId) -> list:
        """Same as :meth:`face_vertices`, in a fixed traversal order."""
        out = list(boundary(f))
        stack = [f]
        while stack:
            g = stack.pop()
            if g not in self.expanded:
                continue
            n = g.depth + 1
            m = face_length(g.depth)
            out.append(center(g))
            out.extend(sub(g, j, p) for j in range(m) for p in range(1, n + 1))
            stack.extend(g.child(i) for i in reversed(range(m)))
        return out

    def interior_vertices(self, f: FaceId) -> set:
        return self.face_vertices(f) - set(boundary(f))

    def max_depth_within(self, f: FaceId) -> int:
        """Depth of the deepest existing face inside ``f``."""
        return max(g.depth for g in self.leaf_faces([f]))

    def plane_graph(self) -> PlaneGraph:
        """Rotation system derived from the corners of the current faces."""
        succ: dict = {v: {} for v in self.adj}
        for f in self.leaf_faces():
            bd = boundary(f)
            m = len(bd)
            for i in range(m):
                succ[bd[i]][bd[i - 1]] = bd[(i + 1) % m]
        rot = {}
        for v, nbrs in self.adj.items():
            s = succ[v]
            start = nbrs[0]
            order = [start]
            w = s[start]
            while w != start:
                order.append(w)
                w = s[w]
            if len(order) != len(nbrs):
                raise AssertionError(f"rotation at {v} is not a single cycle")
            rot[v] = order
        return PlaneGraph(rot)

    def to_json(self) -> dict:
        return {"expanded": [str(f) for f in self.expanded]}

    @classmethod
    def from_expanded(cls, faces: Iterable[str | FaceId], cap: int = DEFAULT_CAP) -> "UniversalHost":
        host = cls(cap=cap)
        for f in faces:
            f = FaceId.parse(f) if isinstance(f, str) else f
            if f not in host.expanded:
                host.ensure_expanded(f)
        return host


@dataclass
class UniversalTruncation:
    level: int
    graph: PlaneGraph
    faces: dict  # FaceId -> FaceCycle
    host: UniversalHost = field(repr=False)

    def counts(self) -> tuple[int, int, int]:
        return self.graph.num_vertices(), self.graph.num_edges(), len(self.faces)

    def to_json(self) -> dict:
        g = self.graph
        return {
            "level": self.level,
            "vertices": [str(v) for v in g.vertices],
            "edges": [[str(u), str(v)] for u, v in g.edges()],
            "rotation": {str(v): [str(w) for w in ns] for v, ns in g.rotation.items()},
            "addresses": {str(f): [str(v) for v in fc.vertices] for f, fc in self.faces.items()},
        }


def generate(n: int, cap: int = DEFAULT_CAP) -> UniversalTruncation:
    """Eagerly build level ``n``."""
    if n < 0:
        raise ValueError("level must be non-negative")
    v, _, _ = census(n)
    if v > cap:
        raise TooLarge(f"level {n} has {v} vertices, over the cap of {cap}")
    host = UniversalHost(cap=cap)
    host.expand_all(n)
    g = host.plane_graph()
    index = {}
    for f in host.leaf_faces():
        bd = boundary(f)
        index[f] = FaceCycle(tuple((bd[i], bd[(i + 1) % len(bd)]) for i in range(len(bd))))
    return UniversalTruncation(n, g, index, host)


def expand_face(t: UniversalTruncation | UniversalHost, f: FaceId) -> Expansion:
    host = t.host if isinstance(t, UniversalTruncation) else t
    return host.expand_face(f)


def diameters_of_face(host: UniversalHost, f: FaceId, ends: tuple[int, int]) -> list:
    if f not in host.expanded:
        raise NotExpanded(f"{f} has not been expanded")
    return diameter_path(f, *ends)


# slices and pieces ------------------------------------------------------


@dataclass(frozen=True)
class SliceRef:
    """A face of the host, optionally cut along one of its diameters.

    ``side == 0`` keeps the children ``a, a+1, ..., b-1`` of ``face``,
    ``side == 1`` the children ``b, ..., a-1`` (indices mod the face length).
    ``depth`` is how many levels below the face to materialise when a
    standalone subgraph is requested.
    """

    face: FaceId
    diameter: tuple | None = None
    side: int = 0
    depth: int = 1

    def faces(self) -> list[FaceId]:
        if self.diameter is None:
            return [self.face]
        m = face_length(self.face.depth)
        a, b = self.diameter
        lo, hi = (a, b) if self.side == 0 else (b, a)
        out = []
        i = lo
        while i != hi:
            out.append(self.face.child(i))
            i = (i + 1) % m
        return out

    def boundary(self) -> list:
        """Boundary cycle of the region, interior on the left."""
        if self.diameter is None:
            return list(boundary(self.face))
        bd = boundary(self.face)
        m = len(bd)
        a, b = self.diameter
        lo, hi = (a, b) if self.side == 0 else (b, a)
        arc = []
        i = lo
        while True:
            arc.append(bd[i])
            if i == hi:
                break
            i = (i + 1) % m
        d = diameter_path(self.face, lo, hi)
        return arc + list(reversed(d[1:-1]))

    def to_json(self) -> dict:
        return {
            "face": str(self.face),
            "diameter": list(self.diameter) if self.diameter else None,
            "side": self.side,
        }


def region_vertices(host: UniversalHost, faces: Iterable[FaceId]) -> set:
    out = set()
    for f in faces:
        out |= host.face_vertices(f)
    return out


def cycle_edges(cycle: list) -> set:
    return {edge_key(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}


def region_adjacency(host: UniversalHost, faces: Iterable[FaceId], bd: list, drop: Iterable = ()) -> dict:
    """Adjacency of a closed region without its boundary edges.

    No edge joins two region vertices from outside the region (every edge
    besides the base triangle is a subdivided spoke), so inducing on the
    vertex set and removing the boundary cycle is enough.
    """
    drop = set(drop)
    order = dict.fromkeys(v for f in faces for v in host.face_vertex_list(f) if v not in drop)
    bd_edges = cycle_edges(bd)
    return {
        v: [w for w in host.adj[v] if w in order and edge_key(v, w) not in bd_edges]
        for v in order
    }


def _materialise(host: UniversalHost, faces: list[FaceId], depth: int) -> None:
    frontier = list(faces)
    for _ in range(depth):
        nxt = []
        for f in frontier:
            if f not in host.expanded:
                host.expand_face(f)
            nxt.extend(f.child(i) for i in range(face_length(f.depth)))
        frontier = nxt


def _projected(faces: list[FaceId], depth: int) -> int:
    total = 0
    counts = {f.depth: 0 for f in faces}
    for f in faces:
        counts[f.depth] += 1
    for d0, cnt in counts.items():
        k = cnt
        for d in range(d0, d0 + depth):
            m = face_length(d)
            total += k * (1 + (d + 1) * m)
            k *= m
    return total


def slice_subgraph(s: SliceRef, host: UniversalHost | None = None, cap: int = DEFAULT_CAP) -> PlaneGraph:
    """Materialise the slice ``depth`` levels deep and return it.

    Contains the boundary vertices, none of the boundary edges, and no base
    vertex.  The returned graph's rotation is inherited from the host.
    """
    if s.depth < 1:
        raise ValueError("slice depth must be at least 1")
    host = host or UniversalHost(cap=cap)
    faces = s.faces()
    if _projected(faces, s.depth) + host.num_vertices() > cap:
        raise TooLarge("slice exceeds vertex cap")
    if s.diameter is not None:
        host.ensure_expanded(s.face)
    else:
        if s.face.parent is not None:
            host.ensure_expanded(s.face.parent)
    _materialise(host, faces, s.depth)
    bases = {base(0), base(1), base(2)}
    adj = region_adjacency(host, faces, s.boundary(), drop=bases)
    rot = host.plane_graph().restrict((u, v) for u in adj for v in adj[u])
    return PlaneGraph({v: rot.rotation.get(v, ()) for v in adj})


def piece(f: FaceId, strip: bool = False, depth: int = 1, host: UniversalHost | None = None, cap: int = DEFAULT_CAP) -> PlaneGraph:
    """Closed face ``f`` intersected with the graph, ``depth`` levels deep.

    With ``strip`` the boundary of ``f`` (its vertices and edges) is removed.
    """
    host = host or UniversalHost(cap=cap)
    if _projected([f], depth) + host.num_vertices() > cap:
        raise TooLarge("piece exceeds vertex cap")
    if f.parent is not None:
        host.ensure_expanded(f.parent)
    _materialise(host, [f], depth)
    verts = host.face_vertices(f)
    bd = boundary(f)
    if strip:
        verts -= set(bd)
        bd_edges = set()
    else:
        bd_edges = cycle_edges(list(bd))
    interior_edges = set()
    for v in verts:
        for w in host.adj[v]:
            if w in verts:
                interior_edges.add(edge_key(v, w))
    # keep boundary edges of f, drop any other edge between boundary vertices
    keep = {e for e in interior_edges if not (e[0] in bd and e[1] in bd) or e in bd_edges}
    rot = host.plane_graph().restrict(keep)
    return PlaneGraph({v: rot.rotation.get(v, ()) for v in sorted(verts)})
