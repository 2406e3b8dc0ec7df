"""Small named plane graphs used by tests, scripts and the CLI."""

from __future__ import annotations

import itertools

import networkx as nx

from .planar import PlaneGraph, build_embedding


def cycle(n: int) -> PlaneGraph:
    return build_embedding(range(n), [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> PlaneGraph:
    return build_embedding(range(n), [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> PlaneGraph:
    return build_embedding(range(n), itertools.combinations(range(n), 2))


def k4() -> PlaneGraph:
    return complete(4)


def star(k: int) -> PlaneGraph:
    """K_{1,k} with centre 0."""
    return build_embedding(range(k + 1), [(0, i) for i in range(1, k + 1)])


def wheel(k: int) -> PlaneGraph:
    """Hub 0 joined to the rim cycle 1..k."""
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    return build_embedding(range(k + 1), [(0, i) for i in range(1, k + 1)] + rim)


def prism() -> PlaneGraph:
    return build_embedding(range(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def cube() -> PlaneGraph:
    return build_embedding(range(8), [(a, b) for a, b in itertools.combinations(range(8), 2) if bin(a ^ b).count("1") == 1])


def octahedron() -> PlaneGraph:
    return build_embedding(range(6), [(a, b) for a, b in itertools.combinations(range(6), 2) if a // 2 != b // 2])


def truncated_tetrahedron() -> PlaneGraph:
    """Each corner i of K4 becomes a triangle on the darts (i, j)."""
    darts = [(i, j) for i in range(4) for j in range(4) if i != j]
    idx = {d: k for k, d in enumerate(darts)}
    edges = [(idx[(i, a)], idx[(i, b)]) for i in range(4) for a, b in itertools.combinations([j for j in range(4) if j != i], 2)]
    edges += [(idx[(i, j)], idx[(j, i)]) for i, j in itertools.combinations(range(4), 2)]
    return build_embedding(range(12), edges)


def grid(rows: int, cols: int) -> PlaneGraph:
    def v(r, c):
        return r * cols + c

    edges = [(v(r, c), v(r, c + 1)) for r in range(rows) for c in range(cols - 1)]
    edges += [(v(r, c), v(r + 1, c)) for r in range(rows - 1) for c in range(cols)]
    return build_embedding(range(rows * cols), edges)


def trees(n: int) -> list[PlaneGraph]:
    """All unlabelled trees on ``n`` vertices, vertices 0..n-1."""
    if n == 1:
        return [build_embedding([0], [])]
    return [build_embedding(range(n), sorted(t.edges())) for t in nx.nonisomorphic_trees(n)]


def subcubic_two_connected() -> dict[str, PlaneGraph]:
    out = {f"C{n}": cycle(n) for n in range(3, 9)}
    out.update(K4=k4(), prism=prism(), cube=cube(), truncated_tetrahedron=truncated_tetrahedron())
    return out


def general() -> dict[str, PlaneGraph]:
    """Planar inputs that need the reduction first."""
    out = {"K1,3": star(3), "K1,4": star(4), "W6": wheel(6)}
    for n in range(1, 8):
        for i, t in enumerate(trees(n)):
            out[f"T{n}.{i}"] = t
    return out


NAMED = {
    "C3": lambda: cycle(3),
    "C4": lambda: cycle(4),
    "C5": lambda: cycle(5),
    "K4": k4,
    "K5": lambda: complete(5),
    "prism": prism,
    "cube": cube,
    "octahedron": octahedron,
    "truncated_tetrahedron": truncated_tetrahedron,
    "W4": lambda: wheel(4),
    "W5": lambda: wheel(5),
    "W6": lambda: wheel(6),
    "K1,3": lambda: star(3),
    "K1,4": lambda: star(4),
    "grid5": lambda: grid(5, 5),
}
