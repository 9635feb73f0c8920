"""Finite simple graphs, built-in regular families, and oriented arc spaces.

Graphs are immutable after construction and validated eagerly: simple
(no loops, no parallel edges), symmetric, and connected. All arc-indexed
operators downstream rely on the deterministic lexicographic arc order
fixed here.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    FamilyParameterError,
    GraphFormatError,
    LoopEdgeError,
)


@dataclass(frozen=True)
class Graph:
    """Connected simple undirected graph with sorted neighbor lists."""

    num_vertices: int
    adjacency: tuple[tuple[int, ...], ...]
    num_edges: int
    degree_profile: tuple[int, ...]
    regular_degree: int | None
    family: str | None
    claimed_vertex_transitive: bool

    @property
    def betti_number(self) -> int:
        """m - nu + 1 for a connected graph."""
        return self.num_edges - self.num_vertices + 1

    @property
    def is_regular(self) -> bool:
        return self.regular_degree is not None

    def degree(self, v: int) -> int:
        return self.degree_profile[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Undirected edges as (i, j) with i < j, lexicographic."""
        for i, neighbors in enumerate(self.adjacency):
            for j in neighbors:
                if i < j:
                    yield (i, j)

    def summary(self) -> str:
        name = self.family if self.family is not None else "custom"
        deg = f", {self.regular_degree}-regular" if self.is_regular else ""
        return f"{name}: {self.num_vertices} vertices, {self.num_edges} edges{deg}"


class ArcSpace:
    """The 2m oriented arcs of a graph with the inverse-pairing involution.

    Arcs are ordered lexicographically by (origin, terminus); all arc-indexed
    matrices use this order for rows and columns.
    """

    __slots__ = ("arcs", "inverse", "arc_index")

    def __init__(self, graph: Graph):
        arcs: list[tuple[int, int]] = []
        for i, j in graph.edges():
            arcs.append((i, j))
            arcs.append((j, i))
        arcs.sort()
        index = {arc: k for k, arc in enumerate(arcs)}
        self.arcs: tuple[tuple[int, int], ...] = tuple(arcs)
        self.arc_index: dict[tuple[int, int], int] = index
        self.inverse: tuple[int, ...] = tuple(index[(t, o)] for (o, t) in arcs)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def origin(self, e: int) -> int:
        return self.arcs[e][0]

    def terminus(self, e: int) -> int:
        return self.arcs[e][1]

    def __repr__(self) -> str:
        return f"ArcSpace({self.num_arcs} arcs)"


def arc_space(graph: Graph) -> ArcSpace:
    """Build the oriented arc space of a validated graph."""
    return ArcSpace(graph)


# -- construction and validation -----------------------------------------


def graph_from_edges(
    num_vertices: int,
    edges: Iterable[Sequence[int]],
    family: str | None = None,
    vertex_transitive: bool = False,
) -> Graph:
    """Validate an edge list and build an immutable Graph.

    Raises LoopEdgeError, DuplicateEdgeError, or DisconnectedGraphError for
    the corresponding simplicity/connectivity violations.
    """
    if num_vertices < 1:
        raise GraphFormatError(f"vertex count must be positive, got {num_vertices}")
    seen: set[tuple[int, int]] = set()
    neighbor_sets: list[set[int]] = [set() for _ in range(num_vertices)]
    for edge in edges:
        i, j = int(edge[0]), int(edge[1])
        if not (0 <= i < num_vertices and 0 <= j < num_vertices):
            raise GraphFormatError(f"edge ({i}, {j}) references a vertex outside 0..{num_vertices - 1}")
        if i == j:
            raise LoopEdgeError(f"loop edge ({i}, {j}) is not allowed in a simple graph")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdgeError(f"edge {key} appears more than once")
        seen.add(key)
        neighbor_sets[i].add(j)
        neighbor_sets[j].add(i)

    _require_connected(num_vertices, neighbor_sets)

    adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
    degrees = tuple(len(s) for s in neighbor_sets)
    regular = degrees[0] if len(set(degrees)) == 1 else None
    return Graph(
        num_vertices=num_vertices,
        adjacency=adjacency,
        num_edges=len(seen),
        degree_profile=degrees,
        regular_degree=regular,
        family=family,
        claimed_vertex_transitive=vertex_transitive,
    )


def _require_connected(num_vertices: int, neighbor_sets: Sequence[set[int]]) -> None:
    seen = [False] * num_vertices
    queue = deque([0])
    seen[0] = True
    count = 1
    while queue:
        v = queue.popleft()
        for w in neighbor_sets[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    if count != num_vertices:
        raise DisconnectedGraphError(
            f"graph is not connected: reached {count} of {num_vertices} vertices"
        )


# -- built-in families ------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    """Cycle on n >= 3 vertices (2-regular)."""
    if n < 3:
        raise FamilyParameterError(
            f"cycle needs N >= 3, got {n}: N <= 2 would create a loop or parallel edges"
        )
    edges = [(i, (i + 1) % n) for i in range(n)]
    return graph_from_edges(n, edges, family=f"cycle({n})", vertex_transitive=True)


def torus_graph(d: int, n: int) -> Graph:
    """d-dimensional discrete torus on n^d vertices (2d-regular).

    Requires n >= 3; n = 2 would collapse the two directions per axis into
    parallel edges, breaking the simple-graph assumption.
    """
    if d < 1:
        raise FamilyParameterError(f"torus needs d >= 1, got {d}")
    if n < 3:
        raise FamilyParameterError(
            f"torus needs N >= 3, got {n}: N = 2 creates parallel edges per axis"
        )
    num_vertices = n**d
    strides = [n**k for k in range(d)]

    def index(coords: tuple[int, ...]) -> int:
        return sum(c * s for c, s in zip(coords, strides))

    edges = []
    for coords in product(range(n), repeat=d):
        v = index(coords)
        for axis in range(d):
            shifted = list(coords)
            shifted[axis] = (shifted[axis] + 1) % n
            edges.append((v, index(tuple(shifted))))
    return graph_from_edges(
        num_vertices, edges, family=f"torus({d},{n})", vertex_transitive=True
    )


def complete_graph(n: int) -> Graph:
    """Complete graph on n >= 3 vertices ((n-1)-regular)."""
    if n < 3:
        raise FamilyParameterError(
            f"complete graph needs n >= 3, got {n}: n = 2 is a tree with trivial zeta"
        )
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return graph_from_edges(n, edges, family=f"complete({n})", vertex_transitive=True)


def petersen_graph() -> Graph:
    """The Petersen graph: 10 vertices, 15 edges, 3-regular."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return graph_from_edges(10, edges, family="petersen", vertex_transitive=True)


def hypercube_graph(d: int) -> Graph:
    """d-dimensional hypercube on 2^d vertices (d-regular)."""
    if d < 2:
        raise FamilyParameterError(
            f"hypercube needs d >= 2, got {d}: d = 1 is a single edge (a tree)"
        )
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return graph_from_edges(n, edges, family=f"hypercube({d})", vertex_transitive=True)


def build_family(tag: str, **params: int) -> Graph:
    """Build a named family: cycle(N), torus(d, N), complete(n), petersen, hypercube(d)."""
    if tag == "cycle":
        return cycle_graph(params["N"])
    if tag == "torus":
        return torus_graph(params["d"], params["N"])
    if tag == "complete":
        return complete_graph(params["n"])
    if tag == "petersen":
        return petersen_graph()
    if tag == "hypercube":
        return hypercube_graph(params["d"])
    raise FamilyParameterError(f"unknown graph family {tag!r}")


# -- JSON persistence --------------------------------------------------------


def graph_payload(graph: Graph) -> dict:
    """JSON-ready edge-list form: 0-based ids, i < j per edge, sorted."""
    return {
        "vertices": graph.num_vertices,
        "edges": [[i, j] for i, j in graph.edges()],
        "family": graph.family,
        "vertex_transitive": graph.claimed_vertex_transitive,
    }


def save_graph(graph: Graph, path: str | Path) -> None:
    """Write the JSON edge-list form to a file."""
    text = json.dumps(graph_payload(graph), indent=2, sort_keys=True) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def load_graph(path: str | Path) -> Graph:
    """Load and validate a graph from its JSON edge-list form."""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise GraphFormatError("top-level JSON value must be an object")
    if "vertices" not in payload or "edges" not in payload:
        raise GraphFormatError('missing required keys "vertices" and "edges"')
    vertices = payload["vertices"]
    edges = payload["edges"]
    if not isinstance(vertices, int) or isinstance(vertices, bool):
        raise GraphFormatError('"vertices" must be an integer')
    if not isinstance(edges, list):
        raise GraphFormatError('"edges" must be a list of [i, j] pairs')
    checked = []
    for entry in edges:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise GraphFormatError(f"edge entry {entry!r} is not an [i, j] integer pair")
        i, j = entry
        if i > j:
            raise GraphFormatError(f"edge [{i}, {j}] must be written with i < j")
        checked.append((i, j))
    family = payload.get("family")
    if family is not None and not isinstance(family, str):
        raise GraphFormatError('"family" must be a string or null')
    vertex_transitive = payload.get("vertex_transitive", False)
    if not isinstance(vertex_transitive, bool):
        raise GraphFormatError('"vertex_transitive" must be a boolean')
    return graph_from_edges(vertices, checked, family=family, vertex_transitive=vertex_transitive)
