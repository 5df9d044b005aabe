"""Graphs, multigraphs and the structural transforms composed by the constructions.

Vertices are always dense 0-based integers. Values are immutable; every
function here returns a new object.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import BoxicityError

Edge = tuple[int, int]

HYPERCUBE_CAP = 20


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is kept sorted with ``u < v`` in each pair, so two graphs with
    the same edge set compare equal. The position of an edge in ``edges`` is
    its edge index (used by :func:`full_subdivision`).
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise BoxicityError(f"negative vertex count {self.n}")
        norm = []
        for u, v in self.edges:
            if u == v:
                raise BoxicityError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise BoxicityError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.append(_norm(u, v))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise BoxicityError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(norm))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def non_edges(self) -> list[Edge]:
        es = self.edge_set
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if (u, v) not in es]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


@dataclass(frozen=True)
class Multigraph:
    """Loop-free multigraph. Edge ``j`` is ``edges[j]``; parallel edges allowed."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise BoxicityError(f"negative vertex count {self.n}")
        norm = []
        for u, v in self.edges:
            if u == v:
                raise BoxicityError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise BoxicityError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.append(_norm(u, v))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def max_degree(self) -> int:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return max(deg, default=0)


@dataclass(frozen=True)
class Coloring:
    """Proper vertex coloring; ``color_of[v]`` is a class index in ``0..c-1``."""

    color_of: tuple[int, ...]
    c: int

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.c)]
        for v, col in enumerate(self.color_of):
            out[col].append(v)
        return tuple(tuple(cls) for cls in out)

    def is_proper_for(self, g: Graph) -> bool:
        if len(self.color_of) != g.n:
            return False
        if any(not 0 <= col < self.c for col in self.color_of):
            return False
        if any(len(cls) == 0 for cls in self.classes):
            return False
        return all(self.color_of[u] != self.color_of[v] for u, v in g.edges)


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint nonempty blocks covering ``0..n-1``, ordered by minimum vertex."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else -1)
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise BoxicityError("empty block in partition")
            if seen.intersection(b):
                raise BoxicityError("blocks of a partition must be disjoint")
            seen.update(b)
        if seen != set(range(len(seen))):
            raise BoxicityError("partition blocks must cover 0..n-1")
        object.__setattr__(self, "blocks", tuple(blocks))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_of(self) -> list[int]:
        where = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                where[v] = i
        return where


def from_edge_list(n: int, pairs: Iterable[Sequence[int]], multi: bool = False) -> Graph | Multigraph:
    """Build a :class:`Graph` (duplicates are an error) or a :class:`Multigraph`."""
    edges = tuple((int(u), int(v)) for u, v in pairs)
    if multi:
        return Multigraph(n, edges)
    return Graph(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BoxicityError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def line_graph(h: Multigraph) -> tuple[Graph, list[int]]:
    """Line graph of ``h``: edge ``j`` of ``h`` becomes vertex ``j``.

    Parallel edges share both endpoints, so they become adjacent vertices.
    """
    incident: list[list[int]] = [[] for _ in range(h.n)]
    for j, (u, v) in enumerate(h.edges):
        incident[u].append(j)
        incident[v].append(j)
    edges = set()
    for inc in incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                edges.add(_norm(inc[a], inc[b]))
    return Graph(h.m, tuple(edges)), list(range(h.m))


def full_subdivision(h: Graph) -> tuple[Graph, list[int]]:
    """Subdivide every edge once. Edge ``j`` becomes vertex ``h.n + j``."""
    edges = []
    for j, (u, v) in enumerate(h.edges):
        w = h.n + j
        edges.append((u, w))
        edges.append((v, w))
    return Graph(h.n + h.m, tuple(edges)), [h.n + j for j in range(h.m)]


def _check_subset(g: Graph, s: Iterable[int]) -> list[int]:
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise BoxicityError(f"vertex {v} out of range for n={g.n}")
    return verts


def square_on(g: Graph, s: Iterable[int]) -> Graph:
    """The subgraph of the square of ``g`` induced on ``s``.

    Vertices of ``s`` are relabeled in ascending order, as in
    :func:`induced_subgraph`.
    """
    verts = _check_subset(g, s)
    index = {v: i for i, v in enumerate(verts)}
    edges = set()
    for v in verts:
        reach = set(g.adj[v])
        for w in g.adj[v]:
            reach |= g.adj[w]
        for u in reach:
            if u != v and u in index:
                edges.add(_norm(index[u], index[v]))
    return Graph(len(verts), tuple(edges))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph with an order-preserving relabeling ``old -> new``."""
    verts = _check_subset(g, s)
    index = {v: i for i, v in enumerate(verts)}
    edges = tuple((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    return Graph(len(verts), edges), index


def greedy_coloring(g: Graph, order: Sequence[int] | None = None) -> Coloring:
    """First-fit coloring along ``order`` (ascending ids by default)."""
    if order is None:
        order = range(g.n)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise BoxicityError("coloring order must be a permutation of the vertices")
    color = [-1] * g.n
    for v in order:
        used = {color[w] for w in g.adj[v]}
        col = 0
        while col in used:
            col += 1
        color[v] = col
    # first-fit never skips a color, so classes 0..c-1 are all nonempty
    return Coloring(tuple(color), max(color, default=-1) + 1)


def critical_clique_partition(g: Graph) -> VertexPartition:
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.closed_neighborhood(v), []).append(v)
    return VertexPartition(tuple(tuple(b) for b in groups.values()))


def quotient_by_partition(g: Graph, part: VertexPartition) -> tuple[Graph, list[int]]:
    """Collapse each block to its minimum vertex.

    Every block must consist of true twins (identical closed neighborhoods),
    which is the same as being a clique with uniform outside neighbors.
    """
    if part.n != g.n:
        raise BoxicityError("partition does not match the graph's vertex count")
    reps = [b[0] for b in part.blocks]
    for b in part.blocks:
        nb = g.closed_neighborhood(b[0])
        if any(g.closed_neighborhood(v) != nb for v in b[1:]):
            raise BoxicityError(f"block {b} is not a critical-clique block")
    q, _ = induced_subgraph(g, reps)
    return q, reps


def hypercube(d: int, cap: int = HYPERCUBE_CAP) -> Graph:
    """The ``d``-cube on bit strings ``0..2**d - 1``."""
    if d < 0:
        raise BoxicityError("dimension must be non-negative")
    if d > cap:
        raise BoxicityError(f"hypercube dimension {d} exceeds cap {cap}")
    edges = tuple((v, v | (1 << b)) for v in range(1 << d) for b in range(d) if not v >> b & 1)
    return Graph(1 << d, edges)


def check_isomorphism(g: Graph, h: Graph, mapping: Mapping[int, int] | Sequence[int]) -> bool:
    """True iff ``mapping`` (vertex of g -> vertex of h) is an isomorphism."""
    if g.n != h.n or g.m != h.m:
        return False
    image = [mapping[v] for v in range(g.n)]
    if sorted(image) != list(range(h.n)):
        return False
    return all(h.has_edge(image[u], image[v]) for u, v in g.edges)


def hypercube_subdivision_isomorphism(d: int) -> tuple[Graph, Graph, dict[int, int]]:
    """Map the weight-1/weight-2 part of the ``d``-cube onto the subdivided ``K_d``.

    Returns ``(cube_part, subdivided, mapping)`` where ``cube_part`` is the
    induced subgraph (relabeled in ascending bit-string order) and
    ``mapping`` sends its vertices to the vertices of ``full_subdivision(K_d)``.
    """
    cube = hypercube(d)
    chosen = [v for v in range(cube.n) if bin(v).count("1") in (1, 2)]
    part, index = induced_subgraph(cube, chosen)
    kd = complete_graph(d)
    sub, edge_vertex = full_subdivision(kd)
    edge_pos = {e: j for j, e in enumerate(kd.edges)}
    mapping = {}
    for v in chosen:
        bits = [b for b in range(d) if v >> b & 1]
        if len(bits) == 1:
            mapping[index[v]] = bits[0]
        else:
            mapping[index[v]] = edge_vertex[edge_pos[(bits[0], bits[1])]]
    return part, sub, mapping


def is_odd_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.n % 2 == 1 and all(len(a) == 2 for a in g.adj) and len(g.components()) == 1


def cycle_order(g: Graph) -> list[int]:
    """Vertices of a connected 2-regular graph in traversal order from vertex 0."""
    order = [0, min(g.adj[0])]
    while True:
        prev, cur = order[-2], order[-1]
        nxt = next(w for w in g.adj[cur] if w != prev)
        if nxt == 0:
            return order
        order.append(nxt)


def random_multigraph(n: int, m: int, seed: int) -> Multigraph:
    """``m`` edges with endpoints drawn by ``random.Random(seed)``.

    Each edge draws ``u`` uniformly from ``0..n-1`` and ``v`` uniformly from
    the other ``n - 1`` vertices, so parallel edges occur but loops do not.
    """
    if n < 2 and m > 0:
        raise BoxicityError("a loop-free multigraph with edges needs n >= 2")
    rng = random.Random(seed)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        edges.append((u, v + (v >= u)))
    return Multigraph(n, tuple(edges))
