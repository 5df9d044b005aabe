"""Interval and box representations, with an exact verifier.

Intervals are closed with integer endpoints; two intervals that touch at a
single point intersect.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import BoxicityError
from .graphs import Edge, Graph


@dataclass(frozen=True)
class IntervalRep:
    """``intervals[v] = (l, r)`` for every vertex ``v``."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ivs = tuple((int(l), int(r)) for l, r in self.intervals)
        for v, (l, r) in enumerate(ivs):
            if l > r:
                raise BoxicityError(f"vertex {v} has empty interval [{l}, {r}]")
        object.__setattr__(self, "intervals", ivs)

    @property
    def n(self) -> int:
        return len(self.intervals)

    def __getitem__(self, v: int) -> tuple[int, int]:
        return self.intervals[v]

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        a = np.array(self.intervals, dtype=np.int64).reshape(-1, 2)
        return a[:, 0], a[:, 1]


@dataclass(frozen=True)
class BoxRep:
    """One :class:`IntervalRep` per dimension, all over the same vertices."""

    dims: tuple[IntervalRep, ...]

    def __post_init__(self):
        dims = tuple(self.dims)
        if not dims:
            raise BoxicityError("a box representation needs at least one dimension")
        if len({d.n for d in dims}) != 1:
            raise BoxicityError("all dimensions must cover the same vertex set")
        object.__setattr__(self, "dims", dims)

    @property
    def k(self) -> int:
        return len(self.dims)

    @property
    def n(self) -> int:
        return self.dims[0].n

    def box(self, v: int) -> tuple[tuple[int, int], ...]:
        return tuple(d[v] for d in self.dims)

    @classmethod
    def from_boxes(cls, boxes: Sequence[Sequence[tuple[int, int]]], k: int | None = None) -> BoxRep:
        if k is None:
            k = len(boxes[0])
        return cls(tuple(IntervalRep(tuple(b[i] for b in boxes)) for i in range(k)))


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    missing_edges: list[Edge] = field(default_factory=list)
    excess_pairs: list[Edge] = field(default_factory=list)
    supergraph_violations: list[tuple[int, Edge]] = field(default_factory=list)

    def summary(self, limit: int = 10) -> str:
        if self.valid:
            return "valid"
        lines = ["invalid"]
        for name, items in (
            ("missing edge", self.missing_edges),
            ("excess pair", self.excess_pairs),
            ("supergraph violation (dim, edge)", self.supergraph_violations),
        ):
            for item in items[:limit]:
                lines.append(f"  {name}: {item}")
            if len(items) > limit:
                lines.append(f"  ... {len(items) - limit} more {name}s")
        return "\n".join(lines)


def _intersection_matrix(rep: IntervalRep) -> np.ndarray:
    l, r = rep.arrays()
    m = (l[:, None] <= r[None, :]) & (l[None, :] <= r[:, None])
    np.fill_diagonal(m, False)
    return m


def _adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=bool)
    if g.m:
        e = np.array(g.edges, dtype=np.int64)
        a[e[:, 0], e[:, 1]] = True
        a[e[:, 1], e[:, 0]] = True
    return a


def _graph_from_matrix(m: np.ndarray) -> Graph:
    us, vs = np.nonzero(np.triu(m, 1))
    return Graph(m.shape[0], tuple(zip(us.tolist(), vs.tolist())))


def _pairs(m: np.ndarray) -> list[Edge]:
    us, vs = np.nonzero(np.triu(m, 1))
    return list(zip(us.tolist(), vs.tolist()))


def interval_graph_of(rep: IntervalRep) -> Graph:
    return _graph_from_matrix(_intersection_matrix(rep))


def intersect_graphs(gs: Sequence[Graph]) -> Graph:
    if not gs:
        raise BoxicityError("need at least one graph to intersect")
    n = gs[0].n
    if any(g.n != n for g in gs):
        raise BoxicityError("graphs to intersect must have the same vertex count")
    common = set(gs[0].edges)
    for g in gs[1:]:
        common &= g.edge_set
    return Graph(n, tuple(common))


def verify_box_representation(g: Graph, rep: BoxRep) -> VerifyReport:
    """Compare the box intersection graph of ``rep`` against ``g``.

    Besides the verdict, reports every (dimension, edge) pair where a single
    dimension separates an edge of ``g``.
    """
    if rep.n != g.n:
        raise BoxicityError(f"representation covers {rep.n} vertices, graph has {g.n}")
    adj = _adjacency_matrix(g)
    inter = np.ones_like(adj)
    violations: list[tuple[int, Edge]] = []
    for i, dim in enumerate(rep.dims):
        m = _intersection_matrix(dim)
        inter &= m
        violations.extend((i, e) for e in _pairs(adj & ~m))
    np.fill_diagonal(inter, False)
    missing = _pairs(adj & ~inter)
    excess = _pairs(inter & ~adj)
    return VerifyReport(not (missing or excess or violations), missing, excess, violations)


def reduce_dimensions(g: Graph, rep: BoxRep) -> BoxRep:
    """Greedily drop dimensions, in ascending order, while the rep stays valid."""
    if not verify_box_representation(g, rep).valid:
        raise BoxicityError("cannot reduce an invalid representation")
    adj = _adjacency_matrix(g)
    mats = [_intersection_matrix(d) for d in rep.dims]
    keep = list(range(rep.k))
    for i in range(rep.k):
        if len(keep) == 1:
            break
        rest = [j for j in keep if j != i]
        inter = np.logical_and.reduce([mats[j] for j in rest])
        if np.array_equal(inter, adj):
            keep = rest
    return BoxRep(tuple(rep.dims[j] for j in keep))


def place_isolated(rep: BoxRep, isolated: Iterable[int]) -> BoxRep:
    """Insert new isolated vertices into ``rep``.

    The result has ``rep.n + len(isolated)`` vertices; the listed ids are the
    new ones and the old vertices fill the remaining ids in ascending order.
    Each new vertex is a point beyond every endpoint of dimension 0 and reuses
    that point in the other dimensions.
    """
    iso = sorted(set(isolated))
    if not iso:
        return rep
    total = rep.n + len(iso)
    if iso[-1] >= total or iso[0] < 0:
        raise BoxicityError("isolated vertex ids must lie in the extended vertex range")
    top = max((r for _, r in rep.dims[0].intervals), default=0)
    points = {v: top + 1 + j for j, v in enumerate(iso)}
    kept = [v for v in range(total) if v not in points]
    dims = []
    for d in rep.dims:
        ivs = [(0, 0)] * total
        for old, v in enumerate(kept):
            ivs[v] = d[old]
        for v, x in points.items():
            ivs[v] = (x, x)
        dims.append(IntervalRep(tuple(ivs)))
    return BoxRep(tuple(dims))


def restrict(rep: BoxRep, vertices: Sequence[int]) -> BoxRep:
    """Keep only ``vertices``, relabeled in the given order."""
    return BoxRep(tuple(IntervalRep(tuple(d[v] for v in vertices)) for d in rep.dims))


def concat(reps: Sequence[BoxRep]) -> BoxRep:
    return BoxRep(tuple(d for r in reps for d in r.dims))


def separate_endpoints(rep: IntervalRep) -> IntervalRep:
    """An equivalent representation in which all 2n endpoints are distinct.

    Endpoints are ranked by value, with left endpoints ahead of right
    endpoints at equal values; ties within a kind break by vertex id. Every
    comparison ``l(a) <= r(b)`` keeps its outcome, so the intersection graph
    is unchanged.
    """
    keys = []
    for v, (l, r) in enumerate(rep.intervals):
        keys.append((l, 0, v))
        keys.append((r, 1, v))
    keys.sort()
    out = [[0, 0] for _ in range(rep.n)]
    for rank, (_, side, v) in enumerate(keys):
        out[v][side] = rank
    return IntervalRep(tuple((l, r) for l, r in out))


def separate_box_endpoints(rep: BoxRep) -> BoxRep:
    return BoxRep(tuple(separate_endpoints(d) for d in rep.dims))
