"""Exact boxicity by brute force, for small graphs only.

The boxicity of G is the least number of interval supergraphs of G whose
edge sets intersect to E(G). Every interval supergraph is enumerated as a
subset of non-edges, and a minimum cover of the non-edges is searched for.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import BoxicityError, CapExceeded
from .graphs import Graph, complete_graph, full_subdivision
from .intervals import BoxRep, IntervalRep, interval_graph_of, intersect_graphs
from .suitable import suitable_size

MAX_CLIQUE_N = 32
MAX_INTERVAL_N = 12
MAX_NON_EDGES = 20


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _bron_kerbosch(adj: list[int], r: int, p: int, x: int, out: list[int]) -> None:
    if not p and not x:
        out.append(r)
        return
    pivot_pool = p | x
    pivot = max(_bits(pivot_pool), key=lambda u: (adj[u] & p).bit_count())
    cand = p & ~adj[pivot]
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        _bron_kerbosch(adj, r | low, p & adj[v], x & adj[v], out)
        p &= ~low
        x |= low
        cand &= ~low


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def maximal_cliques(g: Graph, cap: int = MAX_CLIQUE_N) -> list[tuple[int, ...]]:
    """All maximal cliques, each sorted, listed in lexicographic order."""
    if g.n > cap:
        raise CapExceeded(f"maximal clique enumeration is capped at n={cap}, got {g.n}")
    if g.n == 0:
        return []
    out: list[int] = []
    _bron_kerbosch(_masks(g), 0, (1 << g.n) - 1, 0, out)
    return sorted(tuple(_bits(c)) for c in out)


class IntervalCheck(NamedTuple):
    ok: bool
    clique_order: list[tuple[int, ...]] | None
    rep: IntervalRep | None

    def __bool__(self) -> bool:
        return self.ok


def _consecutive_order(cliques: list[int]) -> list[int] | None:
    """Order the cliques so that each vertex's cliques are consecutive.

    A vertex that appeared earlier but is absent from the last placed clique
    can never reappear. The union of placed cliques is determined by the
    set of placed cliques, so (placed, last) is a complete search state.
    """
    c = len(cliques)
    full = (1 << c) - 1

    @lru_cache(maxsize=None)
    def extend(placed: int, last: int) -> tuple[int, ...] | None:
        if placed == full:
            return ()
        started = 0
        for i in _bits(placed):
            started |= cliques[i]
        closed = started & ~cliques[last] if last >= 0 else 0
        for i in range(c):
            if placed >> i & 1 or cliques[i] & closed:
                continue
            rest = extend(placed | 1 << i, i)
            if rest is not None:
                return (i,) + rest
        return None

    order = extend(0, -1)
    return None if order is None else list(order)


def is_interval_graph(g: Graph, cap: int = MAX_INTERVAL_N) -> IntervalCheck:
    """Decide whether ``g`` is an interval graph.

    On success also returns the consecutive clique ordering and a
    representation where each vertex spans the positions of its cliques.
    """
    if g.n > cap:
        raise CapExceeded(f"interval recognition is capped at n={cap}, got {g.n}")
    cliques = maximal_cliques(g)
    if len(cliques) > max(g.n, 1):
        # interval graphs are chordal and have at most n maximal cliques
        return IntervalCheck(False, None, None)
    masks = [sum(1 << v for v in c) for c in cliques]
    order = _consecutive_order(masks)
    if order is None:
        return IntervalCheck(False, None, None)
    first = [-1] * g.n
    last = [-1] * g.n
    for pos, i in enumerate(order):
        for v in cliques[i]:
            if first[v] < 0:
                first[v] = pos
            last[v] = pos
    rep = IntervalRep(tuple(zip(first, last)))
    return IntervalCheck(True, [cliques[i] for i in order], rep)


@dataclass(frozen=True)
class BoxicityCertificate:
    k: int
    witnesses: tuple[Graph, ...]
    reps: tuple[IntervalRep, ...]

    def as_boxrep(self) -> BoxRep:
        return BoxRep(self.reps)


def _certify(g: Graph, witnesses: list[Graph], reps: list[IntervalRep]) -> BoxicityCertificate:
    if intersect_graphs(witnesses) != g:
        raise BoxicityError("certificate witnesses do not intersect to the graph")
    for w, r in zip(witnesses, reps):
        if interval_graph_of(r) != w:
            raise BoxicityError("certificate interval rep does not realize its witness")
    return BoxicityCertificate(len(witnesses), tuple(witnesses), tuple(reps))


def _trivial_rep(g: Graph) -> IntervalRep:
    if g.m == 0:
        return IntervalRep(tuple((v, v) for v in range(g.n)))
    return IntervalRep(tuple([(0, 0)] * g.n))


def exact_boxicity(g: Graph, max_non_edges: int = MAX_NON_EDGES, max_n: int = MAX_INTERVAL_N) -> BoxicityCertificate:
    """Minimum number of interval supergraphs intersecting to ``g``.

    Among minimum covers the lexicographically smallest one (over interval
    supergraphs sorted by their added non-edge mask) is returned.
    """
    if g.m == 0 or g.is_complete():
        return _certify(g, [g], [_trivial_rep(g)])
    if g.n > max_n:
        raise CapExceeded(f"exact boxicity is capped at n={max_n}, got {g.n}")
    non_edges = g.non_edges()
    t = len(non_edges)
    if t > max_non_edges:
        raise CapExceeded(f"exact boxicity is capped at {max_non_edges} non-edges, got {t}")

    def supergraph(added: int) -> Graph:
        extra = [non_edges[i] for i in _bits(added)]
        return Graph(g.n, g.edges + tuple(extra))

    # minimal added sets only: a superset adds edges without covering more
    minimal: list[int] = []
    reps: dict[int, IntervalRep] = {}
    for added in sorted(range(1 << t), key=lambda a: (a.bit_count(), a)):
        if any(m & added == m for m in minimal):
            continue
        check = is_interval_graph(supergraph(added), max_n)
        if check.ok:
            minimal.append(added)
            reps[added] = check.rep
    minimal.sort()
    full = (1 << t) - 1
    covers = [full & ~a for a in minimal]
    suffix = [0] * (len(covers) + 1)
    for i in range(len(covers) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | covers[i]

    def search(start: int, uncovered: int, left: int, chosen: list[int]) -> list[int] | None:
        if not uncovered:
            return chosen
        if left == 0 or uncovered & ~suffix[start]:
            return None
        for i in range(start, len(covers)):
            if uncovered & ~suffix[i]:
                return None
            found = search(i + 1, uncovered & ~covers[i], left - 1, chosen + [i])
            if found is not None:
                return found
        return None

    for k in range(1, len(covers) + 1):
        found = search(0, full, k, [])
        if found is not None:
            picked = [minimal[i] for i in found]
            return _certify(g, [supergraph(a) for a in picked], [reps[a] for a in picked])
    raise BoxicityError("no cover found; the non-edge cover search is inconsistent")


class LowerBoundCheck(NamedTuple):
    holds: bool
    boxicity: int
    bound: Fraction


def check_subdivision_lower_bound(n: int, max_non_edges: int = MAX_NON_EDGES, max_n: int = MAX_INTERVAL_N) -> LowerBoundCheck:
    """Compare the exact boxicity of the subdivided ``K_n`` with its lower bound."""
    if n < 2:
        raise BoxicityError("n must be at least 2")
    g, _ = full_subdivision(complete_graph(n))
    cert = exact_boxicity(g, max_non_edges, max_n)
    bound = Fraction(suitable_size(n), 2)
    return LowerBoundCheck(cert.k >= bound, cert.k, bound)
