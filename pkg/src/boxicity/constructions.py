"""Box representations of fully subdivided graphs and of line graphs.

Fractional coordinates of the form ``a + (q - 1)/c_max`` are scaled by
``c_max`` to the integers ``a * c_max + (q - 1)``; scaling preserves the
order of endpoints, hence every intersection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoxicityError
from .graphs import (
    Coloring,
    Graph,
    Multigraph,
    VertexPartition,
    check_isomorphism,
    complete_graph,
    critical_clique_partition,
    cycle_order,
    full_subdivision,
    greedy_coloring,
    is_odd_cycle,
    line_graph,
    quotient_by_partition,
    square_on,
)
from .intervals import BoxRep, IntervalRep, concat, place_isolated, restrict, verify_box_representation
from .suitable import build_simply_3_suitable, ceil_log2_log2, suitable_size


@dataclass(frozen=True)
class SubdivisionRep:
    graph: Graph
    rep: BoxRep
    family_size: int
    method: str

    @property
    def dims(self) -> int:
        return self.rep.k


def _edge_index_dimension(h: Graph) -> IntervalRep:
    # original vertices span every edge point; subdivision vertex j is the point j
    m = h.m
    return IntervalRep(tuple([(1, m)] * h.n + [(j, j) for j in range(1, m + 1)]))


def boxrep_subdivided_complete(n: int) -> SubdivisionRep:
    """``ceil(log2 log2 n) + 2`` dimensions for the subdivided ``K_n``."""
    if n < 2:
        raise BoxicityError("the subdivided complete graph needs n >= 2")
    kn = complete_graph(n)
    g, _ = full_subdivision(kn)
    family = build_simply_3_suitable(n)
    dims = []
    for sigma in family.perms:
        ivs = [(sigma.inv(p), sigma.inv(p)) for p in range(1, n + 1)]
        for u, v in kn.edges:
            a, b = sigma.inv(u + 1), sigma.inv(v + 1)
            ivs.append((min(a, b), max(a, b)))
        dims.append(IntervalRep(tuple(ivs)))
    dims.append(_edge_index_dimension(kn))
    return SubdivisionRep(g, BoxRep(tuple(dims)), len(family), "complete")


def boxrep_fully_subdivided(h: Graph, col: Coloring) -> SubdivisionRep:
    """Representation of the full subdivision of ``h`` from a proper coloring.

    Uses ``k + 2`` dimensions where ``k`` is the suitable-family size for the
    number of colors: ``k`` coordinate dimensions, one edge-index dimension,
    and one mirrored copy of the last coordinate dimension.
    """
    if h.m == 0:
        raise BoxicityError("the graph must have at least one edge")
    if not col.is_proper_for(h):
        raise BoxicityError("coloring is not proper for the graph")
    c = col.c
    family = build_simply_3_suitable(c)
    k = len(family)
    c_max = max(len(cls) for cls in col.classes)
    # vertex v is the q-th vertex (1-based) of class p (1-based)
    klass = [col.color_of[v] + 1 for v in range(h.n)]
    rank = [0] * h.n
    for cls in col.classes:
        for q, v in enumerate(cls, start=1):
            rank[v] = q

    def subdivided_dim(coord) -> IntervalRep:
        pts = [coord(klass[v], rank[v]) for v in range(h.n)]
        ivs = [(x, x) for x in pts]
        for u, v in h.edges:
            ivs.append((min(pts[u], pts[v]), max(pts[u], pts[v])))
        return IntervalRep(tuple(ivs))

    dims = [subdivided_dim(lambda p, q, s=s: s.inv(p) * c_max + (q - 1)) for s in family.perms]
    dims.append(_edge_index_dimension(h))
    last = family.perms[-1]
    dims.append(subdivided_dim(lambda p, q: ((c + 1) - last.inv(p)) * c_max + (q - 1)))
    g, _ = full_subdivision(h)
    return SubdivisionRep(g, BoxRep(tuple(dims)), k, "coloring")


def _even_cycle_rep(cycle: list[int], n: int) -> BoxRep:
    """Two dimensions for a cycle visiting ``cycle`` in order (length >= 4).

    Dimension one is the path ``c1 .. c(N-1)`` with ``c0`` spanning all of it;
    dimension two keeps ``c0`` next to ``c1`` and ``c(N-1)`` only and merges
    the rest into a clique.
    """
    length = len(cycle)
    d1 = [(0, 0)] * n
    d2 = [(0, 0)] * n
    d1[cycle[0]] = (1, length)
    d2[cycle[0]] = (0, 0)
    for i in range(1, length):
        d1[cycle[i]] = (i, i + 1)
        d2[cycle[i]] = (0, 1) if i in (1, length - 1) else (1, 1)
    return BoxRep((IntervalRep(tuple(d1)), IntervalRep(tuple(d2))))


def boxrep_subdivision_auto(h: Graph, order=None) -> SubdivisionRep:
    """Pick the construction by the shape of ``h``.

    Complete graphs use the suitable-family construction directly, an odd
    cycle subdivides into an even cycle with a two-dimensional
    representation, everything else goes through a greedy coloring.
    """
    if h.m == 0:
        raise BoxicityError("the graph must have at least one edge")
    if h.is_complete():
        return boxrep_subdivided_complete(h.n)
    if is_odd_cycle(h):
        g, _ = full_subdivision(h)
        return SubdivisionRep(g, _even_cycle_rep(cycle_order(g), g.n), 0, "odd-cycle")
    return boxrep_fully_subdivided(h, greedy_coloring(h, order))


def subdivision_dimension_bound(h: Graph, colors: int) -> int:
    """Dimension guaranteed by :func:`boxrep_subdivision_auto` given the color count."""
    if h.is_complete():
        return suitable_size(h.n) + 1
    if is_odd_cycle(h):
        return 2
    return suitable_size(colors) + 2


def clique_side_doubling(gb: Graph, rep: BoxRep, a_side) -> BoxRep:
    """Turn a rep of ``gb`` into a rep of ``gb`` plus a clique on ``a_side``.

    Each input dimension yields two: one stretching every A-interval left to
    the smallest A left endpoint, one stretching right to the largest A right
    endpoint. All primed dimensions come first, then all double-primed ones.
    """
    a = set(a_side)
    if any(not 0 <= v < gb.n for v in a):
        raise BoxicityError("clique side contains a vertex out of range")
    if not verify_box_representation(gb, rep).valid:
        raise BoxicityError("input representation is not valid for the graph")
    if not a:
        return BoxRep(rep.dims + rep.dims)
    left, right = [], []
    for d in rep.dims:
        s = min(d[v][0] for v in a)
        t = max(d[v][1] for v in a)
        left.append(IntervalRep(tuple((s, d[v][1]) if v in a else d[v] for v in range(gb.n))))
        right.append(IntervalRep(tuple((d[v][0], t) if v in a else d[v] for v in range(gb.n))))
    return BoxRep(tuple(left + right))


def with_clique(g: Graph, side) -> Graph:
    side = sorted(set(side))
    extra = [(u, v) for i, u in enumerate(side) for v in side[i + 1 :]]
    return Graph(g.n, tuple(set(g.edges) | set(extra)))


def _matching_rep(g: Graph) -> BoxRep:
    """One dimension for a graph of maximum degree at most 1."""
    ivs = [None] * g.n
    for j, (u, v) in enumerate(g.edges):
        ivs[u] = ivs[v] = (j, j)
    nxt = g.m
    for v in range(g.n):
        if ivs[v] is None:
            ivs[v] = (nxt, nxt)
            nxt += 1
    return BoxRep((IntervalRep(tuple(ivs)),))


@dataclass(frozen=True)
class Degree2Result:
    rep: BoxRep
    reduced: Graph | None = None  # the graph whose full subdivision was represented
    colors: int = 0
    method: str = "matching"


def boxrep_degree2_bipartite_detailed(gb: Graph, x_side, y_side) -> Degree2Result:
    x = sorted(set(x_side))
    y = sorted(set(y_side))
    if sorted(x + y) != list(range(gb.n)) or set(x) & set(y):
        raise BoxicityError("X and Y must partition the vertex set")
    ys = set(y)
    for u, v in gb.edges:
        if (u in ys) == (v in ys):
            raise BoxicityError(f"edge ({u}, {v}) does not join X to Y")
    for v in y:
        if gb.degree(v) > 2:
            raise BoxicityError(f"Y-vertex {v} has degree {gb.degree(v)} > 2")
    seen: dict[frozenset[int], int] = {}
    for v in y:
        nb = gb.adj[v]
        if nb and nb in seen:
            raise BoxicityError(f"Y-vertices {seen[nb]} and {v} have the same neighborhood")
        seen[nb] = v
    if gb.max_degree() <= 1:
        return Degree2Result(_matching_rep(gb))

    isolated_y = [v for v in y if gb.degree(v) == 0]
    dropped = set(isolated_y)
    kept = [v for v in range(gb.n) if v not in dropped]
    # G': drop isolated Y-vertices, give every degree-1 Y-vertex a pendant X-vertex
    index = {v: i for i, v in enumerate(kept)}
    edges = [(index[u], index[v]) for u, v in gb.edges]
    nxt = len(kept)
    pendants = []
    for v in y:
        if gb.degree(v) == 1:
            edges.append((index[v], nxt))
            pendants.append(nxt)
            nxt += 1
    g1 = Graph(nxt, tuple(edges))
    x1 = sorted([index[v] for v in x] + pendants)
    y1 = [index[v] for v in y if v not in dropped]

    reduced = square_on(g1, x1)
    sub = boxrep_subdivision_auto(reduced)
    colors = greedy_coloring(reduced).c

    # G' is the full subdivision of the reduced graph: X'-vertices keep their
    # rank, a Y'-vertex becomes the subdivision vertex of its two neighbors
    xpos = {v: i for i, v in enumerate(x1)}
    edge_pos = {e: j for j, e in enumerate(reduced.edges)}
    to_sub = {v: xpos[v] for v in x1}
    for v in y1:
        a, b = sorted(xpos[w] for w in g1.adj[v])
        to_sub[v] = reduced.n + edge_pos[(a, b)]
    if not check_isomorphism(g1, sub.graph, to_sub):
        raise BoxicityError("augmented graph is not the full subdivision of its square")

    rep = restrict(sub.rep, [to_sub[index[v]] for v in kept])
    rep = place_isolated(rep, isolated_y)
    return Degree2Result(rep, reduced, colors, sub.method)


def boxrep_degree2_bipartite(gb: Graph, x_side, y_side) -> BoxRep:
    """Representation of a bipartite graph whose Y-side has degree at most 2.

    Distinct non-isolated Y-vertices must have distinct neighborhoods.
    """
    return boxrep_degree2_bipartite_detailed(gb, x_side, y_side).rep


def lift_critical_clique_rep(g: Graph, part: VertexPartition, cc_rep: BoxRep) -> BoxRep:
    """Give every vertex the box of its block's quotient vertex."""
    quotient, _ = quotient_by_partition(g, part)
    if not verify_box_representation(quotient, cc_rep).valid:
        raise BoxicityError("representation is not valid for the critical clique graph")
    where = part.block_of()
    return restrict(cc_rep, where)


def build_universal_split_interval(n: int, clique_side) -> IntervalRep:
    side = set(clique_side)
    if any(not 0 <= v < n for v in side):
        raise BoxicityError("clique side contains a vertex out of range")
    ivs = []
    j = 0
    for v in range(n):
        if v in side:
            ivs.append((0, n + 1))
        else:
            j += 1
            ivs.append((j + 1, j + 1))
    return IntervalRep(tuple(ivs))


@dataclass(frozen=True)
class ClassSplit:
    """Per color class: the split graph and the stages that represent it."""

    color: int
    independent: tuple[int, ...]  # the color class itself
    split: Graph  # G plus a clique on everything outside the class
    partition: VertexPartition
    quotient: Graph
    representatives: tuple[int, ...]  # one per block; a non-class vertex for clique-side blocks
    x_side: tuple[int, ...]  # quotient vertices of pure class blocks
    y_side: tuple[int, ...]  # quotient vertices of the remaining blocks
    bipartite: Graph  # quotient with y_side made independent
    reduced: Graph | None
    colors: int
    bipartite_dims: int
    dims: int


@dataclass(frozen=True)
class SplitDecomposition:
    classes: tuple[ClassSplit, ...] = ()
    final_color: int = 0
    final_clique_side: tuple[int, ...] = ()
    universal: Graph | None = None
    coloring: Coloring | None = None
    complete: bool = False

    def graphs(self) -> list[Graph]:
        out = [cs.split for cs in self.classes]
        if self.universal is not None:
            out.append(self.universal)
        return out

    def dump(self) -> str:
        lines = []
        if self.complete:
            lines.append("complete line graph: 1 dimension")
            return "\n".join(lines) + "\n"
        assert self.coloring is not None
        lines.append(f"colors {self.coloring.c}")
        for cs in self.classes:
            lines.append(f"[class {cs.color}]")
            lines.append(f"class_size {len(cs.independent)}")
            lines.append(f"split_graph n={cs.split.n} m={cs.split.m}")
            lines.append(f"critical_cliques {len(cs.partition.blocks)}")
            lines.append(f"quotient n={cs.quotient.n} m={cs.quotient.m}")
            lines.append(f"x_side {len(cs.x_side)} y_side {len(cs.y_side)}")
            lines.append(f"bipartite m={cs.bipartite.m} max_degree={cs.bipartite.max_degree()}")
            if cs.reduced is not None:
                lines.append(f"reduced n={cs.reduced.n} m={cs.reduced.m} colors={cs.colors}")
            lines.append(f"bipartite_dims {cs.bipartite_dims}")
            lines.append(f"dims {cs.dims}")
        lines.append(f"[final class {self.final_color}]")
        lines.append(f"clique_side {len(self.final_clique_side)}")
        lines.append("dims 1")
        return "\n".join(lines) + "\n"


def line_graph_dimension_bound(max_degree: int) -> int:
    """``2 D (ceil(log2 log2 max(D, 2)) + 3) + 1`` for maximum degree ``D``."""
    return 2 * max_degree * (ceil_log2_log2(max(max_degree, 2)) + 3) + 1


def boxrep_line_graph(h: Multigraph, order=None) -> tuple[Graph, BoxRep, SplitDecomposition]:
    """Box representation of the line graph of a multigraph.

    Every color class but the last contributes its split graph, represented
    through critical cliques, a degree-2 bipartite graph and clique-side
    doubling; the last class contributes one interval dimension.
    """
    if h.m == 0:
        raise BoxicityError("the multigraph must have at least one edge")
    g, _ = line_graph(h)
    if g.is_complete():
        rep = BoxRep((IntervalRep(tuple([(0, 0)] * g.n)),))
        return g, rep, SplitDecomposition(complete=True)

    col = greedy_coloring(g, order)
    reps = []
    splits = []
    for i in range(col.c - 1):
        cls = col.classes[i]
        members = set(cls)
        outside = [v for v in range(g.n) if v not in members]
        split = with_clique(g, outside)
        part = critical_clique_partition(split)
        quotient, _ = quotient_by_partition(split, part)
        x_side = [b for b, blk in enumerate(part.blocks) if all(v in members for v in blk)]
        y_side = [b for b, blk in enumerate(part.blocks) if any(v not in members for v in blk)]
        representatives = tuple(
            blk[0] if b in set(x_side) else min(v for v in blk if v not in members)
            for b, blk in enumerate(part.blocks)
        )
        ys = set(y_side)
        bip = Graph(quotient.n, tuple((u, v) for u, v in quotient.edges if not (u in ys and v in ys)))
        for v in y_side:
            if bip.degree(v) > 2:
                # a proper edge coloring gives each edge at most two neighbors per color
                raise BoxicityError(f"class {i}: clique-side vertex {v} has {bip.degree(v)} neighbors in the class")
        d2 = boxrep_degree2_bipartite_detailed(bip, x_side, y_side)
        doubled = clique_side_doubling(bip, d2.rep, y_side)
        lifted = lift_critical_clique_rep(split, part, doubled)
        reps.append(lifted)
        splits.append(
            ClassSplit(
                i, cls, split, part, quotient, representatives, tuple(x_side), tuple(y_side),
                bip, d2.reduced, d2.colors, d2.rep.k, lifted.k,
            )
        )

    last = col.c - 1
    clique_side = tuple(v for v in range(g.n) if col.color_of[v] != last)
    final = build_universal_split_interval(g.n, clique_side)
    reps.append(BoxRep((final,)))
    side = set(clique_side)
    universal = Graph(g.n, tuple((u, v) for u in range(g.n) for v in range(u + 1, g.n) if u in side or v in side))
    decomp = SplitDecomposition(tuple(splits), last, clique_side, universal, col)
    return g, concat(reps), decomp
