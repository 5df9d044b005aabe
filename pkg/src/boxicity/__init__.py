"""Construct, verify and certify box representations of graphs."""

from .constructions import (
    SplitDecomposition,
    SubdivisionRep,
    boxrep_degree2_bipartite,
    boxrep_fully_subdivided,
    boxrep_line_graph,
    boxrep_subdivided_complete,
    boxrep_subdivision_auto,
    build_universal_split_interval,
    clique_side_doubling,
    lift_critical_clique_rep,
)
from .errors import BoxicityError, CapExceeded
from .graphs import (
    Coloring,
    Graph,
    Multigraph,
    VertexPartition,
    critical_clique_partition,
    from_edge_list,
    full_subdivision,
    greedy_coloring,
    hypercube,
    induced_subgraph,
    line_graph,
    quotient_by_partition,
    square_on,
)
from .intervals import (
    BoxRep,
    IntervalRep,
    VerifyReport,
    intersect_graphs,
    interval_graph_of,
    place_isolated,
    reduce_dimensions,
    verify_box_representation,
)
from .oracle import BoxicityCertificate, exact_boxicity, is_interval_graph, maximal_cliques
from .suitable import (
    Permutation,
    PermutationFamily,
    beta,
    build_simply_3_suitable,
    extract_family_from_boxrep,
    is_simply_3_suitable,
    min_simply_3_suitable_size,
)

__version__ = "0.1.0"
