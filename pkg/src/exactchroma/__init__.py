"""Colourings of exact distance graphs of chordal graphs, with brute-force checks."""

from .accolor import (
    PredecessorColoring,
    ac_graph,
    clique_color,
    cliques_adjacent,
    mu_of_clique,
    predecessor_coloring,
)
from .bounds import bound_largepow_exponent, bound_main1, bound_main2, bound_tw
from .chordal import (
    EliminationOrder,
    InvalidOrderError,
    NotChordalError,
    chordless_cycle,
    clique_number_chordal,
    greedy_proper_coloring,
    is_chordal,
    is_perfect_elimination,
    mcs_order,
)
from .exact import (
    BoundReport,
    TupleColoring,
    color_distances,
    combined_coloring,
    coloring_report,
    exact_color,
    injective_port_label,
    level_coloring_even,
    level_coloring_odd,
    sigma_vertex,
)
from .facefill import FaceFillGadget, face_fill_gadget, patch_cut_vertex, verify_distance_preservation
from .generators import (
    GenSpec,
    complete_dary_tree,
    generate,
    interval_graph,
    random_interval_graph,
    random_ktree,
)
from .graph import (
    INF,
    DistanceOracle,
    Graph,
    GraphError,
    LoopError,
    bfs_distances,
    connected_components,
    exact_distance_graph,
    from_edge_list,
    max_degree,
    power_graph,
    union_graphs,
)
from .leveling import (
    LevelPartition,
    ancestor_clique,
    check_shadow_complete,
    level_partition,
    level_subgraph,
    shadow,
    upper_components,
)
from .oracle import brute_all_pairs, brute_chromatic_number, brute_is_chordal, verify_proper

__version__ = "0.1.0"
