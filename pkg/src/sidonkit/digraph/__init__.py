"""Digraph generators, forbidden-pattern detection, random lemmas and exact counting."""

from .core import (
    ClosedWalk,
    DegreeProfile,
    Digraph,
    bidirected,
    bipartite_cayley,
    cayley_digraph,
    degree_profile,
    directed_cycle,
    glm,
    read_digraph,
    walk_type,
    write_digraph,
)
from .counting import (
    CountResult,
    TransitionVector,
    arborescences,
    bareiss_det,
    best_eulerian_count,
    bidirected_kmm,
    count_hamilton_cycles,
    enumerate_eulerian_circuits,
    enumerate_hamilton_cycles,
    glm_hamilton_formula,
    transition_vector_formula,
    transition_vectors,
)
from .graph import (
    Graph,
    complete_bipartite,
    cycle_graph,
    dodecahedron,
    graph_girth,
    hamilton_cycles,
    petersen,
    read_edge_list,
)
from .paths import SigmaFamily, TwoPartCycle, sigma_paths, two_part_cycles
from .patterns import CllResult, FkResult, closed_walks, find_cll, is_fk_free, nonzero_type_walk
from .sampling import SampleResult, layered_subgraph, random_induced_subgraph
