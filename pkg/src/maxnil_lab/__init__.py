"""Tools for building and certifying maximal linklessly embeddable graphs.

The package splits into construction (graph primitives, named families),
decision (intrinsic linking and K6-minor tests with replayable minor
witnesses, maximality by exhaustive augmentation), and structure
(clique-sum criteria, planar rotation systems, the two-apex linkless
certificate). Everything decision-shaped returns evidence a caller can
re-verify without trusting the search that produced it.
"""

from maxnil_lab.canon import automorphism_orbits, canonical_form, is_isomorphic
from maxnil_lab.cliquesum import (
    CliqueSumSpec,
    clique_sum,
    decompose_at_cut,
    hls_clique_sum_is_il,
    induced_clique_or_c4_subgraph,
    is_strongly_separating,
    k2_sum_maxnil_predicate,
    k3_sum_maxnil_predicate,
    k4_sum_maxnil_predicate,
)
from maxnil_lab.embedding import (
    RotationSystem,
    certify_nil_via_lemma21,
    cycle_sides,
    enumerate_cycles,
    is_planar,
    lemma21_condition,
    planar_embedding,
    rotation_from_text,
    rotation_to_text,
)
from maxnil_lab.errors import (
    ConfigurationError,
    Graph6Error,
    GraphError,
    UndecidedError,
)
from maxnil_lab.families import (
    BoundsRow,
    FamilyParams,
    bounds_table,
    build_family,
    family_3n5,
    fig7_family,
    fig7_graph,
    graph_g,
    h_k,
    jorgensen_family,
    jorgensen_graph,
    k5_sum_example,
    q13_3,
    q_extension,
    theorem_main_graph,
)
from maxnil_lab.formats import dot_export, graph6_decode, graph6_encode
from maxnil_lab.graph import (
    Graph,
    add_edge,
    build_graph,
    complete_graph,
    complete_multipartite,
    contract_edge,
    delete_edge,
    delete_vertex,
    minimal_vertex_cuts,
    subdivide_edge,
    vertex_connectivity,
)
from maxnil_lab.linking import (
    VerificationReport,
    has_k6_minor,
    is_intrinsically_linked,
    is_maximal_k6_minor_free,
    is_maxnil,
    petersen_family,
)
from maxnil_lab.minors import MinorModel, find_minor, verify_minor_model

__version__ = "0.1.0"

__all__ = [
    "BoundsRow",
    "CliqueSumSpec",
    "ConfigurationError",
    "FamilyParams",
    "Graph",
    "Graph6Error",
    "GraphError",
    "MinorModel",
    "RotationSystem",
    "UndecidedError",
    "VerificationReport",
    "add_edge",
    "automorphism_orbits",
    "bounds_table",
    "build_family",
    "build_graph",
    "canonical_form",
    "certify_nil_via_lemma21",
    "clique_sum",
    "complete_graph",
    "complete_multipartite",
    "contract_edge",
    "cycle_sides",
    "decompose_at_cut",
    "delete_edge",
    "delete_vertex",
    "dot_export",
    "enumerate_cycles",
    "family_3n5",
    "fig7_family",
    "fig7_graph",
    "find_minor",
    "graph6_decode",
    "graph6_encode",
    "graph_g",
    "h_k",
    "has_k6_minor",
    "hls_clique_sum_is_il",
    "induced_clique_or_c4_subgraph",
    "is_intrinsically_linked",
    "is_isomorphic",
    "is_maximal_k6_minor_free",
    "is_maxnil",
    "is_planar",
    "is_strongly_separating",
    "jorgensen_family",
    "jorgensen_graph",
    "k2_sum_maxnil_predicate",
    "k3_sum_maxnil_predicate",
    "k4_sum_maxnil_predicate",
    "k5_sum_example",
    "lemma21_condition",
    "minimal_vertex_cuts",
    "petersen_family",
    "planar_embedding",
    "q13_3",
    "q_extension",
    "rotation_from_text",
    "rotation_to_text",
    "subdivide_edge",
    "theorem_main_graph",
    "verify_minor_model",
    "vertex_connectivity",
]
