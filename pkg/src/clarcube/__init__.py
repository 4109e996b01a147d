"""Resonance graphs of surface-embedded graphs.

Builds resonance graphs of graphs cellularly embedded in closed
surfaces with respect to a set of even faces, verifies their induced
hypercube embeddings, and checks the equality of the Clar covering
(Zhang-Zhang) polynomial with the cube polynomial of the resonance
graph by two independent enumerations.
"""

from .cubes import (
    CubeLabeling,
    component_face_subgraph,
    compute_labeling,
    is_isometric_labeling,
    is_median_graph,
    is_partial_cube,
    median_status,
    partial_cube_status,
    verify_induced_embedding,
)
from .embedded import (
    EmbeddedGraph,
    EvenFaceSet,
    Face,
    build,
    euler_genus,
    even_faces,
    trace_faces,
    validate_even_face_set,
)
from .embfile import parse_emb, write_emb
from .matching import (
    Matching,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    is_alternating_face,
    rotate_face,
)
from .polynomials import (
    ClarCover,
    CubeSubgraph,
    IntegerPolynomial,
    check_4cycle_lemma,
    check_equivalence,
    cube_polynomial,
    enumerate_clar_covers,
    enumerate_induced_hypercubes,
    mk_map,
    zz_polynomial,
)
from .report import run_report
from .resonance import (
    Component,
    QuotientGraph,
    ResonanceGraph,
    build_resonance_graph,
    check_cycle_face_parity,
    components,
    delete_class_components,
    quotient_graph,
)

__version__ = "0.1.0"

__all__ = [
    "ClarCover",
    "Component",
    "CubeLabeling",
    "CubeSubgraph",
    "EmbeddedGraph",
    "EvenFaceSet",
    "Face",
    "IntegerPolynomial",
    "Matching",
    "QuotientGraph",
    "ResonanceGraph",
    "build",
    "build_resonance_graph",
    "check_4cycle_lemma",
    "check_cycle_face_parity",
    "check_equivalence",
    "component_face_subgraph",
    "components",
    "compute_labeling",
    "count_perfect_matchings",
    "cube_polynomial",
    "delete_class_components",
    "enumerate_clar_covers",
    "enumerate_induced_hypercubes",
    "enumerate_perfect_matchings",
    "euler_genus",
    "even_faces",
    "is_alternating_face",
    "is_isometric_labeling",
    "is_median_graph",
    "is_partial_cube",
    "median_status",
    "mk_map",
    "parse_emb",
    "partial_cube_status",
    "quotient_graph",
    "rotate_face",
    "run_report",
    "trace_faces",
    "validate_even_face_set",
    "verify_induced_embedding",
    "write_emb",
    "zz_polynomial",
    "__version__",
]
