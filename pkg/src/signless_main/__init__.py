"""Main signless Laplacian eigenvalues, 2-walk parabolic graphs and the bicyclic classification."""

from .canon import canonical_certificate, is_isomorphic
from .families import BaseShape, FamilySpec, base_shape, make_family, parse_family
from .graph import (
    CoreDecomposition,
    Graph,
    TwoWalkProfile,
    cycle_rank,
    degree_profile,
    delete_pendants,
    from_edges,
    is_connected,
    min_degree,
    parse_graph6,
    to_graph6,
)
from .parabolic import (
    NotParabolic,
    Parabolic,
    ParabolicParams,
    Regular,
    audit_lemmas,
    check_parabolic,
    derive_params,
)
from .spectra import eigen_decompose, graph_spectrum, main_eigenvalue_count, signless_laplacian, walk_matrix

__all__ = [
    "BaseShape", "CoreDecomposition", "FamilySpec", "Graph", "NotParabolic", "Parabolic",
    "ParabolicParams", "Regular", "TwoWalkProfile", "audit_lemmas", "base_shape",
    "canonical_certificate", "check_parabolic", "cycle_rank", "degree_profile",
    "delete_pendants", "derive_params", "eigen_decompose", "from_edges", "graph_spectrum", "is_connected",
    "is_isomorphic", "main_eigenvalue_count", "make_family", "min_degree", "parse_family",
    "parse_graph6", "signless_laplacian", "to_graph6", "walk_matrix",
]
