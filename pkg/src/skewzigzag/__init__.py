"""Exact construction and classification of skew-zigzag algebras of graphs."""

from .algebra import (
    AlgebraElement,
    ZigzagAlgebra,
    build,
    check_frobenius,
    grading,
    gram,
    multiply,
    normal_form,
    trace,
)
from .classify import (
    EdgeScaling,
    IsoCertificate,
    OrientationCoefficients,
    check_bipartite_obstruction,
    construct_vertex_fixing_iso,
    decide_equivalent,
    decide_isomorphic,
    orientation_to_coefficients,
    verify_homomorphism,
)
from .coefficients import (
    CohomologyClass,
    SkewCoefficients,
    act,
    act_class,
    class_of,
    compose,
    construct_from_class,
    cycle_product,
    evaluate_class,
    invert,
    ones,
    path_product,
    validate,
)
from .cycles import CycleVector, boundary, decompose, fundamental_basis, recompose, walk_to_vector
from .errors import SkewZigzagError
from .graphs import (
    Graph,
    GraphAutomorphism,
    Walk,
    apply_automorphism,
    double_quiver,
    enumerate_automorphisms,
    is_bipartite,
    is_connected,
    parse_graph,
    spanning_tree,
)

__version__ = "0.1.0"

__all__ = [
    "act",
    "act_class",
    "AlgebraElement",
    "apply_automorphism",
    "boundary",
    "build",
    "check_bipartite_obstruction",
    "check_frobenius",
    "class_of",
    "CohomologyClass",
    "compose",
    "construct_from_class",
    "construct_vertex_fixing_iso",
    "cycle_product",
    "CycleVector",
    "decide_equivalent",
    "decide_isomorphic",
    "decompose",
    "double_quiver",
    "EdgeScaling",
    "enumerate_automorphisms",
    "evaluate_class",
    "fundamental_basis",
    "grading",
    "gram",
    "Graph",
    "GraphAutomorphism",
    "invert",
    "is_bipartite",
    "is_connected",
    "IsoCertificate",
    "multiply",
    "normal_form",
    "ones",
    "orientation_to_coefficients",
    "OrientationCoefficients",
    "parse_graph",
    "path_product",
    "recompose",
    "SkewCoefficients",
    "SkewZigzagError",
    "spanning_tree",
    "trace",
    "validate",
    "verify_homomorphism",
    "Walk",
    "walk_to_vector",
    "ZigzagAlgebra",
]
