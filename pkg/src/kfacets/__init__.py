"""Exact enumeration of k-sets and k-facets of lifted point sets."""

from .errors import DegeneracyError, GenerationError, InputError
from .facelab import (
    FaceCertificate,
    RadonWitness,
    conic_edge_certificate,
    embedding_face_certificate,
    face_certificate,
    is_weakly_k_neighborly,
    neighborliness_degree,
    radon_partition,
    separation_hyperplane,
    weak_separation,
)
from .facets import (
    KFacetProfile,
    KSetFamily,
    OrientedFacet,
    count_unoriented_halving,
    enumerate_k_facets,
    enumerate_k_sets,
    k_facet_profile,
    k_set_counts,
)
from .formulas import (
    FORMULAS,
    CountFormula,
    circle_count,
    conic_count,
    convex_3d_count,
    convex_bound,
    generally_neighborly_dim,
    homogeneous_count,
    m_neighborly_bound,
    neighborly_e_k,
    perles_bounds,
)
from .genpos import (
    check_conic_general_position,
    check_distinct_first_coordinate,
    check_homogeneous_general_position,
    convex_position_set,
    random_point_set,
)
from .geometry import (
    Hyperplane,
    PointSet,
    hyperplane_through,
    is_general_linear_position,
    orientation,
    point_set,
    rational,
    side_counts,
)
from .liftmaps import (
    MonomialMap,
    circle_map,
    homogeneous_veronese,
    moment_curve,
    neighborly_embedding,
    veronese,
)
from .projection import facets_through_vertex, stereographic_project

__version__ = "0.1.0"
