"""Binary linear codes from hypergraph incidence matrices.

The incidence matrix of a hypergraph generates a binary linear code (and
every binary code arises this way).  This package builds the hypergraph
families of interest, computes code parameters with two independent
minimum-distance engines (codeword enumeration and vertex-subset
enumeration), and tests self-orthogonality and self-duality both directly
and through structural criteria.
"""

from .analysis import AnalysisReport, EngineDisagreement, analyze_hypergraph, analyze_matrix
from .codes import (
    DistanceResult,
    LinearCode,
    auto_distance_search,
    codeword_distance_search,
    dual,
    eonv_distance_search,
    from_generator,
    graph_self_duality_criterion,
    is_self_dual,
    is_self_orthogonal,
    min_distance,
    min_distance_via_eonv,
    structural_self_orthogonality,
    weight_distribution,
)
from .gf2core import (
    BitMatrix,
    BitVector,
    format_matrix,
    gram,
    matvec,
    nullspace_basis,
    parse_matrix,
    rank,
    row_combination,
    row_space_equal,
    rref,
)
from .gf2poly import (
    GF2Poly,
    NEG_INFINITY,
    block_circulant_bound,
    cyclic_code_dimension,
    eonv_weight_via_polys,
    poly_add,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_rem,
    row_polynomial,
    x_power_plus_one,
)
from .hypergraph import (
    Hypergraph,
    SubsetSearchResult,
    block_row,
    circulant_hypergraph,
    complement_edge,
    complete_3partite,
    edges_at,
    eonv,
    eonv_min,
    eonv_search,
    f_count,
    fano_circulant,
    format_hypergraph,
    from_incidence_matrix,
    incidence_matrix,
    is_connected,
    parse_hypergraph,
    projective_geometry,
    random_hypergraph,
    random_uniform_hypergraph,
    subset_mask,
)
from .limits import DEFAULT_ENUM_CAP, ENUM_CAP_ENV_VAR, EnumerationCapError, resolve_enum_cap

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BitMatrix",
    "BitVector",
    "DEFAULT_ENUM_CAP",
    "DistanceResult",
    "ENUM_CAP_ENV_VAR",
    "EngineDisagreement",
    "EnumerationCapError",
    "GF2Poly",
    "Hypergraph",
    "LinearCode",
    "NEG_INFINITY",
    "SubsetSearchResult",
    "analyze_hypergraph",
    "analyze_matrix",
    "auto_distance_search",
    "block_circulant_bound",
    "block_row",
    "circulant_hypergraph",
    "codeword_distance_search",
    "complement_edge",
    "complete_3partite",
    "cyclic_code_dimension",
    "dual",
    "edges_at",
    "eonv",
    "eonv_distance_search",
    "eonv_min",
    "eonv_search",
    "eonv_weight_via_polys",
    "f_count",
    "fano_circulant",
    "format_hypergraph",
    "format_matrix",
    "from_generator",
    "from_incidence_matrix",
    "gram",
    "graph_self_duality_criterion",
    "incidence_matrix",
    "is_connected",
    "is_self_dual",
    "is_self_orthogonal",
    "matvec",
    "min_distance",
    "min_distance_via_eonv",
    "nullspace_basis",
    "parse_hypergraph",
    "parse_matrix",
    "poly_add",
    "poly_divmod",
    "poly_gcd",
    "poly_mul",
    "poly_rem",
    "projective_geometry",
    "random_hypergraph",
    "random_uniform_hypergraph",
    "rank",
    "resolve_enum_cap",
    "row_combination",
    "row_polynomial",
    "row_space_equal",
    "rref",
    "structural_self_orthogonality",
    "subset_mask",
    "weight_distribution",
    "x_power_plus_one",
]
