"""Exact-arithmetic toolkit for finite regular cell complexes.

Decides Cohen-Macaulay, l-CM and Gorenstein* properties, computes
enriched (co)homology tables, and materializes the cycle of six free
square-free complexes attached to a complex, over Q or GF(p).
"""

from .builtins import CORPUS, builtin_names, get_builtin
from .cm import (
    CMReport,
    gorenstein_top_ideal,
    is_cm_cell,
    is_cm_poset,
    is_gorenstein_star,
    lcm_order,
    simplicial_is_cm,
    simplicial_lcm_order,
)
from .complexes import (
    CellComplex,
    SimplicialComplex,
    boundary_simplex,
    bowtie_graph,
    build_complex,
    cross_polytope_boundary,
    cube_boundary,
    from_json_dict,
    prism,
    simplex,
    solid_square,
    square_boundary,
    to_simplicial,
    triangle_plus_edge,
    triangle_wedge,
    triangular_prism_boundary,
)
from .errors import (
    BoundaryNotSphereError,
    CellmacError,
    GradingError,
    IntersectionPropertyError,
    InvalidComplexError,
    MalformedInputError,
    NonCommutingMorphismError,
    NonSimplicialError,
    NotCohenMacaulayError,
    NotGorensteinStarError,
    PreconditionError,
)
from .fields import QQ, Field
from .hexagon import (
    CORNER_KEYS,
    FreeSqComplex,
    HexagonBundle,
    build_hexagon,
    canonical_module,
    dualize,
    enriched_complex,
    evaluate,
    homology_table,
    is_linear,
    linear_strand,
    minimal_free_resolution,
    minimalize,
    polytope_quotient_ring,
    resolve_dual,
    resolve_module,
    shift,
    strand_complex,
    verify_hexagon_identity,
    verify_strand_duality,
)
from .homology import (
    GradedPieceTable,
    enriched_cohomology_table,
    enriched_homology_table,
    enriched_rank,
    reduced_homology_dims,
)
from .posets import Poset, face_poset
from .sqfree import (
    SqModComplex,
    SqModMorphism,
    SquareFreeModule,
    alexander_dual,
    alexander_dual_complex,
    k_i_module,
    minimal_generators,
)
from .tables import cross_check_tables, simplicial_oracle_tables

__version__ = "0.1.0"

__all__ = [
    "BoundaryNotSphereError",
    "CMReport",
    "CORNER_KEYS",
    "CORPUS",
    "CellComplex",
    "CellmacError",
    "Field",
    "FreeSqComplex",
    "GradedPieceTable",
    "GradingError",
    "HexagonBundle",
    "IntersectionPropertyError",
    "InvalidComplexError",
    "MalformedInputError",
    "NonCommutingMorphismError",
    "NonSimplicialError",
    "NotCohenMacaulayError",
    "NotGorensteinStarError",
    "Poset",
    "PreconditionError",
    "QQ",
    "SimplicialComplex",
    "SqModComplex",
    "SqModMorphism",
    "SquareFreeModule",
    "alexander_dual",
    "alexander_dual_complex",
    "boundary_simplex",
    "bowtie_graph",
    "build_complex",
    "build_hexagon",
    "builtin_names",
    "canonical_module",
    "cross_check_tables",
    "cross_polytope_boundary",
    "cube_boundary",
    "dualize",
    "enriched_cohomology_table",
    "enriched_complex",
    "enriched_homology_table",
    "enriched_rank",
    "evaluate",
    "face_poset",
    "from_json_dict",
    "get_builtin",
    "gorenstein_top_ideal",
    "homology_table",
    "is_cm_cell",
    "is_cm_poset",
    "is_gorenstein_star",
    "is_linear",
    "k_i_module",
    "lcm_order",
    "linear_strand",
    "minimal_free_resolution",
    "minimal_generators",
    "minimalize",
    "polytope_quotient_ring",
    "prism",
    "reduced_homology_dims",
    "resolve_dual",
    "resolve_module",
    "shift",
    "simplex",
    "simplicial_is_cm",
    "simplicial_lcm_order",
    "simplicial_oracle_tables",
    "solid_square",
    "square_boundary",
    "strand_complex",
    "to_simplicial",
    "triangle_plus_edge",
    "triangle_wedge",
    "triangular_prism_boundary",
    "verify_hexagon_identity",
    "verify_strand_duality",
]
