"""Exact-arithmetic cohomology rings of real permutohedral varieties.

The additive model is the rational span of alternating permutations on
even subsets of [n+1]; the multiplicative structure is a signed shuffle
product over restrictable permutations.  Every computation has an
independent brute-force counterpart built from simplicial homology of the
type-A flag complexes.
"""

from .blockperm import (
    EMPTY_PERM,
    BlockPerm,
    alt_basis,
    block_normalize,
    cross_cycle,
    euler_zigzag,
    is_alternating,
    make_block_perm,
    marker_simplex,
    parse_index_set,
    parse_perm,
    prec_less,
    prefix_set,
)
from .coeffgraph import (
    CoeffGraph,
    arc_weight,
    build_graph,
    emit_dot,
    face_decompose,
    graph_coeff,
    walk_coeff,
)
from .homology import (
    betti_formula,
    betti_oracle,
    build_hat,
    build_induced,
    express_in_alt_basis,
    homotopy_projection,
    join_pushforward,
    pairing_check,
    reduced_betti,
)
from .ring import (
    GradedClass,
    cup,
    is_restrictable,
    rearrangement_sign,
    restrict_perm,
    ring_multiply,
    weyl_act,
)
from .straighten import (
    AltVector,
    FormalSum,
    NormalFormTable,
    garnir_expand,
    normal_form,
    rewrite_coeff,
)

__version__ = "0.1.0"

__all__ = [
    "AltVector",
    "BlockPerm",
    "CoeffGraph",
    "EMPTY_PERM",
    "FormalSum",
    "GradedClass",
    "NormalFormTable",
    "alt_basis",
    "arc_weight",
    "betti_formula",
    "betti_oracle",
    "block_normalize",
    "build_graph",
    "build_hat",
    "build_induced",
    "cross_cycle",
    "cup",
    "emit_dot",
    "euler_zigzag",
    "express_in_alt_basis",
    "face_decompose",
    "garnir_expand",
    "graph_coeff",
    "homotopy_projection",
    "is_alternating",
    "is_restrictable",
    "join_pushforward",
    "make_block_perm",
    "marker_simplex",
    "normal_form",
    "pairing_check",
    "parse_index_set",
    "parse_perm",
    "prec_less",
    "prefix_set",
    "rearrangement_sign",
    "reduced_betti",
    "restrict_perm",
    "rewrite_coeff",
    "ring_multiply",
    "walk_coeff",
    "weyl_act",
]
