"""Exact tools for potentially nilpotent patterns and the Nilpotent-Jacobian method."""

from .constructions import (
    Am_power_closed_form,
    AmSpec,
    build_Am_matrix,
    build_Am_pattern,
    build_Cm_matrix,
    build_Cm_pattern,
    Cm_power_closed_form,
    CmSpec,
    PowerClosedForm,
    solve_star_nilpotent,
    star_matrix,
    star_pattern,
    tridiagonal_pattern,
)
from .errors import NilpatError
from .linalg import (
    IndexResult,
    adjugate_xI_minus,
    char_poly,
    det,
    nilpotent_index,
    rank,
    solve,
)
from .matrix import Rat, RatMatrix, mat_mul, parse_matrix, render_matrix
from .nj import (
    Exhausted,
    NJReport,
    VariableSelection,
    Verdict,
    default_selection,
    full_index_precheck,
    jacobian_prime,
    nj_certificate,
    nj_search_selection,
    polynomials_independent,
    star_pair_selection,
)
from .patterns import (
    Cell,
    Kind,
    Pattern,
    PatternGraph,
    Permutation,
    classify_tree,
    conforms,
    graph_of,
    is_balanced_tree_pattern,
    is_recursive_star,
    is_superpattern,
    is_symmetric,
    parse_pattern,
    pattern_of,
    permute,
    render_pattern,
)
from .poly import PolyMatrix, UniPoly

__version__ = "0.1.0"
