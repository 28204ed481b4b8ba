"""Exact real and complex Waring ranks of monomials."""

from .apolarity import (
    Decomposition,
    NoSolution,
    PointSet,
    ProjectivePoint,
    perp_membership,
    solve_decomposition,
    verify_decomposition,
)
from .constructors import (
    GappedRootSet,
    decompose_real,
    gapped_roots,
    min_points_a0_eq_1,
    squares_decomposition,
    upper_bound_points,
)
from .hermite import GapSystem, QuotientAlgebra, check_gap_obstruction, count_real_points, signature
from .monomial import Monomial
from .poly import (
    LinearForm,
    Polynomial,
    apply_diff,
    linear_form_power,
    parse_polynomial,
    poly_add,
    poly_mul,
)
from .ranks import (
    RankReport,
    complex_rank,
    rank_report,
    real_equals_complex,
    real_rank_exact,
    real_rank_lower,
    real_rank_upper,
)
from .univariate import elementary_symmetric, sturm_count

__version__ = "0.1.0"
