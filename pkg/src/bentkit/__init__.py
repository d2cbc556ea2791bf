"""Bit-exact toolkit for boolean bent functions.

Truth tables live in Python ints (bit k = value at point index k, LSB
first); every transform and statistic here is exact integer arithmetic.
"""

from .bent import (
    AffineMap,
    FlatSumDistribution,
    affine_group_size_log2,
    apply_affine,
    dual_bent,
    is_bent,
    matrix_rank,
    random_invertible,
    two_flat_sum_distribution,
    two_flats,
)
from .bounds import (
    BoundReport,
    a_n_log2,
    bound_report,
    format_report_table,
    headline_log2,
    load_known_counts,
    q_n,
    simplified_log2,
    t_n_log2,
    theorem_upper_log2,
    tokareva_lower_log2,
    trivial_upper_log2,
)
from .census import (
    CensusResult,
    bent_count,
    enumerate_bent_by_degree,
    enumerate_bent_naive,
)
from .core import (
    BooleanFunction,
    ParseError,
    ResourceCapError,
    evaluate,
    format_bf,
    inner_product,
    make_function,
    max_arity,
    parse_bf,
    point_coords,
    point_index,
    point_weight,
    random_function,
    weight,
    xor_add,
)
from .geometry import (
    Ball,
    FaceMask,
    ball_points,
    coset_representative,
    coset_spectrum,
    coset_sum,
    coset_value_class_sizes,
    covering_coset_count,
    dual_face,
    gaussian_binomial,
    subcube_points,
)
from .reconstruct import (
    BallAssignment,
    check_lemma1,
    lemma1_conclusion,
    lemma1_premise,
    reconstruct_from_ball,
)
from .suites import SUITES
from .transforms import (
    WalshSpectrum,
    check_restriction_identity,
    convolve_pm,
    degree,
    degree_space_log2,
    hadamard_transform,
    moebius,
    walsh_fast,
    walsh_naive,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "Ball",
    "BallAssignment",
    "BooleanFunction",
    "BoundReport",
    "CensusResult",
    "FaceMask",
    "FlatSumDistribution",
    "ParseError",
    "ResourceCapError",
    "SUITES",
    "WalshSpectrum",
    "a_n_log2",
    "affine_group_size_log2",
    "apply_affine",
    "ball_points",
    "bent_count",
    "bound_report",
    "check_lemma1",
    "check_restriction_identity",
    "convolve_pm",
    "coset_representative",
    "coset_spectrum",
    "coset_sum",
    "coset_value_class_sizes",
    "covering_coset_count",
    "degree",
    "degree_space_log2",
    "dual_bent",
    "dual_face",
    "enumerate_bent_by_degree",
    "enumerate_bent_naive",
    "evaluate",
    "format_bf",
    "format_report_table",
    "gaussian_binomial",
    "hadamard_transform",
    "headline_log2",
    "inner_product",
    "is_bent",
    "lemma1_conclusion",
    "lemma1_premise",
    "load_known_counts",
    "make_function",
    "matrix_rank",
    "max_arity",
    "moebius",
    "parse_bf",
    "point_coords",
    "point_index",
    "point_weight",
    "q_n",
    "random_function",
    "random_invertible",
    "reconstruct_from_ball",
    "simplified_log2",
    "subcube_points",
    "t_n_log2",
    "theorem_upper_log2",
    "tokareva_lower_log2",
    "trivial_upper_log2",
    "two_flat_sum_distribution",
    "two_flats",
    "walsh_fast",
    "walsh_naive",
    "weight",
    "xor_add",
]
