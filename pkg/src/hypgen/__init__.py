"""Numerical analysis of polynomial sequences generated by 1/(P(t) + z t^r Q(t)).

The library verifies the zero-count and sign conditions on a generator
(P, Q, r), locates the double-root point and the interval endpoint,
traces the implicit curve pairing angles with real zeros of the generated
polynomials, builds the sequence by an exact coefficient recurrence, and
cross-checks everything through a residue representation and direct root
finding.
"""

from .errors import (
    BracketError,
    DomainError,
    EmptyInput,
    HypgenError,
    HypothesisError,
    MonotonicityViolation,
    MultipleRootError,
    NonConvergence,
    PoleError,
    ZeroAtOrigin,
)
from .expsign import (
    ExpSignCase,
    admissible_x,
    check_sign_dominance,
    exp_poly_sum,
    first_term_value,
)
from .hm_seq import (
    HmSequence,
    RootReport,
    classify_roots,
    d_expansion,
    generate_hm,
    hm_eval,
    poly_roots,
    residue_sum,
)
from .poly_core import (
    DensePoly,
    GeneratorSpec,
    IndexedZeroSet,
    count_neg,
    count_pos,
    eval_at,
    expand,
    make_spec,
    make_zero_set,
)
from .rfunc import (
    HypothesisReport,
    RegionCheckReport,
    check_condition1,
    check_condition2,
    check_sector,
    check_semidisk,
    endpoint_value,
    find_t_a,
    hypothesis_report,
    im_r_weight,
    pr_product,
    r_func,
)
from .tau_curve import (
    TauCurve,
    TauCurveSample,
    angle_of,
    angle_sum_residual,
    check_disk_separation,
    solve_tau,
    trace_curve,
    z_of_theta,
)

__version__ = "0.1.0"

__all__ = [
    "BracketError", "DomainError", "EmptyInput", "HypgenError",
    "HypothesisError", "MonotonicityViolation", "MultipleRootError",
    "NonConvergence", "PoleError", "ZeroAtOrigin",
    "ExpSignCase", "admissible_x", "check_sign_dominance", "exp_poly_sum",
    "first_term_value",
    "HmSequence", "RootReport", "classify_roots", "d_expansion",
    "generate_hm", "hm_eval", "poly_roots", "residue_sum",
    "DensePoly", "GeneratorSpec", "IndexedZeroSet", "count_neg", "count_pos",
    "eval_at", "expand", "make_spec", "make_zero_set",
    "HypothesisReport", "RegionCheckReport", "check_condition1",
    "check_condition2", "check_sector", "check_semidisk", "endpoint_value",
    "find_t_a", "hypothesis_report", "im_r_weight", "pr_product", "r_func",
    "TauCurve", "TauCurveSample", "angle_of", "angle_sum_residual",
    "check_disk_separation", "solve_tau", "trace_curve", "z_of_theta",
]
