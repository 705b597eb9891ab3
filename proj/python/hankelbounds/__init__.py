"""Sharp third Hankel determinant bounds for inverse coefficients of bounded turning functions."""

from ._core import (
    BoundReport,
    BoxMaxResult,
    CaratheodoryCoeffs,
    ClassCoeffs,
    ClassId,
    CriticalPoint,
    InverseCoeffs,
    PointKind,
    SampleMode,
    SamplingSummary,
    SchurParams,
    VerifyConfig,
    branch_condition_R,
    branch_condition_R1,
    coefficient_bound_check,
    consistency_suite,
    envelope,
    extremal_f0_arctanh,
    extremal_f0_theta,
    extremal_fstar_R1,
    from_caratheodory_R,
    from_caratheodory_R1,
    h3,
    h3_inverse_R,
    h3_inverse_R1,
    h3_schur_R,
    h3_schur_R1,
    hankel_det,
    herglotz_c,
    inverse_coeffs,
    maximize_objective,
    objective_eval,
    r_from_starlike,
    report_json,
    report_text,
    revert,
    sample_h3,
    sample_schur,
    schur_to_c,
    starlike_from_r,
    toeplitz_min_eig,
    verify_bound,
)

__all__ = [
    "BoundReport",
    "BoxMaxResult",
    "CaratheodoryCoeffs",
    "ClassCoeffs",
    "ClassId",
    "CriticalPoint",
    "InverseCoeffs",
    "PointKind",
    "SampleMode",
    "SamplingSummary",
    "SchurParams",
    "VerifyConfig",
    "branch_condition_R",
    "branch_condition_R1",
    "coefficient_bound_check",
    "consistency_suite",
    "envelope",
    "extremal_f0_arctanh",
    "extremal_f0_theta",
    "extremal_fstar_R1",
    "from_caratheodory_R",
    "from_caratheodory_R1",
    "h3",
    "h3_inverse_R",
    "h3_inverse_R1",
    "h3_schur_R",
    "h3_schur_R1",
    "hankel_det",
    "herglotz_c",
    "inverse_coeffs",
    "maximize_objective",
    "objective_eval",
    "r_from_starlike",
    "report_json",
    "report_text",
    "revert",
    "sample_h3",
    "sample_schur",
    "schur_to_c",
    "starlike_from_r",
    "toeplitz_min_eig",
    "verify_bound",
]
