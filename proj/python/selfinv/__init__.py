"""Self-inversive binary forms: exact conversions, discriminants and root counts."""

from ._selfinv import (
    PreconditionError,
    RealBinaryForm,
    SelfInversiveForm,
    ValidationError,
    classify_circle_roots,
    deflate,
    dis_via_hankel,
    dis_via_resultant,
    discriminant_report,
    find_roots,
    hankel_determinant,
    hankel_matrix,
    phi,
    phi_closed_form,
    phi_inverse,
    power_sums,
    psi,
    psi_inverse,
    sample_w,
    validate,
)

__all__ = [
    "PreconditionError",
    "RealBinaryForm",
    "SelfInversiveForm",
    "ValidationError",
    "classify_circle_roots",
    "deflate",
    "dis_via_hankel",
    "dis_via_resultant",
    "discriminant_report",
    "find_roots",
    "hankel_determinant",
    "hankel_matrix",
    "phi",
    "phi_closed_form",
    "phi_inverse",
    "power_sums",
    "psi",
    "psi_inverse",
    "sample_w",
    "validate",
]
