"""Exact conformal-block localization toolkit.

Thin package wrapper re-exporting the pybind11 core.
"""

from ._cblock import (  # noqa: F401
    CblockError,
    acceptance,
    canonical_form,
    cb_dim,
    decorated_p_polynomial,
    is_conformal_block,
    kz_exponent,
    kz_verify,
    l_dim,
    lagrange_fuzz,
    p_polynomial,
    p_polynomial_symbolic,
    q_basis,
    qw_basis,
    remark52_check,
    schur,
    __version__,
)
