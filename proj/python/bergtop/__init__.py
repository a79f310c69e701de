"""Weighted-shift Toeplitz operators on Bergman spaces of a family of
unbounded complete Reinhardt domains in C^2.

Everything is implemented in the C++ core; this package re-exports it.
"""

from bergtop._core import (  # noqa: F401
    BudgetExceeded,
    ComposedOperator,
    DomainSpec,
    PointOutsideSupportedRegion,
    ShiftOperator,
    Symbol,
    TruncatedMatrix,
    UndefinedWeightError,
    WindowTooSmall,
    ZeroProductCertificate,
    __version__,
    bound_constant,
    compose,
    degree_scan,
    diagonal_count,
    domain_svg,
    expint_en,
    kernel_partial_sum,
    lattice_svg,
    lattice_window,
    matrix_multiply,
    matrix_power,
    member,
    moment,
    mu_x,
    mu_y,
    mu_z,
    nilpotency_degree,
    quadrature_oracle,
    shift_stays,
    validate_certificate,
    verify_proposition,
    zero_product_search,
)
