"""Exact and numeric spectral toolkit for the Rumin Laplacian on CR spheres.

Enumerates the full eigenvalue/multiplicity spectrum from highest-weight
data, evaluates the contact analytic torsion function by regularized
summation and by its closed form, and verifies the algebraic identities the
closed form rests on.
"""

from .kernels import BACKEND as KERNEL_BACKEND
from .spectrum import (
    BlockFamily,
    CaseRangeError,
    IrrepBlock,
    NormConstants,
    SpectrumSlice,
    all_families,
    block,
    case_v_identity_value,
    case_v_mixed_eigenvalue,
    decompose,
    eigenvalue_formula,
    lie_derivative_eigenvalue,
    norm_constants,
    norm_route_eigenvalue,
    operator_norm_squares,
    spectrum_slice,
    squared_norm,
)
from .torsion import (
    DegreeWeight,
    DivergenceError,
    KappaEstimate,
    TorsionReport,
    cancellation_check,
    degree_weights,
    degree_zetas_direct,
    kappa_closed,
    kappa_closed_deriv,
    kappa_direct,
    kappa_reduced,
    tail_bound,
    torsion_report,
)
from .weights import (
    Case,
    EnumerationBudgetError,
    HighestWeight,
    InvalidLabelError,
    RuminLabel,
    gt_pattern_count,
    label_to_weight,
    special_dimension,
    weyl_dimension,
)
from .zeta import (
    DEFAULT_PRECISION_BITS,
    DimensionPolynomial,
    PoleError,
    PrecisionError,
    ZetaValue,
    bernoulli_number,
    c_coefficients,
    elementary_symmetric,
    hurwitz_zeta,
    hurwitz_zeta_deriv,
    riemann_zeta,
    riemann_zeta_deriv,
    sigma,
    vanishing_correction_check,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BlockFamily",
    "Case",
    "CaseRangeError",
    "DEFAULT_PRECISION_BITS",
    "DegreeWeight",
    "DimensionPolynomial",
    "DivergenceError",
    "EnumerationBudgetError",
    "HighestWeight",
    "IrrepBlock",
    "InvalidLabelError",
    "KERNEL_BACKEND",
    "KappaEstimate",
    "NormConstants",
    "PoleError",
    "PrecisionError",
    "RuminLabel",
    "SpectrumSlice",
    "TorsionReport",
    "ZetaValue",
    "all_families",
    "bernoulli_number",
    "block",
    "c_coefficients",
    "cancellation_check",
    "case_v_identity_value",
    "case_v_mixed_eigenvalue",
    "decompose",
    "degree_weights",
    "degree_zetas_direct",
    "eigenvalue_formula",
    "elementary_symmetric",
    "gt_pattern_count",
    "hurwitz_zeta",
    "hurwitz_zeta_deriv",
    "kappa_closed",
    "kappa_closed_deriv",
    "kappa_direct",
    "kappa_reduced",
    "label_to_weight",
    "lie_derivative_eigenvalue",
    "norm_constants",
    "norm_route_eigenvalue",
    "operator_norm_squares",
    "riemann_zeta",
    "riemann_zeta_deriv",
    "sigma",
    "special_dimension",
    "spectrum_slice",
    "squared_norm",
    "tail_bound",
    "torsion_report",
    "vanishing_correction_check",
    "weyl_dimension",
]
