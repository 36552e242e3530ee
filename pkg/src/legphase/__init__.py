"""Legendre functions of large real degree in degree-independent time.

Evaluates P_nu(cos t), Q_nu(cos t), the complex combination
psi_nu = P - (2/pi) i Q, and the derivative of the associated
nonoscillatory phase function, through an expansion whose cost depends
only on its order N, never on nu.  Slower independent oracles
(adaptive quadrature, three-term recurrence, hypergeometric series) and
a cosine-sum baseline with a rigorous remainder bound are included for
validation and benchmarking.

The hot kernels run from a compiled extension when it is built, with a
pure-Python fallback selected automatically at import.
"""

from ._backend import backend_name
from .asymptotic import (
    THETA_MIN,
    EvaluationPoint,
    PhaseEvaluation,
    eval_psi,
    eval_psi_pair,
    eval_psi_prime,
    evaluate,
    legendre_pq,
    phase_derivative,
)
from .coeffs import (
    CLOSED_FORM_ORDERS,
    CoefficientSet,
    coefficients,
    coeffs_closed_form,
    coeffs_solve,
    moment_residuals,
)
from .errors import DomainError, NumericalError, ToleranceError
from .hankel import SERIES_RADIUS, bessel_j0y0, bessel_j1y1, s_prime, scaled_h0, scaled_h1
from .oracles import (
    QuadratureSpec,
    legendre_recurrence,
    p_hypergeometric,
    phase_derivative_quadrature,
    psi_pair_quadrature,
    psi_quadrature,
)
from .sampling import SamplePlan, splitmix64, theta_samples, unit_doubles
from .stieltjes import (
    StieltjesResult,
    c_coefficients,
    gamma_ratio,
    minimizing_term_count,
    stieltjes_p,
)

__version__ = "0.1.0"

__all__ = [
    "CLOSED_FORM_ORDERS",
    "CoefficientSet",
    "DomainError",
    "EvaluationPoint",
    "NumericalError",
    "PhaseEvaluation",
    "QuadratureSpec",
    "SERIES_RADIUS",
    "SamplePlan",
    "StieltjesResult",
    "THETA_MIN",
    "ToleranceError",
    "backend_name",
    "bessel_j0y0",
    "bessel_j1y1",
    "c_coefficients",
    "coefficients",
    "coeffs_closed_form",
    "coeffs_solve",
    "eval_psi",
    "eval_psi_pair",
    "eval_psi_prime",
    "evaluate",
    "gamma_ratio",
    "legendre_pq",
    "legendre_recurrence",
    "minimizing_term_count",
    "moment_residuals",
    "p_hypergeometric",
    "phase_derivative",
    "phase_derivative_quadrature",
    "psi_pair_quadrature",
    "psi_quadrature",
    "s_prime",
    "scaled_h0",
    "scaled_h1",
    "splitmix64",
    "stieltjes_p",
    "theta_samples",
    "unit_doubles",
]
